//! The involution `τ` and the orthogonality conditions at the level of
//! points.

use bilinear_forms::BilinearForm;
use coordinate_ring::{gl_index, pullback_tau, RingMorphism};
use graded_core::{Degree, Matrix, Rational};
use num_traits::Zero;

use crate::{ModuleElement, PointAuto, PointError};

fn sign(e: Degree) -> Rational {
    graded_core::rational::unit_sign(e.rem_euclid(2) == 1)
}

fn check_space(beta: &BilinearForm, f: &PointAuto) -> Result<(), PointError> {
    if beta.space() != f.space() {
        return Err(PointError::SpaceMismatch);
    }
    Ok(())
}

/// `τ_pt(F)^κ_λ = φ_F^*(τ^*(y^κ_λ))`, where `φ_F^*(y^κ_λ) = F^κ_λ`.
pub fn tau_point(beta: &BilinearForm, f: &PointAuto) -> Result<PointAuto, PointError> {
    check_space(beta, f)?;
    let composite = pullback_tau(beta)?.then(&f.psi_inverse())?;
    PointAuto::psi(f.space(), f.algebra(), &composite)
}

/// The rational matrix of `τ_pt` acting on entries: the coefficient at row
/// `gl_index(κ, λ)` and column `gl_index(ρ, σ)` is the coefficient of
/// `y^ρ_σ` in `τ^*(y^κ_λ)`.
pub fn tau_point_matrix(beta: &BilinearForm) -> Result<Matrix, PointError> {
    let tau: RingMorphism = pullback_tau(beta)?;
    let n2 = tau.source().len();
    let mut out = Matrix::zeros(n2, n2);
    for (row, img) in tau.images().iter().enumerate() {
        for (m, c) in img.terms() {
            let word = m.word();
            debug_assert_eq!(word.len(), 1);
            out[(row, word[0])] = c.clone();
        }
    }
    Ok(out)
}

/// The matrix form of the orthogonality condition:
///
/// `Σ (-1)^{|t_κ|(|t_σ|-1) + |t_ρ|(1+ℓ)} F^ρ_λ g_{ρσ} F^σ_κ = (-1)^{|t_λ|(1+ℓ)} g_{λκ}`
///
/// for all `λ, κ`, with `g` the flat matrix of the form.
pub fn is_orthogonal_point(beta: &BilinearForm, f: &PointAuto) -> Result<bool, PointError> {
    check_space(beta, f)?;
    let v = beta.space();
    let n = v.dim();
    let ell = beta.ell();
    let g = beta.flat_matrix();
    let algebra = f.algebra();
    for lambda in 0..n {
        for kappa in 0..n {
            let mut lhs = algebra.zero();
            for rho in 0..n {
                let f_rl = f.entry(rho, lambda);
                if f_rl.is_zero() {
                    continue;
                }
                for sigma in 0..n {
                    let g_rs = &g[(rho, sigma)];
                    let f_sk = f.entry(sigma, kappa);
                    if g_rs.is_zero() || f_sk.is_zero() {
                        continue;
                    }
                    let e = v.degree(kappa) * (v.degree(sigma) - 1) + v.degree(rho) * (1 + ell);
                    lhs = lhs.add(&algebra.mul(f_rl, f_sk).scale(&(sign(e) * g_rs)));
                }
            }
            let rhs = algebra.constant(sign(v.degree(lambda) * (1 + ell)) * &g[(lambda, kappa)]);
            if lhs != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `⟨F(Φ_λ), F(Φ_κ)⟩ = ⟨Φ_λ, Φ_κ⟩` for all frame vectors.
pub fn preserves_frame_pairing(beta: &BilinearForm, f: &PointAuto) -> Result<bool, PointError> {
    check_space(beta, f)?;
    let v = beta.space();
    let algebra = f.algebra();
    let frames: Vec<ModuleElement> = (0..v.dim()).map(|l| ModuleElement::frame(v, algebra, l)).collect();
    let images = frames.iter().map(|p| p.apply(f)).collect::<Result<Vec<_>, _>>()?;
    for (p, fp) in frames.iter().zip(&images) {
        for (q, fq) in frames.iter().zip(&images) {
            if crate::pairing(beta, fp, fq)? != crate::pairing(beta, p, q)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether `τ_pt(F) F = 1`.
pub fn is_tau_orthogonal_point(beta: &BilinearForm, f: &PointAuto) -> Result<bool, PointError> {
    let product = tau_point(beta, f)?.multiply(f)?;
    Ok(product == PointAuto::identity(f.space(), f.algebra()))
}

/// The coefficient vectors, over the entries of degree `d` (positions
/// `gl_index(κ, λ)` with `|t_λ| - |t_κ| = d`), of a basis of the points
/// `X` with `τ_pt(X) = -X` whose entries are all multiples of one monomial
/// of degree `d`.
pub fn skew_entry_patterns(beta: &BilinearForm, d: Degree) -> Result<Vec<Vec<Rational>>, PointError> {
    let v = beta.space();
    let n = v.dim();
    let s = tau_point_matrix(beta)?;
    let block: Vec<usize> = (0..n)
        .flat_map(|k| (0..n).map(move |l| (k, l)))
        .filter(|&(k, l)| v.degree(l) - v.degree(k) == d)
        .map(|(k, l)| gl_index(n, k, l))
        .collect();
    let sub = s.submatrix(&block, &block);
    let shifted = sub.add(&Matrix::identity(block.len()));
    Ok(shifted
        .kernel()
        .into_iter()
        .map(|vec| {
            let mut full = vec![Rational::zero(); n * n];
            for (pos, c) in block.iter().zip(vec) {
                full[*pos] = c;
            }
            full
        })
        .collect())
}
