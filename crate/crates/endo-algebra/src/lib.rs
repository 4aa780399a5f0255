//! The graded Lie algebra `gl(V)` of a graded space, the involution `τ`
//! induced by a nondegenerate form, and the decomposition
//! `gl(V) = Sym(V,β) ⊕ o(V,β)` (or `sp(V,β)` for skew forms).
//!
//! Elements of `gl(V)` are [`GradedMap`]s from `V` to itself. Coefficient
//! vectors use the standard basis `Δ_λ^κ` in the order `λ·n + κ`, which is
//! the row-major order of the stored matrix.

use std::collections::BTreeSet;

use bilinear_forms::{BilinearForm, FormError};
use graded_core::rational::unit_sign;
use graded_core::sign::{is_negative, parity};
use graded_core::{Degree, GradedError, GradedMap, GradedSpace, Matrix, Rational};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error(transparent)]
    Graded(#[from] GradedError),

    #[error(transparent)]
    Form(#[from] FormError),

    #[error("expected an endomorphism of the form's space")]
    NotEndomorphism,

    #[error("expected a degree 0 map, got degree {0}")]
    NonzeroDegree(Degree),
}

/// Which eigenspace of `τ` a subspace is: `+1` (Sym) or `-1` (Skew).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SubspaceTag {
    Sym,
    Skew,
}

/// A homogeneous basis of a subspace of `gl(V)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EndoSubspace {
    pub tag: SubspaceTag,
    pub basis: Vec<GradedMap>,
}

impl EndoSubspace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the degree `d` part.
    pub fn dim_in_degree(&self, d: Degree) -> usize {
        self.basis.iter().filter(|a| a.degree() == d).count()
    }
}

/// The output of [`decompose`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub sym: EndoSubspace,
    pub skew: EndoSubspace,
}

/// The standard basis `Δ_λ^κ` of `gl(V)`, in the order `λ·n + κ`.
pub fn gl_basis(v: &GradedSpace) -> Result<Vec<GradedMap>, EndoError> {
    let n = v.dim();
    let mut out = Vec::with_capacity(n * n);
    for l in 0..n {
        for k in 0..n {
            out.push(GradedMap::matrix_unit(v, l, k)?);
        }
    }
    Ok(out)
}

/// Degrees `|t_λ| - |t_κ|` occurring in `gl(V)`, increasing.
pub fn gl_degrees(v: &GradedSpace) -> Vec<Degree> {
    let mut set = BTreeSet::new();
    for a in v.degrees() {
        for b in v.degrees() {
            set.insert(a - b);
        }
    }
    set.into_iter().collect()
}

/// Coefficients of `a` in the standard basis, in the order `λ·n + κ`.
pub fn coefficients(a: &GradedMap) -> Vec<Rational> {
    let m = a.matrix();
    (0..m.rows()).flat_map(|r| m.row(r).to_vec()).collect()
}

/// The endomorphism with the given standard-basis coefficients.
pub fn from_coefficients(v: &GradedSpace, degree: Degree, coeffs: &[Rational]) -> Result<GradedMap, EndoError> {
    let n = v.dim();
    let m = Matrix::from_fn(n, n, |r, c| coeffs[r * n + c].clone());
    Ok(GradedMap::new(v.clone(), v.clone(), degree, m)?)
}

fn koszul_scale(a: Degree, b: Degree) -> Rational {
    unit_sign(is_negative(parity(a) * parity(b)))
}

fn ensure_endomorphism(beta: &BilinearForm, a: &GradedMap) -> Result<(), EndoError> {
    if a.domain() != beta.space() || a.codomain() != beta.space() {
        return Err(EndoError::NotEndomorphism);
    }
    Ok(())
}

/// The graded commutator `[A,B] = AB - (-1)^{|A||B|} BA`.
pub fn commutator(a: &GradedMap, b: &GradedMap) -> Result<GradedMap, EndoError> {
    if !a.is_endomorphism() || a.domain() != b.domain() || !b.is_endomorphism() {
        return Err(EndoError::NotEndomorphism);
    }
    let ab = a.compose(b)?;
    let ba = b.compose(a)?.scale(&koszul_scale(a.degree(), b.degree()));
    Ok(ab.sub(&ba)?)
}

/// The involution `τ(A) = (-1)^{ℓ|A|} β_♭^{-1} A^T β_♭`, evaluated through its
/// coordinate expression
///
/// `τ(Δ_ρ^σ) = (-1)^{ℓ(|t_ρ|-|t_λ|+1) + |t_λ|(|t_ρ|-|t_σ|)} f_{λρ} g^{σκ} Δ_κ^λ`,
///
/// where `f` is the flat matrix and `g^{σκ}` its inverse.
pub fn tau(beta: &BilinearForm, a: &GradedMap) -> Result<GradedMap, EndoError> {
    ensure_endomorphism(beta, a)?;
    let v = beta.space();
    let n = v.dim();
    let f = beta.flat_matrix();
    let ginv = beta.inverse_form()?.matrix;
    let pl = parity(beta.ell());
    let m = a.matrix();
    let mut out = Matrix::zeros(n, n);
    for rho in 0..n {
        for sigma in 0..n {
            let coeff = &m[(rho, sigma)];
            if coeff.is_zero() {
                continue;
            }
            let dr = parity(v.degree(rho));
            let ds = parity(v.degree(sigma));
            for lambda in 0..n {
                let flr = &f[(lambda, rho)];
                if flr.is_zero() {
                    continue;
                }
                let dl = parity(v.degree(lambda));
                let e = pl * parity(dr + dl + 1) + dl * parity(dr + ds);
                let base = coeff * flr * unit_sign(is_negative(e));
                for kappa in 0..n {
                    let gsk = &ginv[(sigma, kappa)];
                    if !gsk.is_zero() {
                        out[(kappa, lambda)] += &base * gsk;
                    }
                }
            }
        }
    }
    Ok(GradedMap::new(v.clone(), v.clone(), a.degree(), out)?)
}

/// `τ(AB) = (-1)^{|A||B|} τ(B) τ(A)`, checked exactly.
pub fn tau_antihom_check(beta: &BilinearForm, a: &GradedMap, b: &GradedMap) -> Result<bool, EndoError> {
    let lhs = tau(beta, &a.compose(b)?)?;
    let rhs = tau(beta, b)?
        .compose(&tau(beta, a)?)?
        .scale(&koszul_scale(a.degree(), b.degree()));
    Ok(lhs.matrix() == rhs.matrix())
}

/// Compares `β_♭ A` with `s (-1)^{ℓ|A|} A^T β_♭`.
fn symmetry_defect(beta: &BilinearForm, a: &GradedMap, s: i64) -> Result<bool, EndoError> {
    ensure_endomorphism(beta, a)?;
    let flat = beta.flat()?;
    let lhs = flat.compose(a)?;
    let sign = unit_sign(is_negative(parity(beta.ell()) * parity(a.degree())) != (s < 0));
    let rhs = a.transpose().compose(&flat)?.scale(&sign);
    Ok(lhs.matrix() == rhs.matrix())
}

/// `A` is symmetric: `β A = (-1)^{ℓ|A|} A^T β`.
pub fn is_in_sym(beta: &BilinearForm, a: &GradedMap) -> Result<bool, EndoError> {
    symmetry_defect(beta, a, 1)
}

/// `A` is skew-symmetric: `β A = -(-1)^{ℓ|A|} A^T β`.
pub fn is_in_skew(beta: &BilinearForm, a: &GradedMap) -> Result<bool, EndoError> {
    symmetry_defect(beta, a, -1)
}

/// Whether `[A,B]` is skew-symmetric.
pub fn skew_closed_under_bracket(beta: &BilinearForm, a: &GradedMap, b: &GradedMap) -> Result<bool, EndoError> {
    is_in_skew(beta, &commutator(a, b)?)
}

/// The projector `p_+ = ½(id + τ)` onto `Sym(V,β)`.
pub fn project_sym(beta: &BilinearForm, a: &GradedMap) -> Result<GradedMap, EndoError> {
    let half = Rational::new(1.into(), 2.into());
    Ok(a.add(&tau(beta, a)?)?.scale(&half))
}

/// The projector `p_- = ½(id - τ)` onto the skew subalgebra.
pub fn project_skew(beta: &BilinearForm, a: &GradedMap) -> Result<GradedMap, EndoError> {
    let half = Rational::new(1.into(), 2.into());
    Ok(a.sub(&tau(beta, a)?)?.scale(&half))
}

/// `L_A(X) = τ(A) X + τ(X) A`.
pub fn l_map(beta: &BilinearForm, a: &GradedMap, x: &GradedMap) -> Result<GradedMap, EndoError> {
    let lhs = tau(beta, a)?.compose(x)?;
    let rhs = tau(beta, x)?.compose(a)?;
    Ok(lhs.add(&rhs)?)
}

/// The matrix of `X ↦ L_A(X)` on `gl(V)`: column `μ·n + ν` holds the
/// coefficients of `L_A(Δ_μ^ν)`, and row `κ·n + λ` is the coefficient of
/// `Δ_κ^λ`.
pub fn l_matrix(beta: &BilinearForm, a: &GradedMap) -> Result<Matrix, EndoError> {
    let v = beta.space();
    let n = v.dim();
    let mut out = Matrix::zeros(n * n, n * n);
    for (col, unit) in gl_basis(v)?.iter().enumerate() {
        let image = coefficients(&l_map(beta, a, unit)?);
        for (row, c) in image.into_iter().enumerate() {
            out[(row, col)] = c;
        }
    }
    Ok(out)
}

/// Restriction of a linear operator on `gl(V)` (given on matrix units) to the
/// degree `d` part, as a square matrix in the basis of degree `d` units.
fn restricted_operator(
    v: &GradedSpace,
    d: Degree,
    op: &impl Fn(&GradedMap) -> Result<GradedMap, EndoError>,
) -> Result<(Vec<usize>, Matrix), EndoError> {
    let n = v.dim();
    let idx: Vec<usize> = (0..n * n).filter(|&i| v.degree(i / n) - v.degree(i % n) == d).collect();
    let mut m = Matrix::zeros(idx.len(), idx.len());
    for (col, &i) in idx.iter().enumerate() {
        let image = coefficients(&op(&GradedMap::matrix_unit(v, i / n, i % n)?)?);
        for (row, &j) in idx.iter().enumerate() {
            m[(row, col)] = image[j].clone();
        }
    }
    Ok((idx, m))
}

fn kernel_maps(v: &GradedSpace, d: Degree, idx: &[usize], m: &Matrix) -> Result<Vec<GradedMap>, EndoError> {
    let n = v.dim();
    let mut out = Vec::new();
    for vec in m.kernel() {
        let mut coeffs = vec![Rational::zero(); n * n];
        for (pos, &i) in idx.iter().enumerate() {
            coeffs[i] = vec[pos].clone();
        }
        out.push(from_coefficients(v, d, &coeffs)?);
    }
    Ok(out)
}

/// Splits `gl(V)` into the `±1` eigenspaces of `τ`, degree by degree.
///
/// The skew part is `ker L_id = ker(id + τ)` and the symmetric part is
/// `ker(id - τ)`. Each basis is the echelon kernel basis of the restricted
/// operator, listed by increasing degree.
pub fn decompose(beta: &BilinearForm) -> Result<Decomposition, EndoError> {
    let v = beta.space();
    beta.inverse_form()?;
    let id = GradedMap::identity(v);
    let mut sym = Vec::new();
    let mut skew = Vec::new();
    for d in gl_degrees(v) {
        let (idx, l_id) = restricted_operator(v, d, &|x| l_map(beta, &id, x))?;
        skew.extend(kernel_maps(v, d, &idx, &l_id)?);
        let (idx, minus) = restricted_operator(v, d, &|x| Ok(tau(beta, x)?.sub(x)?))?;
        sym.extend(kernel_maps(v, d, &idx, &minus)?);
    }
    Ok(Decomposition {
        sym: EndoSubspace {
            tag: SubspaceTag::Sym,
            basis: sym,
        },
        skew: EndoSubspace {
            tag: SubspaceTag::Skew,
            basis: skew,
        },
    })
}

/// `A^T g A = g` for a degree 0 endomorphism `A`.
pub fn orthogonality_check(beta: &BilinearForm, a: &GradedMap) -> Result<bool, EndoError> {
    ensure_endomorphism(beta, a)?;
    if a.degree() != 0 && !a.is_zero() {
        return Err(EndoError::NonzeroDegree(a.degree()));
    }
    let a0 = a.with_degree(0)?;
    let flat = beta.flat()?;
    let lhs = a0.transpose().compose(&flat)?.compose(&a0)?;
    Ok(lhs.matrix() == flat.matrix())
}

/// `η(A) = (-1)^{|A||M|} M A M^{-1}` for an isomorphism `M: V → W`.
pub fn conjugation_eta(m: &GradedMap, a: &GradedMap) -> Result<GradedMap, EndoError> {
    if a.domain() != m.domain() || !a.is_endomorphism() {
        return Err(EndoError::NotEndomorphism);
    }
    let inv = m.inverse()?;
    Ok(m.compose(a)?
        .compose(&inv)?
        .scale(&koszul_scale(a.degree(), m.degree())))
}

/// Rank of a family of endomorphisms, as coefficient vectors.
pub fn span_rank(maps: &[GradedMap]) -> usize {
    if maps.is_empty() {
        return 0;
    }
    Matrix::from_rows(maps.iter().map(coefficients).collect()).rank()
}

/// The Cayley transform `(1 - X)^{-1}(1 + X)` of a degree 0 endomorphism.
/// For `X` skew-symmetric with respect to a form, the result preserves the
/// form whenever `1 - X` is invertible.
pub fn cayley_transform(x: &GradedMap) -> Result<GradedMap, EndoError> {
    if !x.is_endomorphism() {
        return Err(EndoError::NotEndomorphism);
    }
    if x.degree() != 0 && !x.is_zero() {
        return Err(EndoError::NonzeroDegree(x.degree()));
    }
    let x0 = x.with_degree(0)?;
    let id = GradedMap::identity(x.domain());
    let left = id.sub(&x0)?.inverse()?;
    Ok(left.compose(&id.add(&x0)?)?)
}
