//! Elements of the free module `C ⊗ V` and the bilinear pairing induced by
//! a graded form.

use bilinear_forms::BilinearForm;
use coordinate_ring::Poly;
use graded_core::{Degree, GradedSpace, Rational};
use num_traits::Zero;

use crate::{CoefficientAlgebra, PointAuto, PointError};

fn sign(e: Degree) -> Rational {
    graded_core::rational::unit_sign(e.rem_euclid(2) == 1)
}

/// `ψ = Σ_λ a_λ ⊗ t_λ`, stored as the coefficients `a_λ`.
#[derive(Debug, Clone, PartialEq)]
pub struct ModuleElement {
    space: GradedSpace,
    algebra: CoefficientAlgebra,
    coeffs: Vec<Poly>,
}

impl ModuleElement {
    pub fn new(space: &GradedSpace, algebra: &CoefficientAlgebra, coeffs: Vec<Poly>) -> Result<Self, PointError> {
        if coeffs.len() != space.dim() {
            return Err(PointError::Shape {
                expected: space.dim(),
                found: coeffs.len(),
            });
        }
        if !coeffs.iter().all(|c| algebra.contains(c)) {
            return Err(PointError::ForeignRing);
        }
        Ok(ModuleElement {
            space: space.clone(),
            algebra: algebra.clone(),
            coeffs: coeffs.iter().map(|c| algebra.reduce(c)).collect(),
        })
    }

    pub fn zero(space: &GradedSpace, algebra: &CoefficientAlgebra) -> Self {
        ModuleElement {
            space: space.clone(),
            algebra: algebra.clone(),
            coeffs: vec![algebra.zero(); space.dim()],
        }
    }

    /// `a ⊗ t_λ`.
    pub fn simple(
        space: &GradedSpace,
        algebra: &CoefficientAlgebra,
        a: Poly,
        lambda: usize,
    ) -> Result<Self, PointError> {
        let mut coeffs = vec![algebra.zero(); space.dim()];
        coeffs[lambda] = a;
        ModuleElement::new(space, algebra, coeffs)
    }

    /// The frame vector `Φ_λ = (-1)^{|t_λ|} 1 ⊗ t_λ`.
    pub fn frame(space: &GradedSpace, algebra: &CoefficientAlgebra, lambda: usize) -> Self {
        let a = algebra.constant(sign(space.degree(lambda)));
        ModuleElement::simple(space, algebra, a, lambda).expect("constants live in the algebra")
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn coeffs(&self) -> &[Poly] {
        &self.coeffs
    }

    pub fn coeff(&self, lambda: usize) -> &Poly {
        &self.coeffs[lambda]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Poly::is_zero)
    }

    /// The common degree `|a_λ| + |t_λ|` of all nonzero terms, if there is
    /// one; the zero element has every degree and reports `None`.
    pub fn degree(&self) -> Option<Degree> {
        let ring = self.algebra.ring();
        let mut found = None;
        for (lambda, a) in self.coeffs.iter().enumerate() {
            for (m, _) in a.terms() {
                let d = m.degree(ring) + self.space.degree(lambda);
                match found {
                    None => found = Some(d),
                    Some(prev) if prev != d => return None,
                    _ => {}
                }
            }
        }
        found
    }

    pub fn is_homogeneous_of(&self, degree: Degree) -> bool {
        self.is_zero() || self.degree() == Some(degree)
    }

    pub fn add(&self, other: &ModuleElement) -> ModuleElement {
        ModuleElement {
            space: self.space.clone(),
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.add(b)).collect(),
        }
    }

    /// Left multiplication `f · ψ = Σ f a_λ ⊗ t_λ`.
    pub fn left_mul(&self, f: &Poly) -> ModuleElement {
        ModuleElement {
            space: self.space.clone(),
            algebra: self.algebra.clone(),
            coeffs: self.coeffs.iter().map(|a| self.algebra.mul(f, a)).collect(),
        }
    }

    /// `F(ψ) = Σ (-1)^{|t_λ|+|t_κ|} a_λ F^κ_λ ⊗ t_κ`.
    pub fn apply(&self, f: &PointAuto) -> Result<ModuleElement, PointError> {
        if *f.space() != self.space {
            return Err(PointError::SpaceMismatch);
        }
        if *f.algebra() != self.algebra {
            return Err(PointError::ForeignRing);
        }
        let n = self.space.dim();
        let mut coeffs = vec![self.algebra.zero(); n];
        for (lambda, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (kappa, out) in coeffs.iter_mut().enumerate() {
                let e = f.entry(kappa, lambda);
                if e.is_zero() {
                    continue;
                }
                let s = sign(self.space.degree(lambda) + self.space.degree(kappa));
                *out = out.add(&self.algebra.mul(a, e).scale(&s));
            }
        }
        Ok(ModuleElement {
            space: self.space.clone(),
            algebra: self.algebra.clone(),
            coeffs,
        })
    }
}

/// The pairing `⟨f ⊗ v, f' ⊗ w⟩ = (-1)^{(|v|+ℓ)|f'|} f f' g(v, w)`,
/// extended bilinearly over the monomials of the coefficients.
pub fn pairing(beta: &BilinearForm, psi: &ModuleElement, chi: &ModuleElement) -> Result<Poly, PointError> {
    if *beta.space() != psi.space || *beta.space() != chi.space {
        return Err(PointError::SpaceMismatch);
    }
    if psi.algebra != chi.algebra {
        return Err(PointError::ForeignRing);
    }
    let algebra = &psi.algebra;
    let ring = algebra.ring();
    let ell = beta.ell();
    let mut out = algebra.zero();
    for (lambda, a) in psi.coeffs.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (kappa, b) in chi.coeffs.iter().enumerate() {
            let g = beta.value(lambda, kappa);
            if g.is_zero() || b.is_zero() {
                continue;
            }
            for (m, c) in b.terms() {
                let s = sign((psi.space.degree(lambda) + ell) * m.degree(ring));
                let b_m = Poly::term(ring, m.clone(), c * &s * g);
                out = out.add(&algebra.mul(a, &b_m));
            }
        }
    }
    Ok(out)
}

/// The matrix of the pairing on the frame, `⟨Φ_λ, Φ_κ⟩`, as rationals.
pub fn frame_gram(beta: &BilinearForm) -> Vec<Vec<Rational>> {
    let algebra = CoefficientAlgebra::trivial();
    let space = beta.space();
    let n = space.dim();
    (0..n)
        .map(|l| {
            (0..n)
                .map(|k| {
                    let p = pairing(
                        beta,
                        &ModuleElement::frame(space, &algebra, l),
                        &ModuleElement::frame(space, &algebra, k),
                    )
                    .expect("frame vectors live on the form's space");
                    p.constant_term()
                })
                .collect()
        })
        .collect()
}
