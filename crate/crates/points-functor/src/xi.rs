//! Points of `◊V` as degree zero elements of the free module `C ⊗ V`.

use coordinate_ring::{linear_ring, RingMorphism};
use graded_core::rational::unit_sign;
use graded_core::GradedSpace;

use crate::{CoefficientAlgebra, ModuleElement, PointError};

/// `Ξ(φ) = φ^*(z^λ) Φ_λ` for a pullback `φ^*` from the linear coordinates
/// `z^λ` of `V` (of degree `-|t_λ|`) into the algebra.
pub fn xi_points(
    phi: &RingMorphism,
    space: &GradedSpace,
    algebra: &CoefficientAlgebra,
) -> Result<ModuleElement, PointError> {
    let source = phi.source();
    let n = space.dim();
    if source.len() != n {
        return Err(PointError::Shape {
            expected: n,
            found: source.len(),
        });
    }
    if (0..n).any(|l| source.degree(l) != -space.degree(l)) {
        return Err(PointError::SpaceMismatch);
    }
    if **phi.target() != **algebra.ring() {
        return Err(PointError::ForeignRing);
    }
    let coeffs = (0..n)
        .map(|l| phi.image(l).scale(&unit_sign(space.degree(l).rem_euclid(2) == 1)))
        .collect();
    ModuleElement::new(space, algebra, coeffs)
}

/// The inverse of [`xi_points`]: the pullback `z^λ ↦ (-1)^{|t_λ|} a_λ` of a
/// degree zero element `Σ a_λ ⊗ t_λ`, from `linear_ring(space, prefix)`.
pub fn xi_inverse(psi: &ModuleElement, algebra: &CoefficientAlgebra, prefix: &str) -> Result<RingMorphism, PointError> {
    let space = psi.space();
    if !psi.is_homogeneous_of(0) {
        return Err(PointError::Morphism("a point of V needs a degree zero element".into()));
    }
    let images = (0..space.dim())
        .map(|l| psi.coeff(l).scale(&unit_sign(space.degree(l).rem_euclid(2) == 1)))
        .collect();
    Ok(RingMorphism::new(
        linear_ring(space, prefix),
        algebra.ring().clone(),
        images,
    )?)
}
