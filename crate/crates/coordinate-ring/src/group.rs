//! Pullbacks of the structure maps of `GL(V)` and of the maps entering the
//! construction of orthogonal and symplectic groups, in the coordinates
//! `y^λ_κ`.

use std::sync::Arc;

use bilinear_forms::BilinearForm;
use graded_core::rational::frac;
use graded_core::{GradedMap, GradedSpace, Matrix, Rational};
use num_traits::Zero;

use crate::linear::{gl_index, gl_ring, linear_ring};
use crate::ring::sign_of;
use crate::{jacobian_at_point, Derivation, Poly, Ring, RingError, RingMorphism};

/// Coordinates on `GL(V) × GL(V)`: the second factor `u` registered before
/// the first factor `z`.
pub fn pair_ring(v: &GradedSpace) -> Arc<Ring> {
    Ring::product(&[&gl_ring(v, "u"), &gl_ring(v, "z")]).expect("prefixes differ")
}

/// Coordinates on `GL(V) × ◊V`: `x` registered before `y`.
pub fn action_ring(v: &GradedSpace) -> Arc<Ring> {
    Ring::product(&[&linear_ring(v, "x"), &gl_ring(v, "y")]).expect("prefixes differ")
}

/// `μ^*(y^λ_κ) = u^ν_κ z^λ_ν` into an arbitrary ring, where `first[i]` and
/// `second[i]` are the target variables standing for the `i`-th coordinate
/// (in [`gl_index`] order) of the first and second factor.
pub fn pullback_mu_into(
    v: &GradedSpace,
    target: &Arc<Ring>,
    first: &[usize],
    second: &[usize],
) -> Result<RingMorphism, RingError> {
    let n = v.dim();
    if first.len() != n * n || second.len() != n * n {
        return Err(RingError::Shape(format!("each factor needs {} coordinates", n * n)));
    }
    let source = gl_ring(v, "y");
    let mut images = Vec::with_capacity(n * n);
    for lambda in 0..n {
        for kappa in 0..n {
            let mut img = Poly::zero(target);
            for nu in 0..n {
                let u = Poly::variable(target, second[gl_index(n, nu, kappa)]);
                let z = Poly::variable(target, first[gl_index(n, lambda, nu)]);
                img = img.add(&u.mul(&z));
            }
            images.push(img);
        }
    }
    RingMorphism::new(source, target.clone(), images)
}

/// The multiplication pullback `μ^*(y^λ_κ) = u^ν_κ z^λ_ν` from the
/// coordinates of `GL(V)` to those of `GL(V) × GL(V)`.
pub fn pullback_mu(v: &GradedSpace) -> RingMorphism {
    let n2 = v.dim() * v.dim();
    let target = pair_ring(v);
    let second: Vec<usize> = (0..n2).collect();
    let first: Vec<usize> = (n2..2 * n2).collect();
    pullback_mu_into(v, &target, &first, &second).expect("sizes match")
}

/// The unit pullback `e^*(y^λ_κ) = δ^λ_κ` into an arbitrary ring.
pub fn pullback_unit_into(v: &GradedSpace, target: &Arc<Ring>) -> RingMorphism {
    let n = v.dim();
    let source = gl_ring(v, "y");
    let images = (0..n * n)
        .map(|i| {
            if i / n == i % n {
                Poly::one(target)
            } else {
                Poly::zero(target)
            }
        })
        .collect();
    RingMorphism::new(source, target.clone(), images).expect("constants have degree zero")
}

/// The matrix `T` of `τ` on `gl(V)`: the entry at row `gl_index(κ, λ)` and
/// column `gl_index(ρ, σ)` is the coefficient of `Δ_κ^λ` in `τ(Δ_ρ^σ)`,
///
/// `(-1)^{ℓ(|t_ρ|-|t_λ|+1) + |t_λ|(|t_ρ|-|t_σ|)} g_{λρ} g^{σκ}`,
///
/// with `g_{λρ}` the flat matrix of `β` and `g^{σκ}` its inverse.
pub fn tau_matrix(beta: &BilinearForm) -> Result<Matrix, RingError> {
    let v = beta.space();
    let n = v.dim();
    let ell = beta.ell();
    let f = beta.flat_matrix();
    let ginv = beta.inverse_form()?.matrix;
    let mut t = Matrix::zeros(n * n, n * n);
    for rho in 0..n {
        for sigma in 0..n {
            for lambda in 0..n {
                if f[(lambda, rho)].is_zero() {
                    continue;
                }
                let (dr, ds, dl) = (v.degree(rho), v.degree(sigma), v.degree(lambda));
                let sign = sign_of(ell * (dr - dl + 1) + dl * (dr - ds));
                for kappa in 0..n {
                    if ginv[(sigma, kappa)].is_zero() {
                        continue;
                    }
                    t[(gl_index(n, kappa, lambda), gl_index(n, rho, sigma))] =
                        &sign * &f[(lambda, rho)] * &ginv[(sigma, kappa)];
                }
            }
        }
    }
    Ok(t)
}

/// The pullback of `τ` on the coordinates of `GL(V)`:
///
/// `τ^*(y^κ_λ) = (-1)^{|t_λ| + |t_κ|(|t_ρ|-|t_σ|-1) + ℓ(|t_ρ|-|t_λ|+1)} g_{λρ} g^{σκ} y^ρ_σ`.
pub fn pullback_tau(beta: &BilinearForm) -> Result<RingMorphism, RingError> {
    let v = beta.space();
    let n = v.dim();
    let ell = beta.ell();
    let f = beta.flat_matrix();
    let ginv = beta.inverse_form()?.matrix;
    let ring = gl_ring(v, "y");
    let mut images = Vec::with_capacity(n * n);
    for kappa in 0..n {
        for lambda in 0..n {
            let mut img = Poly::zero(&ring);
            let (dk, dl) = (v.degree(kappa), v.degree(lambda));
            for rho in 0..n {
                if f[(lambda, rho)].is_zero() {
                    continue;
                }
                for sigma in 0..n {
                    if ginv[(sigma, kappa)].is_zero() {
                        continue;
                    }
                    let (dr, ds) = (v.degree(rho), v.degree(sigma));
                    let e = dl + dk * (dr - ds - 1) + ell * (dr - dl + 1);
                    let coeff = sign_of(e) * &f[(lambda, rho)] * &ginv[(sigma, kappa)];
                    img = img.add(&Poly::variable(&ring, gl_index(n, rho, sigma)).scale(&coeff));
                }
            }
            images.push(img);
        }
    }
    RingMorphism::new(ring.clone(), ring, images)
}

/// The pullback of the projector `p = (1 - τ)/2`:
/// `p^*(y) = (y - τ^*(y))/2`.
pub fn pullback_projector(beta: &BilinearForm) -> Result<RingMorphism, RingError> {
    let tau = pullback_tau(beta)?;
    let ring = tau.source().clone();
    let half = frac(1, 2);
    let images = tau
        .images()
        .iter()
        .enumerate()
        .map(|(i, t)| Poly::variable(&ring, i).sub(t).scale(&half))
        .collect();
    RingMorphism::new(ring.clone(), ring, images)
}

/// The pullback of `χ_0(A) = τ(A)A`, written out in coordinates:
///
/// `χ_0^*(y^κ_λ) = (-1)^{|t_ρ|-|t_σ|+|t_κ|+|t_α|(|t_κ|-|t_λ|)+|t_κ||t_λ|} y^ρ_σ T_{σρ}^{ακ} y^α_λ`,
///
/// where `T_{σρ}^{ακ}` is the coefficient of `Δ_κ^α` in `τ(Δ_ρ^σ)`.
pub fn pullback_chi0(beta: &BilinearForm) -> Result<RingMorphism, RingError> {
    let v = beta.space();
    let n = v.dim();
    let t = tau_matrix(beta)?;
    let ring = gl_ring(v, "y");
    let mut images = Vec::with_capacity(n * n);
    for kappa in 0..n {
        for lambda in 0..n {
            let mut img = Poly::zero(&ring);
            let (dk, dl) = (v.degree(kappa), v.degree(lambda));
            for rho in 0..n {
                for sigma in 0..n {
                    let y_rs = Poly::variable(&ring, gl_index(n, rho, sigma));
                    for alpha in 0..n {
                        let c = &t[(gl_index(n, kappa, alpha), gl_index(n, rho, sigma))];
                        if c.is_zero() {
                            continue;
                        }
                        let da = v.degree(alpha);
                        let e = v.degree(rho) - v.degree(sigma) + dk + da * (dk - dl) + dk * dl;
                        let y_al = Poly::variable(&ring, gl_index(n, alpha, lambda));
                        img = img.add(&y_rs.mul(&y_al).scale(&(c * sign_of(e))));
                    }
                }
            }
            images.push(img);
        }
    }
    RingMorphism::new(ring.clone(), ring, images)
}

/// `χ_0^*` assembled as `(τ^*, 1)` after `μ^*`: the first factor is sent
/// through `τ^*`, the second is the identity.
pub fn pullback_chi0_composite(beta: &BilinearForm) -> Result<RingMorphism, RingError> {
    let v = beta.space();
    let n2 = v.dim() * v.dim();
    let tau = pullback_tau(beta)?;
    let ring = tau.target().clone();
    let mu = pullback_mu(v);
    let mut images = Vec::with_capacity(2 * n2);
    images.extend((0..n2).map(|i| Poly::variable(&ring, i)));
    images.extend(tau.images().iter().cloned());
    let pair = RingMorphism::new(mu.target().clone(), ring, images)?;
    mu.then(&pair)
}

/// The action pullback `θ_V^*(x^λ) = x^κ y^λ_κ`, from the coordinates of
/// `◊V` to those of `GL(V) × ◊V`.
pub fn pullback_theta(v: &GradedSpace) -> RingMorphism {
    let n = v.dim();
    let source = linear_ring(v, "x");
    let target = action_ring(v);
    let images = (0..n)
        .map(|lambda| {
            let mut img = Poly::zero(&target);
            for kappa in 0..n {
                let x = Poly::variable(&target, kappa);
                let y = Poly::variable(&target, n + gl_index(n, lambda, kappa));
                img = img.add(&x.mul(&y));
            }
            img
        })
        .collect();
    RingMorphism::new(source, target, images).expect("θ preserves degrees")
}

/// The left-invariant vector field of `A ∈ gl(V)`:
///
/// `x_A^L = (-1)^{|t_ν|-|t_κ|} A_κ^ν y^λ_ν ∂/∂y^λ_κ`.
pub fn left_invariant_field(a: &GradedMap) -> Result<Derivation, RingError> {
    if !a.is_endomorphism() {
        return Err(RingError::Shape("a left-invariant field needs an endomorphism".into()));
    }
    let v = a.domain();
    let n = v.dim();
    let ring = gl_ring(v, "y");
    let mut images = Vec::with_capacity(n * n);
    for lambda in 0..n {
        for kappa in 0..n {
            let mut img = Poly::zero(&ring);
            for nu in 0..n {
                let c = a.entry(kappa, nu);
                if c.is_zero() {
                    continue;
                }
                let coeff = c * sign_of(v.degree(nu) - v.degree(kappa));
                img = img.add(&Poly::variable(&ring, gl_index(n, lambda, nu)).scale(&coeff));
            }
            images.push(img);
        }
    }
    Derivation::new(ring, a.degree(), images)
}

/// The point of `GL(V)` given by a degree zero map:
/// `y^ν_λ(A) = (-1)^{|t_λ|-|t_ν|} A_λ^ν`, zero on coordinates of nonzero degree.
pub fn gl_point(a: &GradedMap) -> Result<Vec<Rational>, RingError> {
    if !a.is_endomorphism() {
        return Err(RingError::Shape("a point of GL(V) needs an endomorphism".into()));
    }
    if a.degree() != 0 {
        return Err(RingError::NonzeroDegree(a.degree()));
    }
    let v = a.domain();
    let n = v.dim();
    let mut point = vec![Rational::zero(); n * n];
    for nu in 0..n {
        for lambda in 0..n {
            if v.degree(lambda) == v.degree(nu) {
                point[gl_index(n, nu, lambda)] = a.entry(lambda, nu) * sign_of(v.degree(lambda) - v.degree(nu));
            }
        }
    }
    Ok(point)
}

/// The tangent map of `χ_0` at `A` in the bases `▲_λ^κ = (-1)^{|t_λ|-|t_κ|} ∂/∂y^λ_κ`:
/// the entry at row `gl_index(κ, λ)` and column `gl_index(μ, ν)` is
/// `(-1)^{|t_μ|-|t_ν|+|t_λ|-|t_κ|} ∂(χ_0^*(y^κ_λ))/∂y^μ_ν (A)`.
pub fn chi0_tangent_matrix(beta: &BilinearForm, a: &GradedMap) -> Result<Matrix, RingError> {
    let v = beta.space();
    let n = v.dim();
    let chi0 = pullback_chi0(beta)?;
    let j = jacobian_at_point(&chi0, &gl_point(a)?)?;
    Ok(Matrix::from_fn(n * n, n * n, |row, col| {
        let (kappa, lambda) = (row / n, row % n);
        let (mu, nu) = (col / n, col % n);
        let e = v.degree(mu) - v.degree(nu) + v.degree(lambda) - v.degree(kappa);
        &j[(row, col)] * sign_of(e)
    }))
}

/// Recovers `ρ^*` from the pullback of a linear action `θ: G × ◊V → ◊V`:
/// `ρ^*(y^λ_κ) = 0^*(∂/∂x^κ θ^*(x^λ))`.
///
/// The source of `theta` must be `linear_ring(v, "x")`, and its target must
/// contain the `x` variables by name; the remaining target variables are
/// the coordinates of `G` and form the target ring of the result.
pub fn extract_representation(theta: &RingMorphism, v: &GradedSpace) -> Result<RingMorphism, RingError> {
    let n = v.dim();
    let x_ring = linear_ring(v, "x");
    if **theta.source() != *x_ring {
        return Err(RingError::RingMismatch);
    }
    let full = theta.target();
    let x_in_full = (0..n)
        .map(|i| {
            full.index_of(x_ring.name(i))
                .ok_or_else(|| RingError::UnknownVariable(x_ring.name(i).to_string()))
        })
        .collect::<Result<Vec<_>, _>>()?;
    for (i, img) in theta.images().iter().enumerate() {
        let linear = img
            .terms()
            .all(|(m, _)| x_in_full.iter().map(|&x| m.exponent(x)).sum::<u32>() == 1);
        if !linear {
            return Err(RingError::NotLinear {
                generator: x_ring.name(i).to_string(),
            });
        }
    }
    let group_vars: Vec<_> = (0..full.len())
        .filter(|j| !x_in_full.contains(j))
        .map(|j| full.variable(j).clone())
        .collect();
    let group = Ring::new(group_vars)?;
    let zero_section = {
        let images = (0..full.len())
            .map(|j| {
                if x_in_full.contains(&j) {
                    Ok(Poly::zero(&group))
                } else {
                    Poly::variable(full, j).embed(&group)
                }
            })
            .collect::<Result<Vec<_>, RingError>>()?;
        RingMorphism::new(full.clone(), group.clone(), images)?
    };
    let source = gl_ring(v, "y");
    let mut images = Vec::with_capacity(n * n);
    for lambda in 0..n {
        for &x in &x_in_full {
            let d = Derivation::partial(full, x).apply(theta.image(lambda))?;
            images.push(zero_section.apply(&d)?);
        }
    }
    RingMorphism::new(source, group, images)
}

/// The action `θ_V ∘ (ρ × 1)` of a group with coordinate ring
/// `rho.target()`, whose pullback lands in the ring registering the `x`
/// variables before the group variables.
pub fn action_from_representation(rho: &RingMorphism, v: &GradedSpace) -> Result<RingMorphism, RingError> {
    let n = v.dim();
    let x_ring = linear_ring(v, "x");
    let group = rho.target();
    let target = Ring::product(&[&x_ring, group])?;
    let mut images: Vec<Poly> = (0..n).map(|i| Poly::variable(&target, i)).collect();
    for img in rho.images() {
        images.push(img.embed(&target)?);
    }
    let rho_times_one = RingMorphism::new(action_ring(v), target, images)?;
    pullback_theta(v).then(&rho_times_one)
}

/// The substitution `x ↦ c x` on the coordinates of `◊V`.
pub fn homothety(v: &GradedSpace, c: &Rational) -> RingMorphism {
    let ring = linear_ring(v, "x");
    let images = (0..ring.len()).map(|i| Poly::variable(&ring, i).scale(c)).collect();
    RingMorphism::new(ring.clone(), ring, images).expect("scaling preserves degrees")
}

/// The identity morphism extended by constants: `x ↦ x` on `◊V`, `y^λ_κ ↦ δ^λ_κ`.
pub fn unit_times_identity(v: &GradedSpace) -> RingMorphism {
    let n = v.dim();
    let x_ring = linear_ring(v, "x");
    let mut images: Vec<Poly> = (0..n).map(|i| Poly::variable(&x_ring, i)).collect();
    images.extend((0..n * n).map(|i| {
        if i / n == i % n {
            Poly::one(&x_ring)
        } else {
            Poly::zero(&x_ring)
        }
    }));
    RingMorphism::new(action_ring(v), x_ring, images).expect("constants have degree zero")
}
