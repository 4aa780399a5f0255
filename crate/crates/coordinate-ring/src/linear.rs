//! Linear coordinates on graded vector spaces and the pullbacks of linear
//! and bilinear maps.

use std::sync::Arc;

use graded_core::{Degree, GradedMap, GradedSpace, Rational};
use num_traits::Zero;

use crate::ring::sign_of;
use crate::{Poly, Ring, RingError, RingMorphism, Variable};

/// The coordinate ring of `◊V`: one variable `prefix[label]` of degree
/// `-|t_λ|` for every basis vector `t_λ`. A one-dimensional space gets the
/// bare name `prefix`.
pub fn linear_ring(space: &GradedSpace, prefix: &str) -> Arc<Ring> {
    let vars = (0..space.dim())
        .map(|i| {
            let name = if space.dim() == 1 {
                prefix.to_string()
            } else {
                format!("{prefix}[{}]", space.label(i))
            };
            Variable::new(name, -space.degree(i))
        })
        .collect();
    Ring::new(vars).expect("basis labels are unique")
}

/// Index of `Δ_λ^κ` in the standard basis of `gl(V)`.
pub fn gl_index(n: usize, lambda: usize, kappa: usize) -> usize {
    lambda * n + kappa
}

/// `gl(V)` as a graded vector space with basis `Δ_λ^κ`, labelled `λ,κ`, of
/// degree `|t_λ| - |t_κ|`, ordered by [`gl_index`].
pub fn gl_space(v: &GradedSpace) -> GradedSpace {
    let n = v.dim();
    let mut labels = Vec::with_capacity(n * n);
    let mut degrees = Vec::with_capacity(n * n);
    for l in 0..n {
        for k in 0..n {
            labels.push(format!("{},{}", v.label(l), v.label(k)));
            degrees.push(v.degree(l) - v.degree(k));
        }
    }
    GradedSpace::from_labels(&labels, &degrees).expect("pairs of unique labels are unique")
}

/// Coordinates `y^λ_κ` on `GL(V)`, named `prefix[λ,κ]`, of degree
/// `|t_κ| - |t_λ|`.
pub fn gl_ring(v: &GradedSpace, prefix: &str) -> Arc<Ring> {
    linear_ring(&gl_space(v), prefix)
}

/// The pullback `◊A^*(u^σ) = (-1)^{|s_σ|(|t_λ|-|s_σ|)} A_λ^σ z^λ` of a degree
/// zero map `A: V → W`, from the coordinates of `W` to those of `V`, both
/// named with `prefix`.
pub fn pullback_dia_map(a: &GradedMap, prefix: &str) -> Result<RingMorphism, RingError> {
    if a.degree() != 0 {
        return Err(RingError::NonzeroDegree(a.degree()));
    }
    let (v, w) = (a.domain(), a.codomain());
    let source = linear_ring(w, prefix);
    let target = linear_ring(v, prefix);
    let images = (0..w.dim())
        .map(|sigma| {
            let ds = w.degree(sigma);
            let mut img = Poly::zero(&target);
            for lambda in 0..v.dim() {
                let c = a.entry(lambda, sigma);
                if !c.is_zero() {
                    let coeff = c * sign_of(ds * (v.degree(lambda) - ds));
                    img = img.add(&Poly::variable(&target, lambda).scale(&coeff));
                }
            }
            img
        })
        .collect();
    RingMorphism::new(source, target, images)
}

/// A degree zero bilinear map `β: V × W → X`, `β(t_λ, s_σ) = β_{λσ}^ρ x_ρ`.
#[derive(Debug, Clone, PartialEq)]
pub struct BilinearMapData {
    first: GradedSpace,
    second: GradedSpace,
    target: GradedSpace,
    coeffs: Vec<Rational>,
}

impl BilinearMapData {
    /// `coeffs` is indexed by `(λ, σ, ρ)` in row-major order. A coefficient
    /// may be nonzero only if `|x_ρ| = |t_λ| + |s_σ|`.
    pub fn new(
        first: GradedSpace,
        second: GradedSpace,
        target: GradedSpace,
        coeffs: Vec<Rational>,
    ) -> Result<Self, RingError> {
        let (a, b, c) = (first.dim(), second.dim(), target.dim());
        if coeffs.len() != a * b * c {
            return Err(RingError::Shape(format!(
                "a bilinear map {a} × {b} → {c} needs {} coefficients, found {}",
                a * b * c,
                coeffs.len()
            )));
        }
        for l in 0..a {
            for s in 0..b {
                for r in 0..c {
                    let x = &coeffs[(l * b + s) * c + r];
                    if !x.is_zero() && target.degree(r) != first.degree(l) + second.degree(s) {
                        return Err(RingError::Shape(format!(
                            "coefficient ({l}, {s}, {r}) violates the degree zero constraint"
                        )));
                    }
                }
            }
        }
        Ok(BilinearMapData {
            first,
            second,
            target,
            coeffs,
        })
    }

    pub fn zero(first: GradedSpace, second: GradedSpace, target: GradedSpace) -> Self {
        let len = first.dim() * second.dim() * target.dim();
        BilinearMapData {
            first,
            second,
            target,
            coeffs: vec![Rational::zero(); len],
        }
    }

    /// Composition `gl(V) × gl(V) → gl(V)`, `(A, B) ↦ AB`.
    pub fn composition(v: &GradedSpace) -> Self {
        let n = v.dim();
        let gl = gl_space(v);
        let mut out = BilinearMapData::zero(gl.clone(), gl.clone(), gl);
        // Δ_ρ^σ Δ_ν^μ = δ^σ_ν Δ_ρ^μ
        for rho in 0..n {
            for sigma in 0..n {
                for mu in 0..n {
                    let i = out.index(gl_index(n, rho, sigma), gl_index(n, sigma, mu), gl_index(n, rho, mu));
                    out.coeffs[i] = Rational::from_integer(1.into());
                }
            }
        }
        out
    }

    /// Evaluation `gl(V) × V → V`, `(A, v) ↦ A(v)`.
    pub fn evaluation(v: &GradedSpace) -> Self {
        let n = v.dim();
        let mut out = BilinearMapData::zero(gl_space(v), v.clone(), v.clone());
        // Δ_ρ^σ(t_μ) = δ^σ_μ t_ρ
        for rho in 0..n {
            for sigma in 0..n {
                let i = out.index(gl_index(n, rho, sigma), sigma, rho);
                out.coeffs[i] = Rational::from_integer(1.into());
            }
        }
        out
    }

    fn index(&self, l: usize, s: usize, r: usize) -> usize {
        (l * self.second.dim() + s) * self.target.dim() + r
    }

    pub fn coeff(&self, l: usize, s: usize, r: usize) -> &Rational {
        &self.coeffs[self.index(l, s, r)]
    }

    pub fn first(&self) -> &GradedSpace {
        &self.first
    }

    pub fn second(&self) -> &GradedSpace {
        &self.second
    }

    pub fn target(&self) -> &GradedSpace {
        &self.target
    }
}

/// The pullback `◊β^*(x^ρ) = (-1)^{|x_ρ|(|t_λ|+|s_σ|-|x_ρ|)} β_{λσ}^ρ u^σ z^λ`.
///
/// The source ring holds the coordinates `x^ρ` of `X` (named with
/// `prefixes.2`); the target ring registers the coordinates `u^σ` of the
/// second factor (`prefixes.1`) before the coordinates `z^λ` of the first
/// (`prefixes.0`).
pub fn pullback_dia_bilinear(beta: &BilinearMapData, prefixes: (&str, &str, &str)) -> Result<RingMorphism, RingError> {
    let (fp, sp, tp) = prefixes;
    let first = linear_ring(&beta.first, fp);
    let second = linear_ring(&beta.second, sp);
    let source = linear_ring(&beta.target, tp);
    let target = Ring::product(&[&second, &first])?;
    let offset = second.len();
    let images = (0..beta.target.dim())
        .map(|rho| {
            let dx: Degree = beta.target.degree(rho);
            let mut img = Poly::zero(&target);
            for l in 0..beta.first.dim() {
                for s in 0..beta.second.dim() {
                    let c = beta.coeff(l, s, rho);
                    if c.is_zero() {
                        continue;
                    }
                    let e = dx * (beta.first.degree(l) + beta.second.degree(s) - dx);
                    let term = Poly::variable(&target, s)
                        .mul(&Poly::variable(&target, offset + l))
                        .scale(&(c * sign_of(e)));
                    img = img.add(&term);
                }
            }
            img
        })
        .collect();
    RingMorphism::new(source, target, images)
}
