//! Degree zero automorphisms of the free module `C ⊗ V`, written in the
//! frame `Φ_λ = (-1)^{|t_λ|} 1 ⊗ t_λ`.

use std::fmt;

use coordinate_ring::{gl_index, gl_ring, pullback_mu, Poly, RingMorphism};
use graded_core::rational::frac;
use graded_core::{GradedMap, GradedSpace, Matrix, Rational};
use num_traits::Zero;
use serde::Serialize;

use crate::{AlgebraMorphism, CoefficientAlgebra, PointError};

/// A matrix `F^κ_λ` of algebra elements with `F(Φ_λ) = F^κ_λ Φ_κ`, each
/// entry homogeneous of degree `|t_λ| - |t_κ|`.
///
/// Entries are stored in the order of the coordinates `y^κ_λ` of `GL(V)`,
/// that is at position `gl_index(κ, λ)`.
#[derive(Clone, PartialEq)]
pub struct PointAuto {
    space: GradedSpace,
    algebra: CoefficientAlgebra,
    entries: Vec<Poly>,
}

impl PointAuto {
    pub fn new(space: &GradedSpace, algebra: &CoefficientAlgebra, entries: Vec<Poly>) -> Result<Self, PointError> {
        let n = space.dim();
        if entries.len() != n * n {
            return Err(PointError::Shape {
                expected: n * n,
                found: entries.len(),
            });
        }
        for kappa in 0..n {
            for lambda in 0..n {
                let e = &entries[gl_index(n, kappa, lambda)];
                if !algebra.contains(e) {
                    return Err(PointError::ForeignRing);
                }
                let expected = space.degree(lambda) - space.degree(kappa);
                if !e.is_homogeneous_of(expected) {
                    return Err(PointError::EntryDegree {
                        kappa,
                        lambda,
                        expected,
                    });
                }
            }
        }
        let entries = entries.iter().map(|e| algebra.reduce(e)).collect();
        Ok(PointAuto {
            space: space.clone(),
            algebra: algebra.clone(),
            entries,
        })
    }

    pub fn identity(space: &GradedSpace, algebra: &CoefficientAlgebra) -> Self {
        PointAuto::from_body(space, algebra, &Matrix::identity(space.dim())).expect("the identity is degree zero")
    }

    pub fn zero(space: &GradedSpace, algebra: &CoefficientAlgebra) -> Self {
        let n = space.dim();
        PointAuto {
            space: space.clone(),
            algebra: algebra.clone(),
            entries: vec![algebra.zero(); n * n],
        }
    }

    /// The constant point with `F^κ_λ = body[(κ, λ)]`; the body may only
    /// connect basis vectors of equal degree.
    pub fn from_body(space: &GradedSpace, algebra: &CoefficientAlgebra, body: &Matrix) -> Result<Self, PointError> {
        let n = space.dim();
        let mut entries = Vec::with_capacity(n * n);
        for kappa in 0..n {
            for lambda in 0..n {
                entries.push(algebra.constant(body[(kappa, lambda)].clone()));
            }
        }
        PointAuto::new(space, algebra, entries)
    }

    /// The constant point of a degree zero automorphism `A` of `V`:
    /// `F^κ_λ = A_λ^κ`.
    pub fn from_map(algebra: &CoefficientAlgebra, a: &GradedMap) -> Result<Self, PointError> {
        if !a.is_endomorphism() {
            return Err(PointError::SpaceMismatch);
        }
        PointAuto::from_body(a.domain(), algebra, a.matrix())
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn algebra(&self) -> &CoefficientAlgebra {
        &self.algebra
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn entries(&self) -> &[Poly] {
        &self.entries
    }

    /// `F^κ_λ`.
    pub fn entry(&self, kappa: usize, lambda: usize) -> &Poly {
        &self.entries[gl_index(self.dim(), kappa, lambda)]
    }

    /// The constant terms of the entries.
    pub fn body(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |k, l| self.entry(k, l).constant_term())
    }

    /// A point is invertible exactly when its body is: the rest is
    /// nilpotent.
    pub fn is_invertible(&self) -> bool {
        !self.body().determinant().is_zero()
    }

    fn with_entries(&self, entries: Vec<Poly>) -> PointAuto {
        PointAuto {
            space: self.space.clone(),
            algebra: self.algebra.clone(),
            entries,
        }
    }

    fn check_compatible(&self, other: &PointAuto) -> Result<(), PointError> {
        if self.space != other.space {
            return Err(PointError::SpaceMismatch);
        }
        if self.algebra != other.algebra {
            return Err(PointError::ForeignRing);
        }
        Ok(())
    }

    /// The composite `FG`: `(FG)^κ_λ = G^ν_λ F^κ_ν`.
    pub fn multiply(&self, other: &PointAuto) -> Result<PointAuto, PointError> {
        self.check_compatible(other)?;
        let n = self.dim();
        let mut entries = Vec::with_capacity(n * n);
        for kappa in 0..n {
            for lambda in 0..n {
                let mut e = self.algebra.zero();
                for nu in 0..n {
                    let g = other.entry(nu, lambda);
                    let f = self.entry(kappa, nu);
                    if !g.is_zero() && !f.is_zero() {
                        e = e.add(&self.algebra.mul(g, f));
                    }
                }
                entries.push(e);
            }
        }
        Ok(self.with_entries(entries))
    }

    pub fn add(&self, other: &PointAuto) -> Result<PointAuto, PointError> {
        self.check_compatible(other)?;
        Ok(self.with_entries(self.entries.iter().zip(&other.entries).map(|(a, b)| a.add(b)).collect()))
    }

    pub fn sub(&self, other: &PointAuto) -> Result<PointAuto, PointError> {
        self.check_compatible(other)?;
        Ok(self.with_entries(self.entries.iter().zip(&other.entries).map(|(a, b)| a.sub(b)).collect()))
    }

    pub fn scale(&self, c: &Rational) -> PointAuto {
        self.with_entries(self.entries.iter().map(|a| a.scale(c)).collect())
    }

    /// The inverse, computed as `(Σ_k (-N)^k) B^{-1}` with `B` the body and
    /// `N = B^{-1}F - 1` nilpotent.
    pub fn invert(&self) -> Result<PointAuto, PointError> {
        let body_inv = self.body().inverse().ok_or(PointError::SingularBody)?;
        let b_inv = PointAuto::from_body(&self.space, &self.algebra, &body_inv)?;
        let id = PointAuto::identity(&self.space, &self.algebra);
        let minus_n = id.sub(&b_inv.multiply(self)?)?;
        let mut power = id.clone();
        let mut sum = id;
        for _ in 0..self.algebra.truncation() {
            power = power.multiply(&minus_n)?;
            sum = sum.add(&power)?;
        }
        sum.multiply(&b_inv)
    }

    /// `exp(X) = Σ_k X^k / k!` for a point whose body is nilpotent as a
    /// matrix; only sensible for entries in the augmentation ideal.
    pub fn exp_nilpotent(&self) -> Result<PointAuto, PointError> {
        let id = PointAuto::identity(&self.space, &self.algebra);
        let mut term = id.clone();
        let mut sum = id;
        for k in 1..=self.algebra.truncation() {
            term = term.multiply(self)?.scale(&frac(1, i64::from(k)));
            sum = sum.add(&term)?;
        }
        Ok(sum)
    }

    /// Applies an algebra morphism entrywise.
    pub fn map_algebra(&self, phi: &AlgebraMorphism) -> Result<PointAuto, PointError> {
        if *phi.source() != self.algebra {
            return Err(PointError::ForeignRing);
        }
        let entries = self
            .entries
            .iter()
            .map(|e| phi.apply(e))
            .collect::<Result<Vec<_>, _>>()?;
        PointAuto::new(&self.space, phi.target(), entries)
    }

    /// `Ψ`: the point with `F^κ_λ = φ^*(y^κ_λ)` for a pullback from the
    /// coordinates of `GL(V)` into the algebra.
    pub fn psi(space: &GradedSpace, algebra: &CoefficientAlgebra, phi: &RingMorphism) -> Result<PointAuto, PointError> {
        let source = phi.source();
        let n = space.dim();
        if source.len() != n * n {
            return Err(PointError::Shape {
                expected: n * n,
                found: source.len(),
            });
        }
        let expected = gl_ring(space, "y");
        if (0..n * n).any(|i| source.degree(i) != expected.degree(i)) {
            return Err(PointError::SpaceMismatch);
        }
        if **phi.target() != **algebra.ring() {
            return Err(PointError::ForeignRing);
        }
        PointAuto::new(space, algebra, phi.images().to_vec())
    }

    /// `Ψ^{-1}`: the pullback `y^κ_λ ↦ F^κ_λ`.
    pub fn psi_inverse(&self) -> RingMorphism {
        RingMorphism::new(
            gl_ring(&self.space, "y"),
            self.algebra.ring().clone(),
            self.entries.clone(),
        )
        .expect("entries have the degrees of the coordinates")
    }

    /// `Ψ` applied to the pair `(Ψ^{-1}(F), Ψ^{-1}(G))` composed with `μ^*`:
    /// the group law of `GL(V)` read at the level of pullbacks.
    pub fn multiply_via_pullbacks(&self, other: &PointAuto) -> Result<PointAuto, PointError> {
        self.check_compatible(other)?;
        let mu = pullback_mu(&self.space);
        // The pair ring lists the second factor before the first.
        let images = other.entries.iter().chain(&self.entries).cloned().collect();
        let pair = RingMorphism::new(mu.target().clone(), self.algebra.ring().clone(), images)?;
        let composite = mu.then(&pair)?;
        let truncated = composite.images().iter().map(|p| self.algebra.reduce(p)).collect();
        let phi = RingMorphism::new(composite.source().clone(), composite.target().clone(), truncated)?;
        PointAuto::psi(&self.space, &self.algebra, &phi)
    }

    /// A JSON-friendly rendering of the entries, row by row.
    pub fn dump(&self) -> PointDump {
        let n = self.dim();
        PointDump {
            rows: (0..n)
                .map(|k| (0..n).map(|l| self.entry(k, l).to_string()).collect())
                .collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PointDump {
    pub rows: Vec<Vec<String>>,
}

impl fmt::Debug for PointAuto {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointAuto {:?}", self.dump().rows)
    }
}
