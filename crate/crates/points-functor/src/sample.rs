//! Random points of `GL(V)` and of the orthogonal or symplectic subgroup.

use std::collections::{BTreeMap, BTreeSet};

use bilinear_forms::random::{random_invertible, small_rational};
use bilinear_forms::BilinearForm;
use coordinate_ring::{Monomial, Poly};
use endo_algebra::{cayley_transform, decompose, EndoError};
use graded_core::{Degree, GradedError, GradedMap, GradedSpace, Matrix, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{is_orthogonal_point, skew_entry_patterns, CoefficientAlgebra, PointAuto, PointError};

const ATTEMPTS: usize = 50;

/// A random invertible degree zero matrix: an invertible block for each
/// degree, zero between different degrees.
pub fn random_block_body<R: Rng + ?Sized>(rng: &mut R, space: &GradedSpace) -> Matrix {
    let n = space.dim();
    let mut body = Matrix::zeros(n, n);
    let degrees: BTreeSet<_> = space.degrees().into_iter().collect();
    for d in degrees {
        let idx = space.indices_of_degree(d);
        let block = random_invertible(rng, idx.len());
        for (i, &r) in idx.iter().enumerate() {
            for (j, &c) in idx.iter().enumerate() {
                body[(r, c)] = block[(i, j)].clone();
            }
        }
    }
    body
}

/// A random point with each entry in the augmentation ideal: about half of
/// the entries get up to two monomials of the required degree.
pub fn random_soul_point<R: Rng + ?Sized>(rng: &mut R, space: &GradedSpace, algebra: &CoefficientAlgebra) -> PointAuto {
    let n = space.dim();
    let mut entries = Vec::with_capacity(n * n);
    for kappa in 0..n {
        for lambda in 0..n {
            let d = space.degree(lambda) - space.degree(kappa);
            if rng.gen_bool(0.5) {
                entries.push(algebra.random_soul(rng, d, 2));
            } else {
                entries.push(algebra.zero());
            }
        }
    }
    PointAuto::new(space, algebra, entries).expect("souls have the required degrees")
}

/// A random invertible point: a random block body plus a sparse soul.
pub fn random_invertible_point<R: Rng + ?Sized>(
    rng: &mut R,
    space: &GradedSpace,
    algebra: &CoefficientAlgebra,
) -> PointAuto {
    let body =
        PointAuto::from_body(space, algebra, &random_block_body(rng, space)).expect("block bodies have degree zero");
    body.add(&random_soul_point(rng, space, algebra))
        .expect("same space and algebra")
}

/// Samples points of the orthogonal (or symplectic) group of a form. The
/// degree zero skew elements and the skew entry patterns are computed once.
#[derive(Debug, Clone)]
pub struct OrthogonalSampler {
    beta: BilinearForm,
    skew_degree_zero: Vec<GradedMap>,
    patterns: BTreeMap<Degree, Vec<Vec<Rational>>>,
}

impl OrthogonalSampler {
    pub fn new(beta: &BilinearForm, algebra: &CoefficientAlgebra) -> Result<Self, PointError> {
        let skew_degree_zero = decompose(beta)?
            .skew
            .basis
            .into_iter()
            .filter(|b| b.degree() == 0)
            .collect();
        let mut patterns = BTreeMap::new();
        for m in algebra.soul_monomials() {
            let d = m.degree(algebra.ring());
            if let std::collections::btree_map::Entry::Vacant(e) = patterns.entry(d) {
                e.insert(skew_entry_patterns(beta, d)?);
            }
        }
        Ok(OrthogonalSampler {
            beta: beta.clone(),
            skew_degree_zero,
            patterns,
        })
    }

    pub fn form(&self) -> &BilinearForm {
        &self.beta
    }

    /// A random degree zero map `A` with `τ(A)A = 1`, the Cayley transform
    /// of a random degree zero skew element.
    pub fn orthogonal_map<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<GradedMap, PointError> {
        let space = self.beta.space();
        for _ in 0..ATTEMPTS {
            let mut x = GradedMap::zero(space, space, 0);
            for b in &self.skew_degree_zero {
                x = x.add(&b.scale(&small_rational(rng, 2)))?;
            }
            match cayley_transform(&x) {
                Ok(a) => return Ok(a),
                Err(EndoError::Graded(GradedError::Singular)) => continue,
                Err(e) => return Err(e.into()),
            }
        }
        Err(PointError::Sampling(ATTEMPTS))
    }

    /// A random point `X` with entries in the augmentation ideal and
    /// `τ_pt(X) = -X`, built monomial by monomial.
    pub fn skew_soul<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        algebra: &CoefficientAlgebra,
    ) -> Result<PointAuto, PointError> {
        let space = self.beta.space();
        let n = space.dim();
        let ring = algebra.ring();
        let mut entries = vec![algebra.zero(); n * n];
        let monomials: Vec<&Monomial> = algebra
            .soul_monomials()
            .iter()
            .filter(|m| self.patterns.get(&m.degree(ring)).is_some_and(|p| !p.is_empty()))
            .collect();
        let count = rng.gen_range(1..=3).min(monomials.len());
        for m in monomials.choose_multiple(rng, count) {
            for pattern in &self.patterns[&m.degree(ring)] {
                let c = small_rational(rng, 2);
                if c.is_zero() {
                    continue;
                }
                for (entry, p) in entries.iter_mut().zip(pattern) {
                    if !p.is_zero() {
                        *entry = entry.add(&Poly::term(ring, (*m).clone(), &c * p));
                    }
                }
            }
        }
        PointAuto::new(space, algebra, entries)
    }

    /// A Cayley body times the exponential of a skew soul, checked with
    /// [`is_orthogonal_point`] before it is returned.
    pub fn point<R: Rng + ?Sized>(&self, rng: &mut R, algebra: &CoefficientAlgebra) -> Result<PointAuto, PointError> {
        for _ in 0..ATTEMPTS {
            let body = PointAuto::from_map(algebra, &self.orthogonal_map(rng)?)?;
            let soul = self.skew_soul(rng, algebra)?.exp_nilpotent()?;
            let f = body.multiply(&soul)?;
            if is_orthogonal_point(&self.beta, &f)? {
                return Ok(f);
            }
        }
        Err(PointError::Sampling(ATTEMPTS))
    }
}

/// A random degree zero map `A` with `τ(A)A = 1`.
pub fn random_orthogonal_map<R: Rng + ?Sized>(rng: &mut R, beta: &BilinearForm) -> Result<GradedMap, PointError> {
    OrthogonalSampler::new(beta, &CoefficientAlgebra::trivial())?.orthogonal_map(rng)
}

/// A random point of the orthogonal (or symplectic) group of `beta`.
pub fn random_orthogonal_point<R: Rng + ?Sized>(
    rng: &mut R,
    beta: &BilinearForm,
    algebra: &CoefficientAlgebra,
) -> Result<PointAuto, PointError> {
    OrthogonalSampler::new(beta, algebra)?.point(rng, algebra)
}
