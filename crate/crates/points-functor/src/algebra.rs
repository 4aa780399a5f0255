//! Truncated graded-commutative coefficient algebras and their morphisms.

use std::sync::Arc;

use bilinear_forms::random::small_rational;
use coordinate_ring::{Monomial, Poly, Ring, RingMorphism, Variable};
use graded_core::{Degree, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::PointError;

/// The free graded-commutative algebra on a list of generators, modulo all
/// words of length greater than the truncation `W`.
///
/// The augmentation ideal (words of length at least one) is nilpotent: any
/// product of `W + 1` of its elements vanishes.
#[derive(Debug, Clone)]
pub struct CoefficientAlgebra {
    ring: Arc<Ring>,
    truncation: u32,
    monomials: Arc<Vec<Monomial>>,
}

impl PartialEq for CoefficientAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.truncation == other.truncation && *self.ring == *other.ring
    }
}

impl CoefficientAlgebra {
    pub fn new(generators: Vec<Variable>, truncation: u32) -> Result<Self, PointError> {
        if truncation == 0 {
            return Err(PointError::ZeroTruncation);
        }
        let ring = Ring::new(generators)?;
        let mut monomials = Vec::new();
        enumerate(&ring, 0, &Poly::one(&ring), 0, truncation, &mut monomials);
        monomials.sort();
        Ok(CoefficientAlgebra {
            ring,
            truncation,
            monomials: Arc::new(monomials),
        })
    }

    /// The algebra `ℝ` itself: no generators.
    pub fn trivial() -> Self {
        CoefficientAlgebra::new(Vec::new(), 1).expect("the empty ring is valid")
    }

    /// Generators given as `(name, degree)` pairs.
    pub fn with_generators(generators: &[(&str, Degree)], truncation: u32) -> Result<Self, PointError> {
        CoefficientAlgebra::new(
            generators.iter().map(|&(n, d)| Variable::new(n, d)).collect(),
            truncation,
        )
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn num_generators(&self) -> usize {
        self.ring.len()
    }

    pub fn zero(&self) -> Poly {
        Poly::zero(&self.ring)
    }

    pub fn one(&self) -> Poly {
        Poly::one(&self.ring)
    }

    pub fn constant(&self, c: Rational) -> Poly {
        Poly::constant(&self.ring, c)
    }

    pub fn generator(&self, i: usize) -> Poly {
        Poly::variable(&self.ring, i).truncate(self.truncation)
    }

    pub fn named(&self, name: &str) -> Result<Poly, PointError> {
        Ok(Poly::named(&self.ring, name)?.truncate(self.truncation))
    }

    /// Whether `p` is an element of this algebra.
    pub fn contains(&self, p: &Poly) -> bool {
        *p.ring() == self.ring
    }

    /// The product in the truncated algebra.
    pub fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        a.mul_truncated(b, self.truncation)
    }

    /// Drops the words longer than the truncation.
    pub fn reduce(&self, p: &Poly) -> Poly {
        p.truncate(self.truncation)
    }

    /// All nonzero monomials of word length between 1 and `W`.
    pub fn soul_monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn soul_monomials_of_degree(&self, degree: Degree) -> Vec<&Monomial> {
        self.monomials
            .iter()
            .filter(|m| m.degree(&self.ring) == degree)
            .collect()
    }

    /// A random element of the augmentation ideal, homogeneous of `degree`,
    /// with at most `max_terms` monomials and small rational coefficients.
    pub fn random_soul<R: Rng + ?Sized>(&self, rng: &mut R, degree: Degree, max_terms: usize) -> Poly {
        let candidates = self.soul_monomials_of_degree(degree);
        let mut out = self.zero();
        if candidates.is_empty() || max_terms == 0 {
            return out;
        }
        let count = rng.gen_range(1..=max_terms);
        for m in candidates.choose_multiple(rng, count) {
            let c = small_rational(rng, 3);
            if !c.is_zero() {
                out = out.add(&Poly::term(&self.ring, (*m).clone(), c));
            }
        }
        out
    }
}

fn enumerate(ring: &Arc<Ring>, var: usize, current: &Poly, len: u32, max: u32, out: &mut Vec<Monomial>) {
    if var == ring.len() {
        if len > 0 {
            let (m, _) = current
                .terms()
                .next()
                .expect("a product of distinct generators is nonzero");
            out.push(m.clone());
        }
        return;
    }
    let cap = if ring.is_odd(var) { 1 } else { max - len };
    let x = Poly::variable(ring, var);
    let mut p = current.clone();
    for e in 0..=cap.min(max - len) {
        enumerate(ring, var + 1, &p, len + e, max, out);
        p = p.mul(&x);
    }
}

/// A morphism of truncated algebras given by substituting, for every
/// generator of the source, an element of the target's augmentation ideal
/// of the same degree.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraMorphism {
    source: CoefficientAlgebra,
    target: CoefficientAlgebra,
    map: RingMorphism,
}

impl AlgebraMorphism {
    /// The images must lie in the augmentation ideal and the target must be
    /// truncated no later than the source, so that long words are sent to
    /// long words.
    pub fn new(
        source: &CoefficientAlgebra,
        target: &CoefficientAlgebra,
        images: Vec<Poly>,
    ) -> Result<Self, PointError> {
        if target.truncation > source.truncation {
            return Err(PointError::Morphism(format!(
                "target truncation {} exceeds source truncation {}",
                target.truncation, source.truncation
            )));
        }
        for (i, img) in images.iter().enumerate() {
            if !img.constant_term().is_zero() {
                return Err(PointError::Morphism(format!(
                    "image of {} has a nonzero body",
                    source.ring.name(i)
                )));
            }
        }
        let images = images.iter().map(|p| p.truncate(target.truncation)).collect();
        let map = RingMorphism::new(source.ring.clone(), target.ring.clone(), images)?;
        Ok(AlgebraMorphism {
            source: source.clone(),
            target: target.clone(),
            map,
        })
    }

    /// A random endomorphism sending each generator to a random soul element
    /// of its degree.
    pub fn random<R: Rng + ?Sized>(rng: &mut R, algebra: &CoefficientAlgebra) -> Self {
        let images = (0..algebra.num_generators())
            .map(|i| algebra.random_soul(rng, algebra.ring.degree(i), 3))
            .collect();
        AlgebraMorphism::new(algebra, algebra, images).expect("random souls have the right degrees")
    }

    pub fn source(&self) -> &CoefficientAlgebra {
        &self.source
    }

    pub fn target(&self) -> &CoefficientAlgebra {
        &self.target
    }

    pub fn ring_morphism(&self) -> &RingMorphism {
        &self.map
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly, PointError> {
        Ok(self.map.apply(p)?.truncate(self.target.truncation))
    }
}
