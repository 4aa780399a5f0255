//! Degree-preserving ring morphisms, derivations and Jacobians.

use std::fmt;
use std::sync::Arc;

use graded_core::{Degree, Matrix, Rational};
use num_traits::Zero;

use crate::ring::{same_ring, sign_of};
use crate::{Poly, Ring, RingError};

/// A morphism of graded-commutative rings, given by the image of every
/// generator of `source` as a polynomial in `target`.
#[derive(Clone, PartialEq, Eq)]
pub struct RingMorphism {
    source: Arc<Ring>,
    target: Arc<Ring>,
    images: Vec<Poly>,
}

impl RingMorphism {
    /// Checks that every image lives in `target` and is homogeneous of the
    /// degree of its generator.
    pub fn new(source: Arc<Ring>, target: Arc<Ring>, images: Vec<Poly>) -> Result<Self, RingError> {
        if images.len() != source.len() {
            return Err(RingError::ImageCount {
                expected: source.len(),
                found: images.len(),
            });
        }
        for (i, img) in images.iter().enumerate() {
            if !same_ring(img.ring(), &target) {
                return Err(RingError::RingMismatch);
            }
            let expected = source.degree(i);
            if !img.is_homogeneous_of(expected) {
                return Err(RingError::DegreeMismatch {
                    generator: source.name(i).to_string(),
                    expected,
                    found: img.homogeneous_degree(),
                });
            }
        }
        Ok(RingMorphism { source, target, images })
    }

    pub fn identity(ring: &Arc<Ring>) -> Self {
        let images = (0..ring.len()).map(|i| Poly::variable(ring, i)).collect();
        RingMorphism {
            source: ring.clone(),
            target: ring.clone(),
            images,
        }
    }

    pub fn source(&self) -> &Arc<Ring> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Ring> {
        &self.target
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn image(&self, i: usize) -> &Poly {
        &self.images[i]
    }

    /// Substitutes the images of the generators into `p`.
    pub fn apply(&self, p: &Poly) -> Result<Poly, RingError> {
        if !same_ring(p.ring(), &self.source) {
            return Err(RingError::RingMismatch);
        }
        let mut out = Poly::zero(&self.target);
        for (m, c) in p.terms() {
            let mut value = Poly::constant(&self.target, c.clone());
            for v in m.word() {
                value = value.mul(&self.images[v]);
                if value.is_zero() {
                    break;
                }
            }
            out = out.add(&value);
        }
        Ok(out)
    }

    /// The morphism `x ↦ other(self(x))`: first `self`, then `other`.
    pub fn then(&self, other: &RingMorphism) -> Result<RingMorphism, RingError> {
        if !same_ring(&self.target, &other.source) {
            return Err(RingError::RingMismatch);
        }
        let images = self
            .images
            .iter()
            .map(|img| other.apply(img))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(RingMorphism {
            source: self.source.clone(),
            target: other.target.clone(),
            images,
        })
    }

    /// Whether every image has total degree equal to its generator's.
    pub fn is_homogeneous(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| img.is_homogeneous_of(self.source.degree(i)))
    }
}

impl fmt::Debug for RingMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RingMorphism {{\n{self}}}")
    }
}

/// One line `name ↦ image` per generator of the source ring.
impl fmt::Display for RingMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, img) in self.images.iter().enumerate() {
            writeln!(f, "{} ↦ {}", self.source.name(i), img)?;
        }
        Ok(())
    }
}

/// A derivation of degree `d`, given by its values on the generators and
/// extended by the graded Leibniz rule
/// `X(fg) = X(f)g + (-1)^{d|f|} f X(g)`.
#[derive(Clone)]
pub struct Derivation {
    ring: Arc<Ring>,
    degree: Degree,
    images: Vec<Poly>,
}

impl PartialEq for Derivation {
    fn eq(&self, other: &Self) -> bool {
        let all_zero = |d: &Derivation| d.images.iter().all(Poly::is_zero);
        same_ring(&self.ring, &other.ring)
            && self.images == other.images
            && (self.degree == other.degree || all_zero(self))
    }
}

impl fmt::Debug for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Derivation of degree {} {{", self.degree)?;
        for (i, img) in self.images.iter().enumerate() {
            writeln!(f, "  {} ↦ {}", self.ring.name(i), img)?;
        }
        write!(f, "}}")
    }
}

impl Derivation {
    pub fn new(ring: Arc<Ring>, degree: Degree, images: Vec<Poly>) -> Result<Self, RingError> {
        if images.len() != ring.len() {
            return Err(RingError::ImageCount {
                expected: ring.len(),
                found: images.len(),
            });
        }
        for (i, img) in images.iter().enumerate() {
            if !same_ring(img.ring(), &ring) {
                return Err(RingError::RingMismatch);
            }
            let expected = ring.degree(i) + degree;
            if !img.is_homogeneous_of(expected) {
                return Err(RingError::DegreeMismatch {
                    generator: ring.name(i).to_string(),
                    expected,
                    found: img.homogeneous_degree(),
                });
            }
        }
        Ok(Derivation { ring, degree, images })
    }

    /// The left partial derivative `∂/∂x_i`, of degree `-|x_i|`.
    pub fn partial(ring: &Arc<Ring>, i: usize) -> Self {
        let images = (0..ring.len())
            .map(|j| if i == j { Poly::one(ring) } else { Poly::zero(ring) })
            .collect();
        Derivation {
            ring: ring.clone(),
            degree: -ring.degree(i),
            images,
        }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn images(&self) -> &[Poly] {
        &self.images
    }

    pub fn apply(&self, p: &Poly) -> Result<Poly, RingError> {
        if !same_ring(p.ring(), &self.ring) {
            return Err(RingError::RingMismatch);
        }
        let ring = &self.ring;
        let mut out = Poly::zero(ring);
        for (m, c) in p.terms() {
            let word = m.word();
            let mut passed: Degree = 0;
            for (i, &v) in word.iter().enumerate() {
                if !self.images[v].is_zero() {
                    let mut piece = Poly::constant(ring, c * sign_of(self.degree * passed));
                    for &u in &word[..i] {
                        piece = piece.mul(&Poly::variable(ring, u));
                    }
                    piece = piece.mul(&self.images[v]);
                    for &u in &word[i + 1..] {
                        piece = piece.mul(&Poly::variable(ring, u));
                    }
                    out = out.add(&piece);
                }
                passed += ring.degree(v);
            }
        }
        Ok(out)
    }

    /// The graded commutator `[X, Y] = XY - (-1)^{|X||Y|} YX`.
    pub fn bracket(&self, other: &Derivation) -> Result<Derivation, RingError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(RingError::RingMismatch);
        }
        let sign = sign_of(self.degree * other.degree);
        let images = self
            .images
            .iter()
            .zip(&other.images)
            .map(|(x, y)| Ok(self.apply(y)?.sub(&other.apply(x)?.scale(&sign))))
            .collect::<Result<Vec<_>, RingError>>()?;
        Derivation::new(self.ring.clone(), self.degree + other.degree, images)
    }

    pub fn add(&self, other: &Derivation) -> Result<Derivation, RingError> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(RingError::RingMismatch);
        }
        let images = self.images.iter().zip(&other.images).map(|(x, y)| x.add(y)).collect();
        Derivation::new(self.ring.clone(), self.degree, images)
    }

    pub fn scale(&self, c: &Rational) -> Derivation {
        Derivation {
            ring: self.ring.clone(),
            degree: self.degree,
            images: self.images.iter().map(|x| x.scale(c)).collect(),
        }
    }
}

/// Checks that `point` assigns zero to every variable of nonzero degree.
pub fn check_point(ring: &Ring, point: &[Rational]) -> Result<(), RingError> {
    if point.len() != ring.len() {
        return Err(RingError::InvalidPoint(format!(
            "expected {} coordinates, found {}",
            ring.len(),
            point.len()
        )));
    }
    for (i, value) in point.iter().enumerate() {
        if ring.degree(i) != 0 && !value.is_zero() {
            return Err(RingError::InvalidPoint(format!(
                "variable {} has degree {} and must be zero at a point",
                ring.name(i),
                ring.degree(i)
            )));
        }
    }
    Ok(())
}

/// The matrix `J[i][j] = ∂(m(s_i))/∂r_j (P)` of left partial derivatives of
/// the images of the source generators `s_i` with respect to the target
/// generators `r_j`, evaluated at `point`.
pub fn jacobian_at_point(m: &RingMorphism, point: &[Rational]) -> Result<Matrix, RingError> {
    let target = m.target();
    check_point(target, point)?;
    let partials: Vec<Derivation> = (0..target.len()).map(|j| Derivation::partial(target, j)).collect();
    let mut out = Matrix::zeros(m.source().len(), target.len());
    for (i, img) in m.images().iter().enumerate() {
        for (j, d) in partials.iter().enumerate() {
            out[(i, j)] = d.apply(img)?.evaluate(point);
        }
    }
    Ok(out)
}
