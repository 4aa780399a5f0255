//! Homogeneous linear maps between graded spaces.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::GradedError;
use crate::matrix::Matrix;
use crate::rational::{format_rational, parse_rational, unit_sign, Rational};
use crate::sign::{is_negative, parity};
use crate::space::{dual_space, Degree, GradedSpace};

/// A graded linear map `A: V → W` of degree `|A|`.
///
/// The matrix has one row per codomain basis vector and one column per
/// domain basis vector, so that `matrix[(σ, λ)] = A_λ^σ` in
/// `A(t_λ) = A_λ^σ s_σ`. Composition is then plain matrix multiplication.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedMap {
    domain: GradedSpace,
    codomain: GradedSpace,
    degree: Degree,
    matrix: Matrix,
}

impl GradedMap {
    /// Checks the shape and the degree-block constraint: `A_λ^σ` may only be
    /// nonzero when `|s_σ| = |t_λ| + |A|`.
    pub fn new(
        domain: GradedSpace,
        codomain: GradedSpace,
        degree: Degree,
        matrix: Matrix,
    ) -> Result<Self, GradedError> {
        if matrix.rows() != codomain.dim() || matrix.cols() != domain.dim() {
            return Err(GradedError::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: codomain.dim(),
                expected_cols: domain.dim(),
            });
        }
        for sigma in 0..codomain.dim() {
            for lambda in 0..domain.dim() {
                if matrix[(sigma, lambda)].is_zero() {
                    continue;
                }
                if domain.degree(lambda).checked_add(degree) != Some(codomain.degree(sigma)) {
                    return Err(GradedError::DegreeBlock {
                        domain: lambda,
                        codomain: sigma,
                        degree,
                    });
                }
            }
        }
        Ok(GradedMap {
            domain,
            codomain,
            degree,
            matrix,
        })
    }

    /// Builds a map from `(λ, σ, A_λ^σ)` triples; unspecified entries are zero
    /// and repeated entries are summed.
    pub fn from_entries(
        domain: GradedSpace,
        codomain: GradedSpace,
        degree: Degree,
        entries: &[(usize, usize, Rational)],
    ) -> Result<Self, GradedError> {
        let mut m = Matrix::zeros(codomain.dim(), domain.dim());
        for (lambda, sigma, value) in entries {
            if *lambda >= domain.dim() || *sigma >= codomain.dim() {
                return Err(GradedError::Shape {
                    rows: sigma + 1,
                    cols: lambda + 1,
                    expected_rows: codomain.dim(),
                    expected_cols: domain.dim(),
                });
            }
            m[(*sigma, *lambda)] += value;
        }
        GradedMap::new(domain, codomain, degree, m)
    }

    pub fn identity(v: &GradedSpace) -> Self {
        GradedMap {
            domain: v.clone(),
            codomain: v.clone(),
            degree: 0,
            matrix: Matrix::identity(v.dim()),
        }
    }

    pub fn zero(domain: &GradedSpace, codomain: &GradedSpace, degree: Degree) -> Self {
        GradedMap {
            domain: domain.clone(),
            codomain: codomain.clone(),
            degree,
            matrix: Matrix::zeros(codomain.dim(), domain.dim()),
        }
    }

    /// The standard basis element `Δ_λ^κ` of `gl(V)`, sending `t_κ` to `t_λ`
    /// and every other basis vector to zero. Its degree is `|t_λ| - |t_κ|`.
    pub fn matrix_unit(v: &GradedSpace, lambda: usize, kappa: usize) -> Result<Self, GradedError> {
        let degree = v
            .degree(lambda)
            .checked_sub(v.degree(kappa))
            .ok_or(GradedError::DegreeOverflow)?;
        let mut m = Matrix::zeros(v.dim(), v.dim());
        m[(lambda, kappa)] = Rational::one();
        Ok(GradedMap {
            domain: v.clone(),
            codomain: v.clone(),
            degree,
            matrix: m,
        })
    }

    pub fn domain(&self) -> &GradedSpace {
        &self.domain
    }

    pub fn codomain(&self) -> &GradedSpace {
        &self.codomain
    }

    pub fn degree(&self) -> Degree {
        self.degree
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// The coefficient `A_λ^σ` of `s_σ` in `A(t_λ)`.
    pub fn entry(&self, lambda: usize, sigma: usize) -> &Rational {
        &self.matrix[(sigma, lambda)]
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.domain == self.codomain
    }

    /// Applies the map to a coordinate vector in the domain basis.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.matrix.mul_vec(v)
    }

    /// `self ∘ other`, of degree `|self| + |other|`.
    pub fn compose(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        if other.codomain != self.domain {
            return Err(GradedError::SpaceMismatch(
                "codomain of the inner map differs from the domain of the outer map".into(),
            ));
        }
        Ok(GradedMap {
            domain: other.domain.clone(),
            codomain: self.codomain.clone(),
            degree: self
                .degree
                .checked_add(other.degree)
                .ok_or(GradedError::DegreeOverflow)?,
            matrix: self.matrix.mul(&other.matrix),
        })
    }

    /// Sum of two maps with the same spaces and degree. A zero summand is
    /// accepted regardless of its nominal degree.
    pub fn add(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        self.check_same_spaces(other)?;
        let degree = if other.is_zero() {
            self.degree
        } else if self.is_zero() {
            other.degree
        } else if self.degree == other.degree {
            self.degree
        } else {
            return Err(GradedError::DegreeMismatch(format!(
                "cannot add maps of degrees {} and {}",
                self.degree, other.degree
            )));
        };
        Ok(GradedMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            degree,
            matrix: self.matrix.add(&other.matrix),
        })
    }

    pub fn sub(&self, other: &GradedMap) -> Result<GradedMap, GradedError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> GradedMap {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, s: &Rational) -> GradedMap {
        GradedMap {
            domain: self.domain.clone(),
            codomain: self.codomain.clone(),
            degree: self.degree,
            matrix: self.matrix.scale(s),
        }
    }

    /// Replaces the nominal degree of a map; only meaningful for the zero map
    /// or when the block constraint is re-verified.
    pub fn with_degree(&self, degree: Degree) -> Result<GradedMap, GradedError> {
        GradedMap::new(self.domain.clone(), self.codomain.clone(), degree, self.matrix.clone())
    }

    /// The transpose `A^T: W* → V*`, defined by
    /// `[A^T(ξ)](v) = (-1)^{|A||ξ|} ξ(A(v))`.
    ///
    /// On dual bases, `A^T(s^σ) = (-1)^{|A||s_σ|} A_λ^σ t^λ`.
    pub fn transpose(&self) -> GradedMap {
        let pa = parity(self.degree);
        let m = Matrix::from_fn(self.domain.dim(), self.codomain.dim(), |lambda, sigma| {
            let v = &self.matrix[(sigma, lambda)];
            if v.is_zero() {
                return Rational::zero();
            }
            v * unit_sign(is_negative(pa * parity(self.codomain.degree(sigma))))
        });
        GradedMap {
            domain: dual_space(&self.codomain),
            codomain: dual_space(&self.domain),
            degree: self.degree,
            matrix: m,
        }
    }

    /// The inverse map, of degree `-|A|`.
    pub fn inverse(&self) -> Result<GradedMap, GradedError> {
        let inv = self.matrix.inverse().ok_or(GradedError::Singular)?;
        Ok(GradedMap {
            domain: self.codomain.clone(),
            codomain: self.domain.clone(),
            degree: self.degree.checked_neg().ok_or(GradedError::DegreeOverflow)?,
            matrix: inv,
        })
    }

    /// Reinterprets the map between different spaces of the same dimensions,
    /// re-checking the degree-block constraint.
    pub fn reinterpret(
        &self,
        domain: &GradedSpace,
        codomain: &GradedSpace,
        degree: Degree,
    ) -> Result<GradedMap, GradedError> {
        GradedMap::new(domain.clone(), codomain.clone(), degree, self.matrix.clone())
    }

    pub fn to_record(&self) -> MapRecord {
        let mut entries = Vec::new();
        for lambda in 0..self.domain.dim() {
            for sigma in 0..self.codomain.dim() {
                let v = &self.matrix[(sigma, lambda)];
                if !v.is_zero() {
                    entries.push((lambda, sigma, format_rational(v)));
                }
            }
        }
        MapRecord {
            degree: self.degree,
            entries,
        }
    }

    pub fn from_record(
        domain: &GradedSpace,
        codomain: &GradedSpace,
        record: &MapRecord,
    ) -> Result<GradedMap, MapRecordError> {
        let mut triples = Vec::with_capacity(record.entries.len());
        for (lambda, sigma, text) in &record.entries {
            let v = parse_rational(text).map_err(|e| MapRecordError::Parse(e.to_string()))?;
            triples.push((*lambda, *sigma, v));
        }
        GradedMap::from_entries(domain.clone(), codomain.clone(), record.degree, &triples)
            .map_err(MapRecordError::Graded)
    }

    fn check_same_spaces(&self, other: &GradedMap) -> Result<(), GradedError> {
        if self.domain != other.domain || self.codomain != other.codomain {
            return Err(GradedError::SpaceMismatch("maps act between different spaces".into()));
        }
        Ok(())
    }
}

/// Text form of a map: its degree and the nonzero `[λ, σ, "p/q"]` entries.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MapRecord {
    pub degree: Degree,
    pub entries: Vec<(usize, usize, String)>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MapRecordError {
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::space::make_space;

    #[test]
    fn block_constraint_rejects_off_degree_entries() {
        let v = make_space(&[1, -1]);
        let err = GradedMap::from_entries(v.clone(), v.clone(), 0, &[(0, 1, int(1))]).unwrap_err();
        assert_eq!(
            err,
            GradedError::DegreeBlock {
                domain: 0,
                codomain: 1,
                degree: 0
            }
        );
        assert!(GradedMap::from_entries(v.clone(), v, -2, &[(0, 1, int(1))]).is_ok());
    }

    #[test]
    fn record_round_trip() {
        let v = make_space(&[0, 0]);
        let a = GradedMap::from_entries(v.clone(), v.clone(), 0, &[(0, 1, int(3))]).unwrap();
        let rec = a.to_record();
        assert_eq!(rec.entries, vec![(0, 1, "3/1".to_string())]);
        assert_eq!(GradedMap::from_record(&v, &v, &rec).unwrap(), a);
    }

    #[test]
    fn zero_space_maps() {
        let z = make_space(&[]);
        let id = GradedMap::identity(&z);
        assert_eq!(id.compose(&id).unwrap(), id);
        assert_eq!(id.inverse().unwrap(), id);
        assert_eq!(id.transpose().matrix().rows(), 0);
    }
}
