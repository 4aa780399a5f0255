//! Graded vector spaces described by an ordered total basis.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::GradedError;
use crate::map::GradedMap;
use crate::matrix::Matrix;

pub type Degree = i64;

/// One element `t_λ` of a total basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BasisVector {
    pub label: String,
    pub degree: Degree,
}

/// Graded dimension: the number `r_j` of basis vectors in each degree `j`.
/// Degrees with `r_j = 0` are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GradedDim {
    counts: BTreeMap<Degree, usize>,
}

impl GradedDim {
    pub fn from_counts(counts: impl IntoIterator<Item = (Degree, usize)>) -> Self {
        let mut out = BTreeMap::new();
        for (d, c) in counts {
            if c > 0 {
                *out.entry(d).or_insert(0) += c;
            }
        }
        GradedDim { counts: out }
    }

    /// `r_j`, zero for degrees that do not occur.
    pub fn get(&self, degree: Degree) -> usize {
        self.counts.get(&degree).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    /// Nonzero entries in increasing degree order.
    pub fn iter(&self) -> impl Iterator<Item = (Degree, usize)> + '_ {
        self.counts.iter().map(|(&d, &c)| (d, c))
    }

    pub fn min_degree(&self) -> Option<Degree> {
        self.counts.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<Degree> {
        self.counts.keys().next_back().copied()
    }
}

impl fmt::Display for GradedDim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|(d, c)| format!("{d}:{c}")).collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

/// The reflected graded dimension, `(¬r)_j = r_{-j}`.
pub fn neg_dim(d: &GradedDim) -> GradedDim {
    GradedDim::from_counts(d.iter().map(|(j, c)| (-j, c)))
}

/// A finite-dimensional graded vector space with a fixed ordered total basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedSpace {
    basis: Vec<BasisVector>,
}

impl GradedSpace {
    /// Builds a space from `(label, degree)` pairs, rejecting duplicate labels.
    pub fn new(basis: Vec<BasisVector>) -> Result<Self, GradedError> {
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.label.as_str()) {
                return Err(GradedError::DuplicateLabel(b.label.clone()));
            }
        }
        Ok(GradedSpace { basis })
    }

    /// Builds a space from parallel label and degree lists.
    pub fn from_labels(labels: &[String], degrees: &[Degree]) -> Result<Self, GradedError> {
        if labels.len() != degrees.len() {
            return Err(GradedError::SpaceMismatch(format!(
                "{} labels for {} degrees",
                labels.len(),
                degrees.len()
            )));
        }
        GradedSpace::new(
            labels
                .iter()
                .zip(degrees)
                .map(|(l, &d)| BasisVector {
                    label: l.clone(),
                    degree: d,
                })
                .collect(),
        )
    }

    pub fn zero() -> Self {
        GradedSpace { basis: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[BasisVector] {
        &self.basis
    }

    pub fn degree(&self, index: usize) -> Degree {
        self.basis[index].degree
    }

    pub fn label(&self, index: usize) -> &str {
        &self.basis[index].label
    }

    pub fn degrees(&self) -> Vec<Degree> {
        self.basis.iter().map(|b| b.degree).collect()
    }

    pub fn labels(&self) -> Vec<String> {
        self.basis.iter().map(|b| b.label.clone()).collect()
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.label == label)
    }

    pub fn gdim(&self) -> GradedDim {
        GradedDim::from_counts(self.basis.iter().map(|b| (b.degree, 1)))
    }

    /// Indices of the basis vectors of the given degree, in basis order.
    pub fn indices_of_degree(&self, degree: Degree) -> Vec<usize> {
        (0..self.dim()).filter(|&i| self.degree(i) == degree).collect()
    }
}

impl Serialize for GradedSpace {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        SpaceRecord {
            degrees: self.degrees(),
            labels: Some(self.labels()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GradedSpace {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let record = SpaceRecord::deserialize(d)?;
        record.into_space().map_err(serde::de::Error::custom)
    }
}

/// Text form of a space: a degree list and optional labels.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SpaceRecord {
    pub degrees: Vec<Degree>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl SpaceRecord {
    pub fn into_space(self) -> Result<GradedSpace, GradedError> {
        match self.labels {
            Some(labels) => GradedSpace::from_labels(&labels, &self.degrees),
            None => Ok(make_space(&self.degrees)),
        }
    }
}

/// Builds a space from a degree list with labels `t1, t2, ...`.
pub fn make_space(degrees: &[Degree]) -> GradedSpace {
    GradedSpace {
        basis: degrees
            .iter()
            .enumerate()
            .map(|(i, &d)| BasisVector {
                label: format!("t{}", i + 1),
                degree: d,
            })
            .collect(),
    }
}

/// The dual space with the dual basis `t^λ`, labelled `{label}*`, of degree `-|t_λ|`.
pub fn dual_space(v: &GradedSpace) -> GradedSpace {
    GradedSpace {
        basis: v
            .basis
            .iter()
            .map(|b| BasisVector {
                label: format!("{}*", b.label),
                degree: -b.degree,
            })
            .collect(),
    }
}

/// The shifted space `V[m]` with `(V[m])_j = V_{j+m}`, together with the
/// canonical degree `m` isomorphism `δ[m]: V[m] → V`. For `m = 0` the space
/// is returned unchanged and `δ[0]` is the identity.
pub fn degree_shift(v: &GradedSpace, m: Degree) -> Result<(GradedSpace, GradedMap), GradedError> {
    let shifted = if m == 0 {
        v.clone()
    } else {
        let mut basis = Vec::with_capacity(v.dim());
        for b in &v.basis {
            basis.push(BasisVector {
                label: format!("{}[{}]", b.label, m),
                degree: b.degree.checked_sub(m).ok_or(GradedError::DegreeOverflow)?,
            });
        }
        GradedSpace { basis }
    };
    let delta = GradedMap::new(shifted.clone(), v.clone(), m, Matrix::identity(v.dim()))?;
    Ok((shifted, delta))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_labels_rejected() {
        let b = BasisVector {
            label: "a".into(),
            degree: 0,
        };
        assert_eq!(
            GradedSpace::new(vec![b.clone(), b]),
            Err(GradedError::DuplicateLabel("a".into()))
        );
    }

    #[test]
    fn gdim_omits_empty_degrees() {
        let v = make_space(&[0, 0, 2, -2]);
        let g = v.gdim();
        assert_eq!(g.get(0), 2);
        assert_eq!(g.get(1), 0);
        assert_eq!(g.iter().count(), 3);
    }

    #[test]
    fn shift_overflow_is_an_error() {
        let v = make_space(&[i64::MIN]);
        assert_eq!(degree_shift(&v, 1).unwrap_err(), GradedError::DegreeOverflow);
    }
}
