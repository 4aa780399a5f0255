use std::collections::BTreeMap;

use graded_core::{Degree, GradedSpace};
use serde::Serialize;

use crate::StandardError;

/// The numbers `k = -⌊ℓ/2⌋` and `ε = ℓ mod 2`, so that `ℓ = -2k + ε`, the
/// graded dimension `r_j`, and `i_•`, the largest `i` with `r_{k+i} ≠ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormShape {
    pub ell: Degree,
    pub k: Degree,
    pub epsilon: Degree,
    pub i_bullet: usize,
    pub dims: BTreeMap<Degree, usize>,
}

impl FormShape {
    pub fn r(&self, degree: Degree) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    /// The degree `-(j + ℓ)` paired with `j`.
    pub fn partner(&self, degree: Degree) -> Degree {
        -(degree + self.ell)
    }

    /// Whether `V_k` pairs with itself.
    pub fn has_middle(&self) -> bool {
        self.epsilon == 0 && self.r(self.k) > 0
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }
}

/// Computes the shape and checks `r_{k+i} = r_{k-(i+ε)}` for all `i`.
pub fn shape(space: &GradedSpace, ell: Degree) -> Result<FormShape, StandardError> {
    let k = -ell.div_euclid(2);
    let epsilon = ell.rem_euclid(2);
    let dims: BTreeMap<Degree, usize> = space.gdim().iter().filter(|&(_, r)| r > 0).collect();
    for (&j, &r) in &dims {
        let partner = -(j + ell);
        let partner_dim = dims.get(&partner).copied().unwrap_or(0);
        if partner_dim != r {
            return Err(StandardError::DimensionCondition {
                degree: j,
                dim: r,
                partner,
                partner_dim,
            });
        }
    }
    let i_bullet = dims.keys().next_back().map_or(0, |&top| (top - k).max(0) as usize);
    Ok(FormShape {
        ell,
        k,
        epsilon,
        i_bullet,
        dims,
    })
}
