//! Standard bases for graded metrics and symplectic forms, and the
//! factorization of the underlying Lie group into classical groups.

mod shape;
mod standardize;
mod underlying;

use bilinear_forms::{FormError, FormViolation};
use endo_algebra::EndoError;
use graded_core::{Degree, GradedError};
use thiserror::Error;

pub use shape::{shape, FormShape};
pub use standardize::{standardize, MiddleEntry, MiddleKind, StandardBasisReport};
pub use underlying::{
    factor_underlying, orthogonal_algebra_dim, reconstruct_underlying, underlying_group_dim, underlying_levels,
    GroupKind, LevelBlock, UnderlyingFactorization,
};

#[derive(Debug, Error)]
pub enum StandardError {
    #[error("dimension condition fails: r_{degree} = {dim} but r_{partner} = {partner_dim}")]
    DimensionCondition {
        degree: Degree,
        dim: usize,
        partner: Degree,
        partner_dim: usize,
    },
    #[error("invalid form")]
    Invalid(#[from] FormViolation),
    #[error("the map is not an orthogonal degree zero automorphism")]
    NotOrthogonal,
    #[error("blocks: {0}")]
    Blocks(String),
    #[error(transparent)]
    Form(#[from] FormError),
    #[error(transparent)]
    Endo(#[from] EndoError),
    #[error(transparent)]
    Graded(#[from] GradedError),
}
