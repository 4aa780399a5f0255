//! Graded-commutative polynomial rings standing in for the function sheaves
//! of `◊V` and `GL(V)`, with the pullbacks of the group structure maps and
//! of the maps used to cut out orthogonal and symplectic groups.

mod group;
mod linear;
mod morphism;
mod ring;

use graded_core::{Degree, GradedError};
use thiserror::Error;

pub use group::{
    action_from_representation, action_ring, chi0_tangent_matrix, extract_representation, gl_point, homothety,
    left_invariant_field, pair_ring, pullback_chi0, pullback_chi0_composite, pullback_mu, pullback_mu_into,
    pullback_projector, pullback_tau, pullback_theta, pullback_unit_into, tau_matrix, unit_times_identity,
};
pub use linear::{gl_index, gl_ring, gl_space, linear_ring, pullback_dia_bilinear, pullback_dia_map, BilinearMapData};
pub use morphism::{check_point, jacobian_at_point, Derivation, RingMorphism};
pub use ring::{multiply, Monomial, Poly, Ring, Variable};

#[derive(Debug, Error)]
pub enum RingError {
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("variable `{0}` is registered twice")]
    DuplicateVariable(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("expected {expected} generator images, found {found}")]
    ImageCount { expected: usize, found: usize },
    #[error("image of `{generator}` should have degree {expected}, found {found:?}")]
    DegreeMismatch {
        generator: String,
        expected: Degree,
        found: Option<Degree>,
    },
    #[error("the action is not linear in `{generator}`")]
    NotLinear { generator: String },
    #[error("only degree zero maps have a pullback, found degree {0}")]
    NonzeroDegree(Degree),
    #[error("invalid point: {0}")]
    InvalidPoint(String),
    #[error("{0}")]
    Shape(String),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Form(#[from] bilinear_forms::FormError),
}
