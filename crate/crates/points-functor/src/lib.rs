//! The functor of points of `GL(V)` and of its orthogonal and symplectic
//! subgroups, realized by matrices over truncated graded-commutative
//! algebras.

mod algebra;
mod error;
mod module;
mod orthogonal;
mod point;
mod sample;
mod suite;
mod xi;

pub use algebra::{AlgebraMorphism, CoefficientAlgebra};
pub use error::PointError;
pub use module::{frame_gram, pairing, ModuleElement};
pub use orthogonal::{
    is_orthogonal_point, is_tau_orthogonal_point, preserves_frame_pairing, skew_entry_patterns, tau_point,
    tau_point_matrix,
};
pub use point::{PointAuto, PointDump};
pub use sample::{
    random_block_body, random_invertible_point, random_orthogonal_map, random_orthogonal_point, random_soul_point,
    OrthogonalSampler,
};
pub use suite::{group_suite, SuiteFailure, SuiteReport};
pub use xi::{xi_inverse, xi_points};
