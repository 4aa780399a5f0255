//! Exact finite-dimensional Z-graded linear algebra over the rationals.
//!
//! A [`GradedSpace`] is an ordered total basis whose vectors carry integer
//! degrees. A [`GradedMap`] is a homogeneous linear map between two such
//! spaces, stored as a rational matrix that is checked against the
//! degree-block constraint on construction.

pub mod basis;
pub mod error;
pub mod map;
pub mod matrix;
pub mod rational;
pub mod sign;
pub mod space;

pub use basis::{change_basis, BasisChange, CoordinateChange};
pub use error::GradedError;
pub use map::GradedMap;
pub use matrix::Matrix;
pub use rational::{format_rational, parse_rational, Rational};
pub use sign::{koszul, parity};
pub use space::{degree_shift, dual_space, make_space, neg_dim, BasisVector, Degree, GradedDim, GradedSpace};
