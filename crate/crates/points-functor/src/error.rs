use bilinear_forms::FormError;
use coordinate_ring::RingError;
use endo_algebra::EndoError;
use graded_core::{Degree, GradedError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum PointError {
    #[error("entry ({kappa}, {lambda}) must be homogeneous of degree {expected}")]
    EntryDegree {
        kappa: usize,
        lambda: usize,
        expected: Degree,
    },
    #[error("expected {expected} entries, found {found}")]
    Shape { expected: usize, found: usize },
    #[error("the entries do not live in the algebra's ring")]
    ForeignRing,
    #[error("the body of the point is singular")]
    SingularBody,
    #[error("the truncation must be positive")]
    ZeroTruncation,
    #[error("algebra morphism: {0}")]
    Morphism(String),
    #[error("the form lives on a different space")]
    SpaceMismatch,
    #[error("could not sample an orthogonal point after {0} attempts")]
    Sampling(usize),
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Endo(#[from] EndoError),
    #[error(transparent)]
    Graded(#[from] GradedError),
    #[error(transparent)]
    Form(#[from] FormError),
}
