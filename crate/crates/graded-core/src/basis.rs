//! Changes of total basis and the induced transformation of coordinates.

use num_traits::Zero;

use crate::error::GradedError;
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::sign::{is_negative, parity};
use crate::space::{BasisVector, GradedSpace};

/// A change of total basis `t'_λ = B_λ^κ t_κ`, with `matrix[(λ, κ)] = B_λ^κ`.
///
/// The new basis keeps the degree of each position, `|t'_λ| = |t_λ|`, so `B`
/// must vanish whenever `|t_λ| ≠ |t_κ|`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisChange {
    matrix: Matrix,
}

impl BasisChange {
    pub fn new(v: &GradedSpace, matrix: Matrix) -> Result<Self, GradedError> {
        if matrix.rows() != v.dim() || matrix.cols() != v.dim() {
            return Err(GradedError::Shape {
                rows: matrix.rows(),
                cols: matrix.cols(),
                expected_rows: v.dim(),
                expected_cols: v.dim(),
            });
        }
        for lambda in 0..v.dim() {
            for kappa in 0..v.dim() {
                if !matrix[(lambda, kappa)].is_zero() && v.degree(lambda) != v.degree(kappa) {
                    return Err(GradedError::InhomogeneousRow { row: lambda });
                }
            }
        }
        if matrix.inverse().is_none() {
            return Err(GradedError::Singular);
        }
        Ok(BasisChange { matrix })
    }

    pub fn identity(v: &GradedSpace) -> Self {
        BasisChange {
            matrix: Matrix::identity(v.dim()),
        }
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `B_λ^κ`.
    pub fn entry(&self, lambda: usize, kappa: usize) -> &Rational {
        &self.matrix[(lambda, kappa)]
    }

    /// Coordinates of the new basis vector `t'_λ` in the old basis.
    pub fn new_vector(&self, lambda: usize) -> Vec<Rational> {
        self.matrix.row(lambda).to_vec()
    }
}

/// The coordinate transformation induced by a basis change.
///
/// `forward` sends new coordinates `z'` to old coordinates `z`, and
/// `backward` is its inverse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoordinateChange {
    pub forward: Matrix,
    pub backward: Matrix,
}

impl CoordinateChange {
    pub fn to_old(&self, new_coords: &[Rational]) -> Vec<Rational> {
        self.forward.mul_vec(new_coords)
    }

    pub fn to_new(&self, old_coords: &[Rational]) -> Vec<Rational> {
        self.backward.mul_vec(old_coords)
    }
}

/// Applies a basis change. Returns the new space, whose labels are the old
/// labels primed, and the coordinate transformation
/// `z^λ = (-1)^{|t_λ|(|t_κ| - |t_λ|)} B_κ^λ z'^κ`.
///
/// The sign is evaluated literally. Because `B_κ^λ` vanishes unless
/// `|t_κ| = |t_λ|`, it is `+1` on every entry that contributes, and this is
/// asserted.
pub fn change_basis(v: &GradedSpace, b: &BasisChange) -> Result<(GradedSpace, CoordinateChange), GradedError> {
    if b.matrix.rows() != v.dim() {
        return Err(GradedError::SpaceMismatch(
            "basis change has the wrong dimension".into(),
        ));
    }
    let n = v.dim();
    let forward = Matrix::from_fn(n, n, |lambda, kappa| {
        let entry = &b.matrix[(kappa, lambda)];
        if entry.is_zero() {
            return Rational::zero();
        }
        let d_lambda = v.degree(lambda);
        let d_kappa = v.degree(kappa);
        let negative = is_negative(parity(d_lambda) * parity(d_kappa - d_lambda));
        assert!(!negative, "coordinate sign must be +1 on an admissible entry");
        entry.clone()
    });
    let backward = forward.inverse().ok_or(GradedError::Singular)?;
    let mut basis = Vec::with_capacity(n);
    for (i, t) in v.basis().iter().enumerate() {
        basis.push(BasisVector {
            label: format!("{}'", t.label),
            degree: v.degree(i),
        });
    }
    let new_space = GradedSpace::new(basis)?;
    Ok((new_space, CoordinateChange { forward, backward }))
}
