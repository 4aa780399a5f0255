//! Degree-ℓ graded symmetric and skew-symmetric bilinear forms.
//!
//! A [`BilinearForm`] stores its Gram matrix as the form values
//! `G_{λκ} = β(t_λ, t_κ)`. The matrix of the musical map,
//! `β_♭(t_λ) = f_{λκ} t^κ`, is derived from it by
//! `f_{λκ} = (-1)^{(|t_λ|+1)ℓ} G_{λκ}`.

pub mod config;
pub mod random;

use std::fmt;

use graded_core::rational::unit_sign;
use graded_core::sign::{is_negative, parity};
use graded_core::{degree_shift, dual_space, Degree, GradedError, GradedMap, GradedSpace, Matrix, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use config::{FormConfig, IndexRef};

/// Symmetry type of a form: `β(v,w) = ε (-1)^{(|v|+ℓ)(|w|+ℓ)} β(w,v)` with
/// `ε = +1` for symmetric and `ε = -1` for skew forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormKind {
    Symmetric,
    Skew,
}

impl FormKind {
    /// True for the skew kind, i.e. when the symmetry sign `ε` is `-1`.
    pub fn is_skew(self) -> bool {
        self == FormKind::Skew
    }

    /// `ε` as `+1` or `-1`.
    pub fn sign(self) -> i64 {
        match self {
            FormKind::Symmetric => 1,
            FormKind::Skew => -1,
        }
    }

    pub fn flip(self) -> FormKind {
        match self {
            FormKind::Symmetric => FormKind::Skew,
            FormKind::Skew => FormKind::Symmetric,
        }
    }

    /// The kind, flipped when `condition` holds.
    pub fn flip_if(self, condition: bool) -> FormKind {
        if condition {
            self.flip()
        } else {
            self
        }
    }
}

impl fmt::Display for FormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormKind::Symmetric => write!(f, "symmetric"),
            FormKind::Skew => write!(f, "skew"),
        }
    }
}

/// The first defect found by [`BilinearForm::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormViolation {
    #[error("entry ({lambda}, {kappa}) is nonzero but |t_λ| + |t_κ| + ℓ ≠ 0")]
    Support { lambda: usize, kappa: usize },

    #[error("entries ({lambda}, {kappa}) and ({kappa}, {lambda}) violate graded {kind} symmetry")]
    Symmetry {
        lambda: usize,
        kappa: usize,
        kind: FormKind,
    },

    #[error("block g_{degree}: V_{degree} → (V_{partner})* is not an isomorphism")]
    Degenerate { degree: Degree, partner: Degree },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error(transparent)]
    Graded(#[from] GradedError),

    #[error("invalid form")]
    Invalid(#[from] FormViolation),

    #[error("degree constraint ℓ' + 2|M| = ℓ fails: ℓ' = {ell_prime}, |M| = {map_degree}, ℓ = {ell}")]
    DegreeConstraint {
        ell: Degree,
        ell_prime: Degree,
        map_degree: Degree,
    },

    #[error("map is not an isomorphism between the spaces of the two forms")]
    NotIsomorphism,

    #[error("{0}")]
    Config(String),
}

/// A bilinear form of degree `ℓ` on a graded space, described by its Gram
/// matrix of values `G_{λκ} = β(t_λ, t_κ)`.
///
/// Construction only checks the shape, so that invalid data can be
/// represented and diagnosed by [`BilinearForm::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    space: GradedSpace,
    ell: Degree,
    kind: FormKind,
    gram: Matrix,
}

/// The matrix `g^{λκ}` of the inverse `β_♭^{-1}(t^λ) = g^{λκ} t_κ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseGram {
    pub matrix: Matrix,
}

impl BilinearForm {
    pub fn new(space: GradedSpace, ell: Degree, kind: FormKind, gram: Matrix) -> Result<Self, FormError> {
        if gram.rows() != space.dim() || gram.cols() != space.dim() {
            return Err(GradedError::Shape {
                rows: gram.rows(),
                cols: gram.cols(),
                expected_rows: space.dim(),
                expected_cols: space.dim(),
            }
            .into());
        }
        Ok(BilinearForm { space, ell, kind, gram })
    }

    /// Builds a form and rejects it unless it passes [`BilinearForm::validate`].
    pub fn new_valid(space: GradedSpace, ell: Degree, kind: FormKind, gram: Matrix) -> Result<Self, FormError> {
        let form = BilinearForm::new(space, ell, kind, gram)?;
        form.validate()?;
        Ok(form)
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn ell(&self) -> Degree {
        self.ell
    }

    pub fn kind(&self) -> FormKind {
        self.kind
    }

    /// Form values `G_{λκ} = β(t_λ, t_κ)`.
    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// `β(t_λ, t_κ)`.
    pub fn value(&self, lambda: usize, kappa: usize) -> &Rational {
        &self.gram[(lambda, kappa)]
    }

    /// `β(v, w)` for coordinate vectors in the basis of the space.
    pub fn evaluate(&self, v: &[Rational], w: &[Rational]) -> Rational {
        let gw = self.gram.mul_vec(w);
        v.iter().zip(&gw).fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    /// The sign `ε (-1)^{(|t_λ|+ℓ)(|t_κ|+ℓ)}` relating `G_{κλ}` to `G_{λκ}`.
    pub fn swap_sign(&self, lambda: usize, kappa: usize) -> Rational {
        let a = parity(self.space.degree(lambda) + parity(self.ell));
        let b = parity(self.space.degree(kappa) + parity(self.ell));
        unit_sign(is_negative(a * b) != self.kind.is_skew())
    }

    /// The sign `(-1)^{(|t_λ|+1)ℓ}` converting form values to flat entries.
    pub fn flat_sign(&self, lambda: usize) -> Rational {
        unit_sign(is_negative(parity(self.space.degree(lambda) + 1) * parity(self.ell)))
    }

    /// The matrix `f_{λκ} = [β_♭(t_λ)](t_κ)`, so that `β_♭(t_λ) = f_{λκ} t^κ`.
    pub fn flat_matrix(&self) -> Matrix {
        let n = self.dim();
        Matrix::from_fn(n, n, |l, k| {
            let v = &self.gram[(l, k)];
            if v.is_zero() {
                Rational::zero()
            } else {
                v * self.flat_sign(l)
            }
        })
    }

    /// Recovers a form from a flat matrix `f` using `G_{λκ} = (-1)^{(|t_λ|+1)ℓ} f_{λκ}`.
    pub fn from_flat_matrix(space: GradedSpace, ell: Degree, kind: FormKind, f: &Matrix) -> Result<Self, FormError> {
        let probe = BilinearForm::new(space, ell, kind, f.clone())?;
        let gram = probe.flat_matrix();
        Ok(BilinearForm { gram, ..probe })
    }

    /// `β_♭: V → V*`, of degree `ℓ`, with `[β_♭(v)](w) = (-1)^{(|v|+1)ℓ} β(v,w)`.
    pub fn flat(&self) -> Result<GradedMap, FormError> {
        Ok(GradedMap::new(
            self.space.clone(),
            dual_space(&self.space),
            self.ell,
            self.flat_matrix().transpose(),
        )?)
    }

    /// Checks degree support, graded (skew-)symmetry and blockwise
    /// nondegeneracy, in that order, reporting the first failure.
    pub fn validate(&self) -> Result<(), FormViolation> {
        let n = self.dim();
        for l in 0..n {
            for k in 0..n {
                let total = i128::from(self.space.degree(l)) + i128::from(self.space.degree(k)) + i128::from(self.ell);
                if !self.gram[(l, k)].is_zero() && total != 0 {
                    return Err(FormViolation::Support { lambda: l, kappa: k });
                }
            }
        }
        for l in 0..n {
            for k in l..n {
                let expected = &self.gram[(l, k)] * self.swap_sign(l, k);
                if self.gram[(k, l)] != expected {
                    return Err(FormViolation::Symmetry {
                        lambda: l,
                        kappa: k,
                        kind: self.kind,
                    });
                }
            }
        }
        let gdim = self.space.gdim();
        for (j, _) in gdim.iter() {
            let Some(partner) = j.checked_neg().and_then(|d| d.checked_sub(self.ell)) else {
                return Err(FormViolation::Degenerate { degree: j, partner: j });
            };
            let rows = self.space.indices_of_degree(j);
            let cols = self.space.indices_of_degree(partner);
            let block = self.gram.submatrix(&rows, &cols);
            if rows.len() != cols.len() || block.rank() != rows.len() {
                return Err(FormViolation::Degenerate { degree: j, partner });
            }
        }
        Ok(())
    }

    pub fn is_valid(&self) -> bool {
        self.validate().is_ok()
    }

    /// The matrix `g^{λκ} = (f^{-1})_{λκ}` of `β_♭^{-1}`.
    pub fn inverse_form(&self) -> Result<InverseGram, FormError> {
        let inv = self.flat_matrix().inverse().ok_or(GradedError::Singular)?;
        Ok(InverseGram { matrix: inv })
    }

    /// `β_♭^{-1}: V* → V`, of degree `-ℓ`.
    pub fn inverse_flat(&self) -> Result<GradedMap, FormError> {
        let inv = self.inverse_form()?;
        Ok(GradedMap::new(
            dual_space(&self.space),
            self.space.clone(),
            -self.ell,
            inv.matrix.transpose(),
        )?)
    }

    /// The shifted form `β[m]` on `V[m]`, with `β[m]_♭ = (-1)^{mℓ} δ[m]^T β_♭ δ[m]`.
    /// It has degree `ℓ + 2m`; its kind flips when `m` is odd.
    pub fn shift_form(&self, m: Degree) -> Result<BilinearForm, FormError> {
        let (shifted, delta) = degree_shift(&self.space, m)?;
        let flat = delta
            .transpose()
            .compose(&self.flat()?)?
            .compose(&delta)?
            .scale(&unit_sign(is_negative(parity(m) * parity(self.ell))));
        let ell = self
            .ell
            .checked_add(m.checked_mul(2).ok_or(GradedError::DegreeOverflow)?)
            .ok_or(GradedError::DegreeOverflow)?;
        let f = flat.matrix().transpose();
        BilinearForm::from_flat_matrix(shifted, ell, self.kind.flip_if(parity(m) == 1), &f)
    }

    /// The form `β' = β^{-1}` on `V*` with `β'_♭ = χ ∘ β_♭^{-1}`, of degree
    /// `-ℓ`; its kind flips when `ℓ` is odd. On dual basis vectors,
    /// `β'(t^λ, t^κ) = (-1)^{(|t_λ|+ℓ)(|t_κ|+ℓ)} g^{λκ}`.
    pub fn dual_form(&self) -> Result<BilinearForm, FormError> {
        let inv = self.inverse_form()?;
        let n = self.dim();
        let pl = parity(self.ell);
        let gram = Matrix::from_fn(n, n, |l, k| {
            let v = &inv.matrix[(l, k)];
            if v.is_zero() {
                return Rational::zero();
            }
            let a = parity(self.space.degree(l) + pl);
            let b = parity(self.space.degree(k) + pl);
            v * unit_sign(is_negative(a * b))
        });
        BilinearForm::new(dual_space(&self.space), -self.ell, self.kind.flip_if(pl == 1), gram)
    }

    pub fn scale(&self, c: &Rational) -> BilinearForm {
        BilinearForm {
            gram: self.gram.scale(c),
            ..self.clone()
        }
    }

    pub fn negate(&self) -> BilinearForm {
        self.scale(&-Rational::from_integer(1.into()))
    }

    /// Reinterprets the same values on another space with the same degrees.
    pub fn on_space(&self, space: GradedSpace) -> Result<BilinearForm, FormError> {
        if space.degrees() != self.space.degrees() {
            return Err(GradedError::SpaceMismatch("degree lists differ".into()).into());
        }
        BilinearForm::new(space, self.ell, self.kind, self.gram.clone())
    }
}

impl InverseGram {
    /// Checks `(-1)^{ℓ(|t_λ|+|t_ρ|+1)} f_{λρ} g^{ρα} = δ_λ^α` exactly.
    pub fn satisfies_identity(&self, form: &BilinearForm) -> bool {
        let n = form.dim();
        let f = form.flat_matrix();
        let pl = parity(form.ell());
        for l in 0..n {
            for a in 0..n {
                let mut sum = Rational::zero();
                for r in 0..n {
                    if f[(l, r)].is_zero() || self.matrix[(r, a)].is_zero() {
                        continue;
                    }
                    let e = pl * parity(form.space().degree(l) + form.space().degree(r) + 1);
                    sum += &f[(l, r)] * &self.matrix[(r, a)] * unit_sign(is_negative(e));
                }
                let expected = if l == a {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                };
                if sum != expected {
                    return false;
                }
            }
        }
        true
    }
}

/// Tests whether `M: V → W` relates `β` on `V` to `β'` on `W`:
/// `β'(M(v), M(w)) = ±(-1)^{|M|(|v|+ℓ+1)} β(v,w)` on all basis pairs, with the
/// extra minus sign when `anti` is set.
///
/// The degree constraint `ℓ' + 2|M| = ℓ` is checked first and reported as
/// [`FormError::DegreeConstraint`]; `M` must be invertible.
pub fn relates(m: &GradedMap, beta: &BilinearForm, beta_prime: &BilinearForm, anti: bool) -> Result<bool, FormError> {
    if m.domain() != beta.space() || m.codomain() != beta_prime.space() {
        return Err(GradedError::SpaceMismatch("map does not act between the spaces of the two forms".into()).into());
    }
    let constraint = m.degree().checked_mul(2).and_then(|d| d.checked_add(beta_prime.ell()));
    if constraint != Some(beta.ell()) {
        return Err(FormError::DegreeConstraint {
            ell: beta.ell(),
            ell_prime: beta_prime.ell(),
            map_degree: m.degree(),
        });
    }
    if m.matrix().inverse().is_none() {
        return Err(FormError::NotIsomorphism);
    }
    let a = m.matrix();
    let pulled = a.transpose().mul(beta_prime.gram()).mul(a);
    let pm = parity(m.degree());
    let n = beta.dim();
    for l in 0..n {
        let e = pm * parity(beta.space().degree(l) + beta.ell() + 1);
        let sign = unit_sign(is_negative(e) != anti);
        for k in 0..n {
            if pulled[(l, k)] != beta.value(l, k) * &sign {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
