//! JSON description of a form and its loader.
//!
//! ```json
//! {"ell": 0, "kind": "symmetric", "entries": [[0, 1, "1/1"], ["a", "b", "-2/3"]]}
//! ```
//!
//! Entries give `β(t_λ, t_κ)` with `λ, κ` either 0-based positions or basis
//! labels. Omitted entries are zero. For every listed entry whose partner
//! `(κ, λ)` is not listed, the partner is filled in from graded
//! (skew-)symmetry. Listed partners are kept as given, so inconsistent data
//! survives loading and is reported by [`BilinearForm::validate`].

use std::collections::HashSet;

use graded_core::{parse_rational, Degree, GradedSpace, Matrix, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::{BilinearForm, FormError, FormKind};

/// A basis position or label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IndexRef {
    Position(usize),
    Label(String),
}

impl IndexRef {
    pub fn resolve(&self, space: &GradedSpace) -> Result<usize, FormError> {
        match self {
            IndexRef::Position(i) if *i < space.dim() => Ok(*i),
            IndexRef::Position(i) => Err(FormError::Config(format!(
                "basis position {i} is out of range for a space of dimension {}",
                space.dim()
            ))),
            IndexRef::Label(l) => space
                .index_of(l)
                .ok_or_else(|| FormError::Config(format!("unknown basis label `{l}`"))),
        }
    }
}

/// A scalar given as a `"p/q"` string or a JSON integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarRef {
    Integer(i64),
    Text(String),
}

impl ScalarRef {
    pub fn value(&self) -> Result<Rational, FormError> {
        match self {
            ScalarRef::Integer(n) => Ok(Rational::from_integer((*n).into())),
            ScalarRef::Text(t) => parse_rational(t).map_err(|e| FormError::Config(e.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormConfig {
    pub ell: Degree,
    pub kind: FormKind,
    #[serde(default)]
    pub entries: Vec<(IndexRef, IndexRef, ScalarRef)>,
}

impl FormConfig {
    /// Builds the (not yet validated) form on `space`.
    pub fn build(&self, space: &GradedSpace) -> Result<BilinearForm, FormError> {
        let n = space.dim();
        let mut gram = Matrix::zeros(n, n);
        let mut explicit = HashSet::new();
        let mut listed = Vec::with_capacity(self.entries.len());
        for (l, k, v) in &self.entries {
            let l = l.resolve(space)?;
            let k = k.resolve(space)?;
            if !explicit.insert((l, k)) {
                return Err(FormError::Config(format!("entry ({l}, {k}) is listed twice")));
            }
            let value = v.value()?;
            gram[(l, k)] = value.clone();
            listed.push((l, k, value));
        }
        let probe = BilinearForm::new(space.clone(), self.ell, self.kind, Matrix::zeros(n, n))?;
        for (l, k, value) in listed {
            if l != k && !explicit.contains(&(k, l)) && !value.is_zero() {
                gram[(k, l)] = value * probe.swap_sign(l, k);
            }
        }
        BilinearForm::new(space.clone(), self.ell, self.kind, gram)
    }

    /// The canonical config of a form: all nonzero entries with `λ ≤ κ`.
    pub fn from_form(form: &BilinearForm) -> FormConfig {
        let mut entries = Vec::new();
        for l in 0..form.dim() {
            for k in l..form.dim() {
                let v = form.value(l, k);
                if !v.is_zero() {
                    entries.push((
                        IndexRef::Position(l),
                        IndexRef::Position(k),
                        ScalarRef::Text(graded_core::format_rational(v)),
                    ));
                }
            }
        }
        FormConfig {
            ell: form.ell(),
            kind: form.kind(),
            entries,
        }
    }
}
