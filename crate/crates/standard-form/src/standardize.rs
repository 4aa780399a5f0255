use bilinear_forms::random::middle_is_skew;
use bilinear_forms::{BilinearForm, FormViolation};
use graded_core::rational::int;
use graded_core::{Degree, Matrix, Rational};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::{shape, FormShape, StandardError};

/// How `V_k` pairs with itself when `ε = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum MiddleKind {
    /// No middle block: `ε = 1` or `r_k = 0`.
    None,
    /// The block is a symmetric matrix, diagonalized by congruence.
    Metric,
    /// The block is antisymmetric, brought to Darboux form.
    Symplectic,
}

/// A diagonal entry `g(t_i, t_i) = value` of a metric middle block.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MiddleEntry {
    pub index: usize,
    pub value: Rational,
}

/// A basis in which the form takes its standard shape.
///
/// Row `a` of `change` holds the coordinates of the new basis vector at
/// position `a`, so the new Gram matrix is `B G Bᵀ`. New basis vectors keep
/// the degree of the position they occupy.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StandardBasisReport {
    pub shape: FormShape,
    /// `(t, t̄)` positions with `g(t, t̄) = 1`, `|t| > |t̄|`.
    pub pairs: Vec<(usize, usize)>,
    /// Darboux pairs `(t, t̄)` inside a symplectic middle block.
    pub middle_pairs: Vec<(usize, usize)>,
    /// Diagonal entries of a metric middle block.
    pub middle: Vec<MiddleEntry>,
    pub middle_kind: MiddleKind,
    pub change: Matrix,
    pub standardized: BilinearForm,
}

impl StandardBasisReport {
    /// `(p, q)`: the numbers of positive and negative diagonal values of a
    /// metric middle block.
    pub fn signature(&self) -> (usize, usize) {
        let p = self.middle.iter().filter(|e| e.value.is_positive()).count();
        (p, self.middle.len() - p)
    }

    /// The Gram matrix the standardized form should have: ones on the
    /// pairs, the diagonal values on a metric middle block, and the entries
    /// forced by graded symmetry.
    pub fn expected_gram(&self) -> Matrix {
        let beta = &self.standardized;
        let n = beta.dim();
        let mut g = Matrix::zeros(n, n);
        for &(t, tb) in self.pairs.iter().chain(&self.middle_pairs) {
            g[(t, tb)] = int(1);
            g[(tb, t)] = beta.swap_sign(t, tb);
        }
        for e in &self.middle {
            g[(e.index, e.index)] = e.value.clone();
        }
        g
    }

    /// Whether the standardized Gram matrix has exactly the standard shape.
    pub fn matches_standard_pattern(&self) -> bool {
        *self.standardized.gram() == self.expected_gram()
    }
}

/// Coordinates of a vector in the original basis.
type Vector = Vec<Rational>;

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = int(1);
    v
}

fn axpy(y: &[Rational], a: &Rational, x: &[Rational]) -> Vec<Rational> {
    y.iter().zip(x).map(|(yi, xi)| yi + a * xi).collect()
}

/// Orthogonalizes a basis of a nondegenerate symmetric block, returning
/// each new vector with its value `g(v, v)`.
fn diagonalize(
    beta: &BilinearForm,
    mut work: Vec<Vector>,
    degree: Degree,
) -> Result<Vec<(Vector, Rational)>, StandardError> {
    let mut out = Vec::with_capacity(work.len());
    while !work.is_empty() {
        let pivot = if let Some(i) = work.iter().position(|w| !beta.evaluate(w, w).is_zero()) {
            work.remove(i)
        } else {
            let m = work.len();
            let (i, j) = (0..m)
                .flat_map(|i| (i + 1..m).map(move |j| (i, j)))
                .find(|&(i, j)| !beta.evaluate(&work[i], &work[j]).is_zero())
                .ok_or(FormViolation::Degenerate {
                    degree,
                    partner: degree,
                })?;
            let w = work.remove(i);
            axpy(&w, &int(1), &work[j - 1])
        };
        let d = beta.evaluate(&pivot, &pivot);
        for w in work.iter_mut() {
            let c = -(beta.evaluate(w, &pivot) / &d);
            *w = axpy(w, &c, &pivot);
        }
        out.push((pivot, d));
    }
    Ok(out)
}

/// Symplectic Gram-Schmidt on a basis of a nondegenerate antisymmetric
/// block, returning pairs `(v, w)` with `g(v, w) = 1`.
fn darboux(beta: &BilinearForm, mut work: Vec<Vector>, degree: Degree) -> Result<Vec<(Vector, Vector)>, StandardError> {
    let mut out = Vec::with_capacity(work.len() / 2);
    while !work.is_empty() {
        let v = work.remove(0);
        let j = work
            .iter()
            .position(|w| !beta.evaluate(&v, w).is_zero())
            .ok_or(FormViolation::Degenerate {
                degree,
                partner: degree,
            })?;
        let w0 = work.remove(j);
        let c = int(1) / beta.evaluate(&v, &w0);
        let w: Vector = w0.iter().map(|x| x * &c).collect();
        for u in work.iter_mut() {
            let a = -beta.evaluate(u, &w);
            let b = beta.evaluate(u, &v);
            *u = axpy(&axpy(u, &a, &v), &b, &w);
        }
        out.push((v, w));
    }
    Ok(out)
}

/// Finds a basis in which the form is standard.
///
/// For each pair of partner degrees `j > p = -(j + ℓ)` the basis of `V_j` is
/// kept and the basis of `V_p` is replaced by its dual with respect to the
/// form. A middle block `V_k` is diagonalized or put in Darboux form.
pub fn standardize(beta: &BilinearForm) -> Result<StandardBasisReport, StandardError> {
    beta.validate()?;
    let space = beta.space();
    let shape = shape(space, beta.ell())?;
    let n = space.dim();
    let mut change = Matrix::zeros(n, n);
    let mut pairs = Vec::new();
    let mut middle_pairs = Vec::new();
    let mut middle = Vec::new();
    let mut middle_kind = MiddleKind::None;

    for (&j, _) in shape.dims.iter().rev() {
        let p = shape.partner(j);
        if j < p {
            continue;
        }
        let rows = space.indices_of_degree(j);
        if j > p {
            let cols = space.indices_of_degree(p);
            let block = Matrix::from_fn(rows.len(), cols.len(), |a, b| beta.value(rows[a], cols[b]).clone());
            let inv = block
                .inverse()
                .ok_or(FormViolation::Degenerate { degree: j, partner: p })?;
            for (a, &t) in rows.iter().enumerate() {
                change[(t, t)] = int(1);
                let tb = cols[a];
                for (b, &c) in cols.iter().enumerate() {
                    change[(tb, c)] = inv[(b, a)].clone();
                }
                pairs.push((t, tb));
            }
            continue;
        }
        let work: Vec<Vector> = rows.iter().map(|&i| unit(n, i)).collect();
        if middle_is_skew(j, beta.ell(), beta.kind()) {
            middle_kind = MiddleKind::Symplectic;
            let found = darboux(beta, work, j)?;
            let half = found.len();
            for (a, (v, w)) in found.into_iter().enumerate() {
                let (t, tb) = (rows[a], rows[half + a]);
                for c in 0..n {
                    change[(t, c)] = v[c].clone();
                    change[(tb, c)] = w[c].clone();
                }
                middle_pairs.push((t, tb));
            }
        } else {
            middle_kind = MiddleKind::Metric;
            for (a, (v, d)) in diagonalize(beta, work, j)?.into_iter().enumerate() {
                let t = rows[a];
                for c in 0..n {
                    change[(t, c)] = v[c].clone();
                }
                middle.push(MiddleEntry { index: t, value: d });
            }
        }
    }

    let gram = change.mul(beta.gram()).mul(&change.transpose());
    let standardized = BilinearForm::new(space.clone(), beta.ell(), beta.kind(), gram)?;
    Ok(StandardBasisReport {
        shape,
        pairs,
        middle_pairs,
        middle,
        middle_kind,
        change,
        standardized,
    })
}
