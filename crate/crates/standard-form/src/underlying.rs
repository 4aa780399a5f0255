use bilinear_forms::BilinearForm;
use endo_algebra::{decompose, orthogonality_check};
use graded_core::{Degree, GradedMap, Matrix};
use serde::Serialize;

use crate::{standardize, MiddleKind, StandardBasisReport, StandardError};

/// The classical group a level block ranges over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "group", rename_all = "lowercase")]
pub enum GroupKind {
    GL { n: usize },
    Sp { n: usize },
    O { p: usize, q: usize },
}

impl GroupKind {
    pub fn size(&self) -> usize {
        match *self {
            GroupKind::GL { n } | GroupKind::Sp { n } => n,
            GroupKind::O { p, q } => p + q,
        }
    }

    /// The dimension of the group as a manifold.
    pub fn dim(&self) -> usize {
        match *self {
            GroupKind::GL { n } => n * n,
            GroupKind::Sp { n } => n * (n + 1) / 2,
            GroupKind::O { p, q } => {
                let m = p + q;
                m * m.saturating_sub(1) / 2
            }
        }
    }
}

impl std::fmt::Display for GroupKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            GroupKind::GL { n } => write!(f, "GL({n})"),
            GroupKind::Sp { n } => write!(f, "Sp({n})"),
            GroupKind::O { p, q } => write!(f, "O({p},{q})"),
        }
    }
}

/// The block of a degree zero orthogonal map on `V_{k+i}`, read in a
/// standard basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelBlock {
    pub level: usize,
    pub degree: Degree,
    pub kind: GroupKind,
    pub block: Matrix,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnderlyingFactorization {
    pub report: StandardBasisReport,
    pub levels: Vec<LevelBlock>,
}

impl UnderlyingFactorization {
    pub fn blocks(&self) -> Vec<Matrix> {
        self.levels.iter().map(|l| l.block.clone()).collect()
    }
}

/// Positions of a level and of its partner in the standard basis.
struct Level {
    level: usize,
    degree: Degree,
    kind: GroupKind,
    rows: Vec<usize>,
    partner_rows: Vec<usize>,
}

fn levels(report: &StandardBasisReport) -> Vec<Level> {
    let shape = &report.shape;
    let space = report.standardized.space();
    let mut out = Vec::new();
    for i in 0..=shape.i_bullet {
        let degree = shape.k + i as Degree;
        let r = shape.r(degree);
        if r == 0 {
            continue;
        }
        let rows = space.indices_of_degree(degree);
        let partner = shape.partner(degree);
        let kind = if partner != degree {
            GroupKind::GL { n: r }
        } else if report.middle_kind == MiddleKind::Symplectic {
            GroupKind::Sp { n: r }
        } else {
            let (p, q) = report.signature();
            GroupKind::O { p, q }
        };
        out.push(Level {
            level: i,
            degree,
            kind,
            partner_rows: space.indices_of_degree(partner),
            rows,
        });
    }
    out
}

/// The groups `(i, k + i, G_i)` for the levels with `r_{k+i} ≠ 0`.
pub fn underlying_levels(beta: &BilinearForm) -> Result<Vec<(usize, Degree, GroupKind)>, StandardError> {
    let report = standardize(beta)?;
    Ok(levels(&report)
        .into_iter()
        .map(|l| (l.level, l.degree, l.kind))
        .collect())
}

/// The sum of the dimensions of the level groups.
pub fn underlying_group_dim(beta: &BilinearForm) -> Result<usize, StandardError> {
    Ok(underlying_levels(beta)?.iter().map(|(_, _, k)| k.dim()).sum())
}

/// The dimension of the degree zero part of the orthogonal Lie algebra.
pub fn orthogonal_algebra_dim(beta: &BilinearForm) -> Result<usize, StandardError> {
    Ok(decompose(beta)?.skew.dim_in_degree(0))
}

fn middle_gram(report: &StandardBasisReport, rows: &[usize]) -> Matrix {
    report.standardized.gram().submatrix(rows, rows)
}

/// Splits a degree zero orthogonal automorphism into its blocks on the
/// levels `V_k, …, V_{k+i_•}` of a standard basis. The block on a partner
/// level `V_{k-i-ε}` is the inverse transpose and is checked, not returned.
pub fn factor_underlying(beta: &BilinearForm, a: &GradedMap) -> Result<UnderlyingFactorization, StandardError> {
    if !orthogonality_check(beta, a)? {
        return Err(StandardError::NotOrthogonal);
    }
    let report = standardize(beta)?;
    let p = report.change.transpose();
    let p_inv = p.inverse().expect("a change of basis is invertible");
    let m = p_inv.mul(a.matrix()).mul(&p);
    let mut out = Vec::new();
    for level in levels(&report) {
        let block = m.submatrix(&level.rows, &level.rows);
        if level.partner_rows != level.rows {
            let partner = m.submatrix(&level.partner_rows, &level.partner_rows);
            let expected = block.inverse().ok_or(StandardError::NotOrthogonal)?.transpose();
            if partner != expected {
                return Err(StandardError::NotOrthogonal);
            }
        }
        out.push(LevelBlock {
            level: level.level,
            degree: level.degree,
            kind: level.kind,
            block,
        });
    }
    Ok(UnderlyingFactorization { report, levels: out })
}

/// Rebuilds the degree zero orthogonal automorphism with the given level
/// blocks, in the order returned by [`factor_underlying`].
pub fn reconstruct_underlying(beta: &BilinearForm, blocks: &[Matrix]) -> Result<GradedMap, StandardError> {
    let report = standardize(beta)?;
    let levels = levels(&report);
    if blocks.len() != levels.len() {
        return Err(StandardError::Blocks(format!(
            "expected {} blocks, found {}",
            levels.len(),
            blocks.len()
        )));
    }
    let n = beta.dim();
    let mut m = Matrix::zeros(n, n);
    for (level, block) in levels.iter().zip(blocks) {
        let r = level.rows.len();
        if block.rows() != r || block.cols() != r {
            return Err(StandardError::Blocks(format!(
                "level {} needs a {r}×{r} block, found {}×{}",
                level.level,
                block.rows(),
                block.cols()
            )));
        }
        let inv = block
            .inverse()
            .ok_or_else(|| StandardError::Blocks(format!("block at level {} is singular", level.level)))?;
        let mut place = |rows: &[usize], b: &Matrix| {
            for (i, &ri) in rows.iter().enumerate() {
                for (j, &rj) in rows.iter().enumerate() {
                    m[(ri, rj)] = b[(i, j)].clone();
                }
            }
        };
        if level.partner_rows == level.rows {
            let j = middle_gram(&report, &level.rows);
            if block.transpose().mul(&j).mul(block) != j {
                return Err(StandardError::Blocks(format!(
                    "block at level {} does not lie in {}",
                    level.level, level.kind
                )));
            }
            place(&level.rows, block);
        } else {
            place(&level.rows, block);
            place(&level.partner_rows, &inv.transpose());
        }
    }
    let p = report.change.transpose();
    let p_inv = p.inverse().expect("a change of basis is invertible");
    let space = beta.space();
    Ok(GradedMap::new(space.clone(), space.clone(), 0, p.mul(&m).mul(&p_inv))?)
}
