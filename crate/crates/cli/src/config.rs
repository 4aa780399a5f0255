//! The JSON config read by every command.
//!
//! ```json
//! {
//!   "space": {"degrees": [1, -1], "labels": ["t", "s"]},
//!   "form": {"ell": 0, "kind": "symmetric", "entries": [["t", "s", 1]]},
//!   "algebra": {"generators": [["xi", 1], ["eta", -1]], "truncation": 3},
//!   "suite": {"seed": 0, "samples": 20}
//! }
//! ```
//!
//! Only `space` is required.

use std::fs;
use std::path::Path;

use anyhow::{anyhow, bail, Context, Result};
use bilinear_forms::config::ScalarRef;
use bilinear_forms::{BilinearForm, FormConfig};
use graded_core::space::SpaceRecord;
use graded_core::{Degree, GradedSpace, Matrix};
use points_functor::CoefficientAlgebra;
use serde::de::DeserializeOwned;
use serde::Deserialize;

pub const DEFAULT_SAMPLES: usize = 20;
pub const DEFAULT_TRUNCATION: u32 = 3;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraConfig {
    #[serde(default)]
    pub generators: Vec<(String, Degree)>,
    pub truncation: Option<u32>,
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SuiteConfig {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub space: SpaceRecord,
    pub form: Option<FormConfig>,
    pub algebra: Option<AlgebraConfig>,
    #[serde(default)]
    pub suite: SuiteConfig,
}

/// Command-line values that take precedence over the config.
#[derive(Debug, Clone, Copy, Default)]
pub struct Overrides {
    pub seed: Option<u64>,
    pub samples: Option<usize>,
    pub truncation: Option<u32>,
}

/// A config resolved into library values. The form is built but not
/// validated, so that invalid forms can be diagnosed.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub space: GradedSpace,
    pub form: Option<BilinearForm>,
    pub algebra: CoefficientAlgebra,
    pub seed: u64,
    pub samples: usize,
}

impl Loaded {
    pub fn require_form(&self) -> Result<&BilinearForm> {
        self.form
            .as_ref()
            .ok_or_else(|| anyhow!("this command needs a `form` in the config"))
    }
}

/// Parses JSON text, naming the failing field and position on error.
fn parse_json<T: DeserializeOwned>(text: &str, path: &Path) -> Result<T> {
    let mut de = serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        anyhow!("{}: field `{field}`: {}", path.display(), e.into_inner())
    })
}

pub fn parse_config(text: &str, path: &Path, overrides: Overrides) -> Result<Loaded> {
    let config: Config = parse_json(text, path)?;
    let space = config
        .space
        .into_space()
        .with_context(|| format!("{}: field `space`", path.display()))?;
    let form = config
        .form
        .map(|f| f.build(&space))
        .transpose()
        .with_context(|| format!("{}: field `form`", path.display()))?;
    let (generators, truncation) = match &config.algebra {
        Some(a) => (a.generators.clone(), a.truncation),
        None => (Vec::new(), None),
    };
    let truncation = overrides.truncation.or(truncation).unwrap_or(DEFAULT_TRUNCATION);
    let named: Vec<(&str, Degree)> = generators.iter().map(|(n, d)| (n.as_str(), *d)).collect();
    let algebra = CoefficientAlgebra::with_generators(&named, truncation)
        .with_context(|| format!("{}: field `algebra`", path.display()))?;
    Ok(Loaded {
        space,
        form,
        algebra,
        seed: overrides.seed.or(config.suite.seed).unwrap_or(0),
        samples: overrides.samples.or(config.suite.samples).unwrap_or(DEFAULT_SAMPLES),
    })
}

pub fn load_config(path: &Path, overrides: Overrides) -> Result<Loaded> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    parse_config(&text, path, overrides)
}

#[derive(Debug, Deserialize)]
#[serde(untagged)]
enum MatrixFile {
    Rows(Vec<Vec<ScalarRef>>),
    Wrapped { matrix: Vec<Vec<ScalarRef>> },
}

/// Reads a square matrix given as rows of integers or `"p/q"` strings,
/// either bare or under a `matrix` key.
pub fn load_matrix(path: &Path, n: usize) -> Result<Matrix> {
    let text = fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    let rows = match parse_json::<MatrixFile>(&text, path)? {
        MatrixFile::Rows(r) | MatrixFile::Wrapped { matrix: r } => r,
    };
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        bail!("{}: expected a {n}×{n} matrix", path.display());
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, s)| {
                    s.value()
                        .map_err(|e| anyhow!("{}: entry ({i}, {j}): {e}", path.display()))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(rows))
}
