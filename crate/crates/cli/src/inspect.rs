//! `graded inspect`: dimensions, shape and subalgebra sizes.

use std::fmt::Write;

use bilinear_forms::FormKind;
use endo_algebra::decompose;
use graded_core::{neg_dim, Degree};
use serde::Serialize;
use standard_form::{shape, underlying_levels, StandardError};

use crate::Loaded;

#[derive(Debug, Clone, Serialize)]
pub struct ShapeSummary {
    pub k: Degree,
    pub epsilon: Degree,
    pub i_bullet: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelSummary {
    pub level: usize,
    pub degree: Degree,
    pub group: String,
    pub group_dim: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct FormSummary {
    pub ell: Degree,
    pub kind: FormKind,
    pub valid: bool,
    pub violation: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct InspectReport {
    pub dim: usize,
    pub gdim: String,
    pub neg_gdim: String,
    pub form: Option<FormSummary>,
    pub shape: Option<ShapeSummary>,
    pub dimension_condition: Option<String>,
    pub dim_gl: usize,
    pub dim_sym: Option<usize>,
    pub dim_skew: Option<usize>,
    pub levels: Vec<LevelSummary>,
}

pub fn inspect(loaded: &Loaded) -> anyhow::Result<InspectReport> {
    let space = &loaded.space;
    let gdim = space.gdim();
    let mut report = InspectReport {
        dim: space.dim(),
        gdim: gdim.to_string(),
        neg_gdim: neg_dim(&gdim).to_string(),
        form: None,
        shape: None,
        dimension_condition: None,
        dim_gl: space.dim() * space.dim(),
        dim_sym: None,
        dim_skew: None,
        levels: Vec::new(),
    };
    let Some(beta) = &loaded.form else {
        return Ok(report);
    };
    let violation = beta.validate().err();
    report.form = Some(FormSummary {
        ell: beta.ell(),
        kind: beta.kind(),
        valid: violation.is_none(),
        violation: violation.as_ref().map(ToString::to_string),
    });
    match shape(space, beta.ell()) {
        Ok(s) => {
            report.shape = Some(ShapeSummary {
                k: s.k,
                epsilon: s.epsilon,
                i_bullet: s.i_bullet,
            })
        }
        Err(e @ StandardError::DimensionCondition { .. }) => report.dimension_condition = Some(e.to_string()),
        Err(e) => return Err(e.into()),
    }
    if violation.is_some() {
        return Ok(report);
    }
    let d = decompose(beta)?;
    report.dim_sym = Some(d.sym.dim());
    report.dim_skew = Some(d.skew.dim());
    report.levels = underlying_levels(beta)?
        .into_iter()
        .map(|(level, degree, kind)| LevelSummary {
            level,
            degree,
            group: kind.to_string(),
            group_dim: kind.dim(),
        })
        .collect();
    Ok(report)
}

impl InspectReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "dim {}", self.dim);
        let _ = writeln!(out, "gdim {}", self.gdim);
        let _ = writeln!(out, "neg gdim {}", self.neg_gdim);
        let Some(form) = &self.form else {
            let _ = writeln!(out, "no form");
            return out;
        };
        let status = match &form.violation {
            None => "valid".to_string(),
            Some(v) => format!("invalid: {v}"),
        };
        let _ = writeln!(out, "form {} ℓ={} {status}", form.kind, form.ell);
        if let Some(e) = &self.dimension_condition {
            let _ = writeln!(out, "{e}");
        }
        let mut summary = Vec::new();
        if let Some(s) = &self.shape {
            summary.push(format!("k={} ε={}", s.k, s.epsilon));
        }
        if let (Some(skew), Some(sym)) = (self.dim_skew, self.dim_sym) {
            summary.push(format!("dim o={skew} dim Sym={sym}"));
        }
        if !summary.is_empty() {
            let _ = writeln!(out, "{}", summary.join(" "));
        }
        if let Some(s) = &self.shape {
            let _ = writeln!(out, "i•={}", s.i_bullet);
        }
        for l in &self.levels {
            let _ = writeln!(
                out,
                "level {} degree {}: {} (dim {})",
                l.level, l.degree, l.group, l.group_dim
            );
        }
        out
    }
}
