//! `graded standard-form` and `graded decompose`.

use std::fmt::Write;

use graded_core::{Degree, GradedMap, Matrix};
use serde::Serialize;
use standard_form::{factor_underlying, standardize, MiddleKind, StandardBasisReport, UnderlyingFactorization};

use crate::render::{matrix_inline, matrix_rows, rational};
use crate::Loaded;

#[derive(Debug, Clone, Serialize)]
pub struct MiddleValue {
    pub index: usize,
    pub value: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct StandardFormJson {
    pub k: Degree,
    pub epsilon: Degree,
    pub i_bullet: usize,
    pub pairs: Vec<(usize, usize)>,
    pub middle_kind: MiddleKind,
    pub middle_pairs: Vec<(usize, usize)>,
    pub middle: Vec<MiddleValue>,
    pub signature: Option<(usize, usize)>,
    pub change: Vec<Vec<String>>,
    pub standardized_gram: Vec<Vec<String>>,
    pub matches_standard_pattern: bool,
}

pub fn standard_form(loaded: &Loaded) -> anyhow::Result<StandardBasisReport> {
    Ok(standardize(loaded.require_form()?)?)
}

pub fn standard_json(r: &StandardBasisReport) -> StandardFormJson {
    StandardFormJson {
        k: r.shape.k,
        epsilon: r.shape.epsilon,
        i_bullet: r.shape.i_bullet,
        pairs: r.pairs.clone(),
        middle_kind: r.middle_kind,
        middle_pairs: r.middle_pairs.clone(),
        middle: r
            .middle
            .iter()
            .map(|e| MiddleValue {
                index: e.index,
                value: rational(&e.value),
            })
            .collect(),
        signature: (r.middle_kind == MiddleKind::Metric).then(|| r.signature()),
        change: matrix_rows(&r.change),
        standardized_gram: matrix_rows(r.standardized.gram()),
        matches_standard_pattern: r.matches_standard_pattern(),
    }
}

pub fn standard_text(r: &StandardBasisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "k={} ε={} i•={}", r.shape.k, r.shape.epsilon, r.shape.i_bullet);
    for (t, tb) in &r.pairs {
        let _ = writeln!(out, "pair {t} {tb}");
    }
    for (t, tb) in &r.middle_pairs {
        let _ = writeln!(out, "middle pair {t} {tb}");
    }
    for e in &r.middle {
        let _ = writeln!(out, "middle {} {}", e.index, rational(&e.value));
    }
    if r.middle_kind == MiddleKind::Metric {
        let (p, q) = r.signature();
        let _ = writeln!(out, "signature ({p},{q})");
    }
    let _ = writeln!(out, "change {}", matrix_inline(&r.change));
    let _ = writeln!(out, "gram {}", matrix_inline(r.standardized.gram()));
    let _ = writeln!(out, "standard pattern {}", r.matches_standard_pattern());
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct LevelJson {
    pub level: usize,
    pub degree: Degree,
    pub group: String,
    pub block: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorizationJson {
    pub levels: Vec<LevelJson>,
}

pub fn decompose_map(loaded: &Loaded, matrix: Matrix) -> anyhow::Result<UnderlyingFactorization> {
    let beta = loaded.require_form()?;
    let space = beta.space();
    let a = GradedMap::new(space.clone(), space.clone(), 0, matrix)?;
    Ok(factor_underlying(beta, &a)?)
}

pub fn factorization_json(f: &UnderlyingFactorization) -> FactorizationJson {
    FactorizationJson {
        levels: f
            .levels
            .iter()
            .map(|l| LevelJson {
                level: l.level,
                degree: l.degree,
                group: l.kind.to_string(),
                block: matrix_rows(&l.block),
            })
            .collect(),
    }
}

pub fn factorization_text(f: &UnderlyingFactorization) -> String {
    let mut out = String::new();
    for l in &f.levels {
        let _ = writeln!(
            out,
            "level {} degree {} {} {}",
            l.level,
            l.degree,
            l.kind,
            matrix_inline(&l.block)
        );
    }
    out
}
