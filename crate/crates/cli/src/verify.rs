//! `graded verify`: runs every identity suite on the config's form.

use std::fmt::Write;

use anyhow::Result;
use bilinear_forms::random::random_map;
use bilinear_forms::BilinearForm;
use coordinate_ring::{
    chi0_tangent_matrix, left_invariant_field, pullback_chi0, pullback_chi0_composite, pullback_projector, Poly,
};
use endo_algebra::{
    commutator, decompose, gl_basis, is_in_skew, l_matrix, orthogonality_check, span_rank, tau, tau_antihom_check,
};
use graded_core::{Degree, GradedMap, GradedSpace};
use points_functor::{group_suite, random_orthogonal_map, SuiteFailure};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use standard_form::{
    factor_underlying, orthogonal_algebra_dim, reconstruct_underlying, standardize, underlying_group_dim,
};

use crate::Loaded;

/// Spaces up to this dimension get exhaustive basis-pair checks; larger
/// ones get `samples` random pairs.
const EXHAUSTIVE_DIM: usize = 3;

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub identity: String,
    pub cases: usize,
    pub passed: bool,
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub seed: u64,
    pub samples: usize,
    pub truncation: u32,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
    pub point_failures: Vec<SuiteFailure>,
}

/// Outcome of one check body: the number of cases and the first failing
/// case, if any.
type Outcome = Result<(usize, Option<String>)>;

struct Runner {
    checks: Vec<CheckResult>,
}

impl Runner {
    fn run(&mut self, name: &str, identity: &str, body: impl FnOnce() -> Outcome) {
        let (cases, passed, detail) = match body() {
            Ok((cases, None)) => (cases, true, None),
            Ok((cases, Some(d))) => (cases, false, Some(d)),
            Err(e) => (0, false, Some(format!("error: {e:#}"))),
        };
        self.checks.push(CheckResult {
            name: name.to_string(),
            identity: identity.to_string(),
            cases,
            passed,
            detail,
        });
    }
}

fn random_degree(rng: &mut ChaCha8Rng, v: &GradedSpace) -> Degree {
    let n = v.dim();
    v.degree(rng.gen_range(0..n)) - v.degree(rng.gen_range(0..n))
}

/// Pairs of elements of `gl(V)`: all basis pairs for small spaces, random
/// homogeneous pairs otherwise.
fn element_pairs(rng: &mut ChaCha8Rng, v: &GradedSpace, samples: usize) -> Result<Vec<(GradedMap, GradedMap)>> {
    if v.dim() == 0 {
        return Ok(Vec::new());
    }
    if v.dim() <= EXHAUSTIVE_DIM {
        let basis = gl_basis(v)?;
        return Ok(basis
            .iter()
            .flat_map(|a| basis.iter().map(move |b| (a.clone(), b.clone())))
            .collect());
    }
    Ok((0..samples)
        .map(|_| {
            let (da, db) = (random_degree(rng, v), random_degree(rng, v));
            (random_map(rng, v, da), random_map(rng, v, db))
        })
        .collect())
}

fn first_failure<T>(
    cases: &[T],
    mut holds: impl FnMut(&T) -> Result<bool>,
    describe: impl Fn(usize) -> String,
) -> Outcome {
    for (i, c) in cases.iter().enumerate() {
        if !holds(c)? {
            return Ok((cases.len(), Some(describe(i))));
        }
    }
    Ok((cases.len(), None))
}

pub fn verify(loaded: &Loaded) -> Result<VerifyReport> {
    let beta = loaded.require_form()?;
    let mut runner = Runner { checks: Vec::new() };
    let mut report = VerifyReport {
        seed: loaded.seed,
        samples: loaded.samples,
        truncation: loaded.algebra.truncation(),
        passed: false,
        checks: Vec::new(),
        point_failures: Vec::new(),
    };
    let violation = beta.validate().err();
    runner.run(
        "form_validity",
        "support |t_λ| + |t_κ| + ℓ = 0, graded (skew-)symmetry, nondegenerate blocks",
        || Ok((1, violation.as_ref().map(ToString::to_string))),
    );
    if violation.is_none() {
        run_suites(&mut runner, &mut report, beta, loaded);
    }
    report.passed = runner.checks.iter().all(|c| c.passed);
    report.checks = runner.checks;
    Ok(report)
}

fn run_suites(runner: &mut Runner, report: &mut VerifyReport, beta: &BilinearForm, loaded: &Loaded) {
    let v = beta.space();
    let mut rng = ChaCha8Rng::seed_from_u64(loaded.seed);
    let samples = loaded.samples;
    let pairs = match element_pairs(&mut rng, v, samples) {
        Ok(p) => p,
        Err(e) => return runner.run("element_pairs", "sampling", || Err(e)),
    };

    runner.run("tau_involution", "τ(τ(A)) = A", || {
        let basis = gl_basis(v)?;
        first_failure(
            &basis,
            |a| Ok(tau(beta, &tau(beta, a)?)? == *a),
            |i| format!("basis element {i}"),
        )
    });
    runner.run("tau_antihomomorphism", "τ(AB) = (-1)^{|A||B|} τ(B) τ(A)", || {
        first_failure(
            &pairs,
            |(a, b)| Ok(tau_antihom_check(beta, a, b)?),
            |i| format!("pair {i}"),
        )
    });
    runner.run(
        "decomposition",
        "gl(V) = Sym ⊕ o with complementary dimensions",
        || {
            let d = decompose(beta)?;
            let n2 = v.dim() * v.dim();
            let all: Vec<GradedMap> = d.sym.basis.iter().chain(&d.skew.basis).cloned().collect();
            let ok = d.sym.dim() + d.skew.dim() == n2 && span_rank(&all) == n2;
            Ok((
                1,
                (!ok).then(|| format!("dim Sym = {}, dim o = {}, n² = {n2}", d.sym.dim(), d.skew.dim())),
            ))
        },
    );
    runner.run("skew_bracket_closure", "[o, o] ⊆ o", || {
        let skew = decompose(beta)?.skew.basis;
        let cases: Vec<(GradedMap, GradedMap)> = if skew.len() <= 12 {
            skew.iter()
                .flat_map(|a| skew.iter().map(move |b| (a.clone(), b.clone())))
                .collect()
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(loaded.seed);
            (0..samples)
                .map(|_| {
                    let i = rng.gen_range(0..skew.len());
                    let j = rng.gen_range(0..skew.len());
                    (skew[i].clone(), skew[j].clone())
                })
                .collect()
        };
        first_failure(
            &cases,
            |(a, b)| Ok(is_in_skew(beta, &commutator(a, b)?)?),
            |i| format!("pair {i}"),
        )
    });
    runner.run("chi0_composite", "χ_0^* = (τ^* ⊗ 1) ∘ μ^*", || {
        Ok((
            1,
            (pullback_chi0(beta)? != pullback_chi0_composite(beta)?).then(|| "pullbacks differ".to_string()),
        ))
    });
    runner.run("chi0_projector", "(χ_0^* ∘ p^*)(y^κ_λ) = 0", || {
        let certificate = pullback_projector(beta)?.then(&pullback_chi0(beta)?)?;
        let bad = certificate.images().iter().position(|p| !Poly::is_zero(p));
        Ok((
            certificate.images().len(),
            bad.map(|i| format!("generator {} ↦ {}", certificate.source().name(i), certificate.image(i))),
        ))
    });
    runner.run("lie_bracket", "[x_A^L, x_B^L] = x_[A,B]^L", || {
        first_failure(
            &pairs,
            |(a, b)| {
                let lhs = left_invariant_field(a)?.bracket(&left_invariant_field(b)?)?;
                Ok(lhs == left_invariant_field(&commutator(a, b)?)?)
            },
            |i| format!("pair {i}"),
        )
    });
    let orthogonal: Vec<GradedMap> = match (0..samples).map(|_| random_orthogonal_map(&mut rng, beta)).collect() {
        Ok(maps) => maps,
        Err(e) => {
            return runner.run("orthogonal_sampling", "Cayley transforms of skew elements", || {
                Err(e.into())
            })
        }
    };
    runner.run("chi0_tangent", "dχ_0 at A equals L_A, and ker L_1 = o", || {
        let id = GradedMap::identity(v);
        let mut points = vec![id.clone()];
        points.extend(orthogonal.iter().cloned());
        let (cases, bad) = first_failure(
            &points,
            |a| Ok(chi0_tangent_matrix(beta, a)? == l_matrix(beta, a)?),
            |i| format!("point {i}"),
        )?;
        if bad.is_some() {
            return Ok((cases, bad));
        }
        let kernel = l_matrix(beta, &id)?.kernel().len();
        let skew = decompose(beta)?.skew.dim();
        Ok((
            cases + 1,
            (kernel != skew).then(|| format!("dim ker L_1 = {kernel}, dim o = {skew}")),
        ))
    });
    runner.run("standard_form", "B G Bᵀ has the standard pattern", || {
        let r = standardize(beta)?;
        Ok((
            1,
            (!r.matches_standard_pattern()).then(|| "pattern mismatch".to_string()),
        ))
    });
    runner.run("underlying_dimension", "Σ dim G_i = dim o(V,g)_0", || {
        let (lhs, rhs) = (underlying_group_dim(beta)?, orthogonal_algebra_dim(beta)?);
        Ok((1, (lhs != rhs).then(|| format!("{lhs} ≠ {rhs}"))))
    });
    runner.run(
        "underlying_factorization",
        "factor/reconstruct round trip and blockwise products",
        || {
            let cases: Vec<(&GradedMap, &GradedMap)> = orthogonal.iter().zip(orthogonal.iter().skip(1)).collect();
            first_failure(
                &cases,
                |(a, b)| {
                    let fa = factor_underlying(beta, a)?;
                    let fb = factor_underlying(beta, b)?;
                    let ab = a.compose(b)?;
                    if !orthogonality_check(beta, &ab)? || reconstruct_underlying(beta, &fa.blocks())? != **a {
                        return Ok(false);
                    }
                    let products: Vec<_> = fa.blocks().iter().zip(fb.blocks()).map(|(x, y)| x.mul(&y)).collect();
                    Ok(factor_underlying(beta, &ab)?.blocks() == products)
                },
                |i| format!("pair {i}"),
            )
        },
    );
    let suite = group_suite(Some(beta), v, &loaded.algebra, samples, loaded.seed);
    runner.run(
        "point_group_suite",
        "group laws, Ψ-equivariance, τ_pt identities, orthogonal closure, two-route agreement",
        || {
            let s = suite?;
            let detail = s
                .failures
                .first()
                .map(|f| format!("{} failed on sample {}: {}", f.check, f.sample, f.detail));
            report.point_failures = s.failures;
            Ok((s.checks, detail))
        },
    );
}

impl VerifyReport {
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            let _ = write!(out, "{status} {} ({} cases): {}", c.name, c.cases, c.identity);
            if let Some(d) = &c.detail {
                let _ = write!(out, " [{d}]");
            }
            out.push('\n');
        }
        let _ = writeln!(
            out,
            "{} (seed {}, samples {}, truncation {})",
            if self.passed {
                "all checks passed"
            } else {
                "verification failed"
            },
            self.seed,
            self.samples,
            self.truncation
        );
        out
    }
}
