//! The randomized group-axiom suite on points.

use bilinear_forms::BilinearForm;
use graded_core::GradedSpace;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::{
    is_orthogonal_point, is_tau_orthogonal_point, preserves_frame_pairing, random_invertible_point, tau_point,
    AlgebraMorphism, CoefficientAlgebra, OrthogonalSampler, PointAuto, PointDump, PointError,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteFailure {
    pub check: String,
    pub sample: usize,
    pub detail: String,
    pub dump: Option<PointDump>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub samples: usize,
    pub checks: usize,
    pub failures: Vec<SuiteFailure>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

struct Recorder {
    sample: usize,
    checks: usize,
    failures: Vec<SuiteFailure>,
}

impl Recorder {
    fn check(&mut self, name: &str, witness: &PointAuto, outcome: Result<bool, PointError>) {
        self.checks += 1;
        let detail = match outcome {
            Ok(true) => return,
            Ok(false) => "identity does not hold".to_string(),
            Err(e) => e.to_string(),
        };
        self.failures.push(SuiteFailure {
            check: name.to_string(),
            sample: self.sample,
            detail,
            dump: Some(witness.dump()),
        });
    }

    fn error(&mut self, name: &str, e: PointError) {
        self.checks += 1;
        self.failures.push(SuiteFailure {
            check: name.to_string(),
            sample: self.sample,
            detail: e.to_string(),
            dump: None,
        });
    }
}

/// Runs the group axioms on `samples` random invertible points, and, when a
/// form is given, the subgroup checks on random orthogonal points.
///
/// Sample `i` draws from the ChaCha8 stream `i` of `seed`, so the report
/// does not depend on how the samples are spread over threads.
pub fn group_suite(
    beta: Option<&BilinearForm>,
    space: &GradedSpace,
    algebra: &CoefficientAlgebra,
    samples: usize,
    seed: u64,
) -> Result<SuiteReport, PointError> {
    if let Some(b) = beta {
        if b.space() != space {
            return Err(PointError::SpaceMismatch);
        }
    }
    let sampler = beta.map(|b| OrthogonalSampler::new(b, algebra)).transpose()?;
    let per_sample: Vec<Recorder> = (0..samples)
        .into_par_iter()
        .map(|i| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(i as u64);
            let mut rec = Recorder {
                sample: i,
                checks: 0,
                failures: Vec::new(),
            };
            run_sample(&mut rec, &mut rng, sampler.as_ref(), space, algebra);
            rec
        })
        .collect();
    let checks = per_sample.iter().map(|r| r.checks).sum();
    let failures = per_sample.into_iter().flat_map(|r| r.failures).collect();
    Ok(SuiteReport {
        seed,
        samples,
        checks,
        failures,
    })
}

fn run_sample(
    rec: &mut Recorder,
    rng: &mut ChaCha8Rng,
    sampler: Option<&OrthogonalSampler>,
    space: &GradedSpace,
    algebra: &CoefficientAlgebra,
) {
    let f = random_invertible_point(rng, space, algebra);
    let g = random_invertible_point(rng, space, algebra);
    let h = random_invertible_point(rng, space, algebra);
    let id = PointAuto::identity(space, algebra);

    rec.check(
        "associativity",
        &f,
        (|| Ok(f.multiply(&g)?.multiply(&h)? == f.multiply(&g.multiply(&h)?)?))(),
    );
    rec.check("unit", &f, (|| Ok(f.multiply(&id)? == f && id.multiply(&f)? == f))());
    let f_inv = match f.invert() {
        Ok(x) => x,
        Err(e) => return rec.error("inverse", e),
    };
    rec.check(
        "inverse",
        &f,
        (|| Ok(f.multiply(&f_inv)? == id && f_inv.multiply(&f)? == id))(),
    );
    rec.check("inverse_involution", &f, f_inv.invert().map(|x| x == f));
    rec.check(
        "psi_equivariance",
        &f,
        (|| Ok(f.multiply_via_pullbacks(&g)? == f.multiply(&g)?))(),
    );
    rec.check(
        "psi_roundtrip",
        &f,
        PointAuto::psi(space, algebra, &f.psi_inverse()).map(|x| x == f),
    );
    let phi = AlgebraMorphism::random(rng, algebra);
    rec.check(
        "functoriality",
        &f,
        (|| {
            let (pf, pg) = (f.map_algebra(&phi)?, g.map_algebra(&phi)?);
            Ok(f.multiply(&g)?.map_algebra(&phi)? == pf.multiply(&pg)? && f_inv.map_algebra(&phi)? == pf.invert()?)
        })(),
    );

    let Some(sampler) = sampler else { return };
    let beta = sampler.form();
    rec.check(
        "tau_involution",
        &f,
        (|| Ok(tau_point(beta, &tau_point(beta, &f)?)? == f))(),
    );
    rec.check(
        "tau_antihomomorphism",
        &f,
        (|| Ok(tau_point(beta, &f.multiply(&g)?)? == tau_point(beta, &g)?.multiply(&tau_point(beta, &f)?)?))(),
    );
    rec.check(
        "tau_fixed_point",
        &f,
        (|| {
            let s = tau_point(beta, &f)?.multiply(&f)?;
            Ok(tau_point(beta, &s)? == s)
        })(),
    );
    let (p, q) = match (sampler.point(rng, algebra), sampler.point(rng, algebra)) {
        (Ok(p), Ok(q)) => (p, q),
        (Err(e), _) | (_, Err(e)) => return rec.error("orthogonal_sampling", e),
    };
    rec.check("orthogonal_sample", &p, is_tau_orthogonal_point(beta, &p));
    let pq = match p.multiply(&q) {
        Ok(x) => x,
        Err(e) => return rec.error("closure_product", e),
    };
    rec.check("closure_product", &pq, is_orthogonal_point(beta, &pq));
    let p_inv = match p.invert() {
        Ok(x) => x,
        Err(e) => return rec.error("closure_inverse", e),
    };
    rec.check("closure_inverse", &p_inv, is_orthogonal_point(beta, &p_inv));
    for x in [&f, &p, &pq, &p_inv] {
        rec.check(
            "two_route_agreement",
            x,
            (|| {
                let matrix = is_orthogonal_point(beta, x)?;
                Ok(matrix == preserves_frame_pairing(beta, x)? && matrix == is_tau_orthogonal_point(beta, x)?)
            })(),
        );
    }
}
