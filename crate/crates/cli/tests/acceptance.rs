//! Acceptance harness: one PASS/FAIL line per criterion, each with a time
//! limit. Exits nonzero if any criterion fails or runs over its limit.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use anyhow::{bail, ensure, Context, Result};
use bilinear_forms::random::{random_map, random_valid_form};
use bilinear_forms::{relates, BilinearForm, FormConfig, FormKind};
use coordinate_ring::{
    action_from_representation, action_ring, chi0_tangent_matrix, extract_representation, gl_ring,
    left_invariant_field, linear_ring, pullback_chi0, pullback_projector, pullback_theta, Poly, RingError,
    RingMorphism,
};
use endo_algebra::{
    commutator, conjugation_eta, decompose, gl_basis, is_in_skew, is_in_sym, l_matrix, orthogonality_check, span_rank,
    tau,
};
use graded_core::rational::int;
use graded_core::{degree_shift, make_space, Degree, GradedMap, GradedSpace, Matrix, Rational};
use num_traits::{Signed, Zero};
use points_functor::{group_suite, random_orthogonal_map, CoefficientAlgebra};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use standard_form::{factor_underlying, reconstruct_underlying, standardize, MiddleKind};

fn form(degrees: &[Degree], ell: Degree, kind: FormKind, entries: &str) -> BilinearForm {
    let config: FormConfig =
        serde_json::from_str(&format!(r#"{{"ell": {ell}, "kind": "{kind}", "entries": {entries}}}"#)).unwrap();
    let beta = config.build(&make_space(degrees)).unwrap();
    beta.validate().unwrap();
    beta
}

fn e1() -> BilinearForm {
    form(&[1, -1], 0, FormKind::Symmetric, "[[0, 1, 1]]")
}

/// The named example forms used by the certificates.
fn example_forms() -> Vec<(&'static str, BilinearForm)> {
    vec![
        ("E1", e1()),
        (
            "ℓ=-1 on degrees (0,1)",
            form(&[0, 1], -1, FormKind::Symmetric, "[[0, 1, 1]]"),
        ),
        (
            "Euclidean plane",
            form(&[0, 0], 0, FormKind::Symmetric, "[[0, 0, 1], [1, 1, 1]]"),
        ),
        ("symplectic plane", form(&[0, 0], 0, FormKind::Skew, "[[0, 1, 1]]")),
        (
            "mixed (1,0,0,-1)",
            form(
                &[1, 0, 0, -1],
                0,
                FormKind::Symmetric,
                "[[0, 3, 1], [1, 1, 1], [2, 2, -1]]",
            ),
        ),
    ]
}

fn kind_of(i: usize) -> FormKind {
    if i.is_multiple_of(2) {
        FormKind::Symmetric
    } else {
        FormKind::Skew
    }
}

fn koszul(a: Degree, b: Degree) -> Rational {
    if (a * b).rem_euclid(2) == 1 {
        int(-1)
    } else {
        int(1)
    }
}

fn random_element(rng: &mut ChaCha8Rng, v: &GradedSpace) -> GradedMap {
    let n = v.dim();
    let d = v.degree(rng.gen_range(0..n)) - v.degree(rng.gen_range(0..n));
    random_map(rng, v, d)
}

fn criterion_1() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    let mut pairs = 0;
    for i in 0..24 {
        let beta = random_valid_form(&mut rng, kind_of(i), -4..=4, 6);
        let v = beta.space();
        for a in gl_basis(v)? {
            ensure!(tau(&beta, &tau(&beta, &a)?)? == a, "τ² ≠ 1 on {beta:?}");
        }
        for _ in 0..10 {
            let (a, b) = (random_element(&mut rng, v), random_element(&mut rng, v));
            let lhs = tau(&beta, &a.compose(&b)?)?;
            let rhs = tau(&beta, &b)?
                .compose(&tau(&beta, &a)?)?
                .scale(&koszul(a.degree(), b.degree()));
            ensure!(lhs == rhs, "antihomomorphism fails on {beta:?}");
            pairs += 1;
        }
    }
    Ok(format!("24 forms, {pairs} pairs"))
}

fn criterion_2() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(102);
    let mut triples = 0;
    for i in 0..20 {
        let beta = random_valid_form(&mut rng, kind_of(i), -4..=4, 5);
        let n2 = beta.dim() * beta.dim();
        let d = decompose(&beta)?;
        ensure!(d.sym.dim() + d.skew.dim() == n2, "dimensions do not add up");
        let all: Vec<GradedMap> = d.sym.basis.iter().chain(&d.skew.basis).cloned().collect();
        ensure!(span_rank(&all) == n2, "Sym and o are not complementary");
        for s in &d.sym.basis {
            ensure!(is_in_sym(&beta, s)?, "Sym basis element not symmetric");
        }
        for s in &d.skew.basis {
            ensure!(is_in_skew(&beta, s)?, "o basis element not skew");
        }
        let skew = &d.skew.basis;
        if skew.is_empty() {
            continue;
        }
        for _ in 0..15 {
            let pick = |rng: &mut ChaCha8Rng| skew[rng.gen_range(0..skew.len())].clone();
            let (a, b, c) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            ensure!(is_in_skew(&beta, &commutator(&a, &b)?)?, "[o, o] ⊄ o");
            let lhs = commutator(&a, &commutator(&b, &c)?)?;
            let rhs = commutator(&commutator(&a, &b)?, &c)?
                .add(&commutator(&b, &commutator(&a, &c)?)?.scale(&koszul(a.degree(), b.degree())))?;
            ensure!(lhs == rhs, "graded Jacobi fails");
            triples += 1;
        }
    }
    Ok(format!("20 forms, {triples} Jacobi triples"))
}

fn criterion_3() -> Result<String> {
    let mut generators = 0;
    for (name, beta) in example_forms() {
        let certificate = pullback_projector(&beta)?.then(&pullback_chi0(&beta)?)?;
        ensure!(
            certificate.images().iter().all(Poly::is_zero),
            "nonzero image for {name}"
        );
        generators += certificate.images().len();
    }
    Ok(format!("{generators} generators vanish on 5 spaces"))
}

/// All degree multisets of size 1 to 3 drawn from -1..=2.
fn small_spaces() -> Vec<GradedSpace> {
    let mut out = Vec::new();
    let ds: Vec<Degree> = (-1..=2).collect();
    for size in 1..=3usize {
        let mut idx = vec![0usize; size];
        loop {
            out.push(make_space(&idx.iter().map(|&i| ds[i]).collect::<Vec<_>>()));
            let Some(pos) = (0..size).rev().find(|&p| idx[p] + 1 < ds.len()) else {
                break;
            };
            idx[pos] += 1;
            for p in pos + 1..size {
                idx[p] = idx[pos];
            }
        }
    }
    out
}

fn criterion_4() -> Result<String> {
    let spaces = small_spaces();
    let mut pairs = 0;
    for v in &spaces {
        let units = gl_basis(v)?;
        let fields = units.iter().map(left_invariant_field).collect::<Result<Vec<_>, _>>()?;
        for (a, xa) in units.iter().zip(&fields) {
            for (b, xb) in units.iter().zip(&fields) {
                ensure!(
                    xa.bracket(xb)? == left_invariant_field(&commutator(a, b)?)?,
                    "bracket fails on {:?}",
                    v.degrees()
                );
                pairs += 1;
            }
        }
    }
    Ok(format!("{} spaces, {pairs} matrix-unit pairs", spaces.len()))
}

fn criterion_5() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(105);
    let mut points = 0;
    for (name, beta) in example_forms() {
        let id = GradedMap::identity(beta.space());
        let kernel = l_matrix(&beta, &id)?.kernel().len();
        let skew = decompose(&beta)?.skew.dim();
        ensure!(kernel == skew, "{name}: dim ker L_1 = {kernel}, dim o = {skew}");
        for _ in 0..10 {
            let a = random_orthogonal_map(&mut rng, &beta)?;
            ensure!(orthogonality_check(&beta, &a)?, "{name}: sample is not orthogonal");
            ensure!(
                chi0_tangent_matrix(&beta, &a)? == l_matrix(&beta, &a)?,
                "{name}: tangent map differs from L_A"
            );
            points += 1;
        }
    }
    Ok(format!("{points} orthogonal points on 5 spaces"))
}

fn criterion_6() -> Result<String> {
    let algebra = CoefficientAlgebra::with_generators(&[("a", 0), ("b", 2), ("xi", 1), ("eta", -1)], 4)?;
    let mut checks = 0;
    for (name, beta) in [
        ("E1", e1()),
        ("symplectic plane", form(&[0, 0], 0, FormKind::Skew, "[[0, 1, 1]]")),
    ] {
        let report = group_suite(Some(&beta), beta.space(), &algebra, 100, 6)?;
        if let Some(f) = report.failures.first() {
            bail!("{name}: {} failed on sample {}: {}", f.check, f.sample, f.detail);
        }
        checks += report.checks;
    }
    Ok(format!("{checks} checks over 2 × 100 samples, W = 4"))
}

/// Coefficients of `det(xI - M)`, highest degree first, by the
/// Faddeev-LeVerrier recursion.
fn characteristic_polynomial(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let mut coeffs = vec![int(1)];
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        mk = m.mul(&mk.add(&Matrix::identity(n).scale(coeffs.last().unwrap())));
        let trace: Rational = (0..n).map(|i| mk[(i, i)].clone()).sum();
        coeffs.push(-trace / int(k as i64));
    }
    coeffs
}

/// Eigenvalue sign counts of a symmetric matrix from Descartes' rule on its
/// characteristic polynomial.
fn sylvester_signature(m: &Matrix) -> (usize, usize) {
    let changes = |cs: &[Rational]| {
        let signs: Vec<bool> = cs.iter().filter(|c| !c.is_zero()).map(|c| c.is_positive()).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    };
    let p = characteristic_polynomial(m);
    let n = p.len() - 1;
    let reflected: Vec<Rational> = p
        .iter()
        .enumerate()
        .map(|(i, c)| if (n - i) % 2 == 1 { -c } else { c.clone() })
        .collect();
    (changes(&p), changes(&reflected))
}

fn criterion_7() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(107);
    let mut forms: Vec<BilinearForm> = (0..24)
        .map(|i| random_valid_form(&mut rng, kind_of(i), -4..=4, 6))
        .collect();
    for _ in 0..6 {
        let n = rng.gen_range(1..=4);
        let space = make_space(&vec![0; n]);
        forms.push(bilinear_forms::random::random_form_on(&mut rng, &space, 0, FormKind::Symmetric).context("form")?);
    }
    let mut signatures = 0;
    for beta in &forms {
        let r = standardize(beta)?;
        let b = &r.change;
        ensure!(
            *r.standardized.gram() == b.mul(beta.gram()).mul(&b.transpose()),
            "B G Bᵀ mismatch"
        );
        ensure!(r.matches_standard_pattern(), "pattern mismatch on {beta:?}");
        if beta.ell() == 0 && beta.space().degrees().iter().all(|&d| d == 0) {
            ensure!(r.middle_kind == MiddleKind::Metric, "expected a metric middle");
            ensure!(
                r.signature() == sylvester_signature(beta.gram()),
                "signature mismatch on {beta:?}"
            );
            signatures += 1;
        }
        let x = random_orthogonal_map(&mut rng, beta)?;
        let y = random_orthogonal_map(&mut rng, beta)?;
        let (fx, fy) = (factor_underlying(beta, &x)?, factor_underlying(beta, &y)?);
        ensure!(reconstruct_underlying(beta, &fx.blocks())? == x, "round trip fails");
        let xy = x.compose(&y)?;
        let products: Vec<Matrix> = fx.blocks().iter().zip(fy.blocks()).map(|(p, q)| p.mul(&q)).collect();
        ensure!(
            factor_underlying(beta, &xy)?.blocks() == products,
            "blocks are not multiplicative"
        );
    }
    ensure!(signatures >= 6, "too few degree zero metrics");
    Ok(format!("{} forms, {signatures} Sylvester comparisons", forms.len()))
}

fn criterion_8() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(108);
    let mut cases = 0;
    for i in 0..20 {
        let kind = kind_of(i);
        let beta = random_valid_form(&mut rng, kind, -4..=4, 5);
        for m in -2..=2 {
            let s = beta.shift_form(m)?;
            let predicted = if m % 2 == 0 { kind } else { kind.flip() };
            ensure!(
                s.kind() == predicted && s.ell() == beta.ell() + 2 * m && s.is_valid(),
                "shift by {m}"
            );
            let (_, delta) = degree_shift(beta.space(), m)?;
            ensure!(relates(&delta, &s, &beta, false)?, "δ[{m}] does not relate the forms");
            // Skew elements of the shifted form go to skew elements of β;
            // for odd m the two forms have opposite kinds.
            let source = decompose(&s)?.skew.basis;
            let images = source
                .iter()
                .map(|x| conjugation_eta(&delta, x))
                .collect::<Result<Vec<_>, _>>()?;
            for y in &images {
                ensure!(is_in_skew(&beta, y)?, "η leaves the skew subalgebra for m = {m}");
            }
            ensure!(
                span_rank(&images) == decompose(&beta)?.skew.dim(),
                "η is not onto for m = {m}"
            );
            cases += 1;
        }
        let d = beta.dual_form()?;
        let predicted = if beta.ell() % 2 == 0 { kind } else { kind.flip() };
        ensure!(
            d.kind() == predicted && d.ell() == -beta.ell() && d.is_valid(),
            "dual form kind"
        );
        cases += 1;
    }
    // E1 scale: the odd shift of a metric is symplectic, and η carries sp onto o.
    let g = e1();
    let g1 = g.shift_form(1)?;
    ensure!(g1.kind() == FormKind::Skew, "E1[1] should be skew");
    let (_, delta) = degree_shift(g.space(), 1)?;
    for x in decompose(&g1)?.skew.basis {
        ensure!(is_in_skew(&g, &conjugation_eta(&delta, &x)?)?, "E1 crossover");
    }
    Ok(format!("{cases} constructions"))
}

fn criterion_9() -> Result<String> {
    let spaces = [
        make_space(&[0]),
        make_space(&[1, -1]),
        make_space(&[0, 2, -1]),
        make_space(&[1, 1, 0, -2]),
    ];
    for v in &spaces {
        let theta = pullback_theta(v);
        let rho = extract_representation(&theta, v)?;
        ensure!(rho == RingMorphism::identity(&gl_ring(v, "y")), "ρ is not the identity");
        ensure!(action_from_representation(&rho, v)? == theta, "θ is not rebuilt from ρ");
    }
    let v = make_space(&[0, 1]);
    let act = action_ring(&v);
    let x = Poly::named(&act, "x[t1]")?;
    let y = Poly::named(&act, "x[t2]")?;
    let bad = RingMorphism::new(linear_ring(&v, "x"), act, vec![x.mul(&x), y])?;
    match extract_representation(&bad, &v) {
        Err(RingError::NotLinear { .. }) => {}
        other => bail!("nonlinear action accepted: {other:?}"),
    }
    Ok(format!("{} spaces, nonlinear input rejected", spaces.len()))
}

fn criterion_10() -> Result<String> {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests");
    let bin = env!("CARGO_BIN_EXE_graded");
    let e1 = root.join("data/e1.json");
    let run = |args: &[&str]| Command::new(bin).args(args).output();
    for which in ["mu", "tau", "chi0", "theta"] {
        let golden = std::fs::read(root.join(format!("golden/e1_{which}.txt")))?;
        for _ in 0..2 {
            let out = run(&["pullback", e1.to_str().unwrap(), which])?;
            ensure!(
                out.status.success() && out.stdout == golden,
                "{which} differs from its golden file"
            );
        }
    }
    let pass = run(&["verify", e1.to_str().unwrap()])?;
    ensure!(pass.status.code() == Some(0), "E1 verify exit {:?}", pass.status.code());
    let corrupt = run(&["verify", root.join("data/e1_corrupt.json").to_str().unwrap()])?;
    ensure!(
        corrupt.status.code() == Some(1),
        "corrupted verify exit {:?}",
        corrupt.status.code()
    );
    let malformed = run(&["verify", root.join("data/malformed.json").to_str().unwrap()])?;
    ensure!(
        malformed.status.code() == Some(2),
        "malformed verify exit {:?}",
        malformed.status.code()
    );
    Ok("4 golden files byte-stable, exit codes 0/1/2".to_string())
}

type Check = fn() -> Result<String>;

fn main() {
    let criteria: [(&str, u64, Check); 10] = [
        ("τ involution and antihomomorphism", 10, criterion_1),
        ("Sym ⊕ o decomposition, closure and Jacobi", 10, criterion_2),
        ("χ_0^* ∘ p^* = 0 certificate", 60, criterion_3),
        ("left-invariant field brackets", 60, criterion_4),
        ("tangent map of χ_0 and ker L_1", 10, criterion_5),
        ("group suite on points, W = 4", 60, criterion_6),
        ("standard form round trip", 10, criterion_7),
        ("shift, dual and η constructions", 10, criterion_8),
        ("representation extraction", 10, criterion_9),
        ("CLI golden files and exit codes", 60, criterion_10),
    ];
    let mut failed = 0;
    for (i, (name, limit, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let limit = Duration::from_secs(*limit);
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= limit => (true, d),
            Ok(d) => (false, format!("{d}; over the time limit")),
            Err(e) => (false, format!("{e:#}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "{} {:>2} {name} ({:.2}s / {}s): {detail}",
            if ok { "PASS" } else { "FAIL" },
            i + 1,
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed > 0 {
        println!("{failed} of {} criteria failed", criteria.len());
        std::process::exit(1);
    }
    println!("all {} criteria passed", criteria.len());
}
