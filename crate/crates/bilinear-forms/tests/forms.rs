use bilinear_forms::random::{random_map, random_valid_form};
use bilinear_forms::{relates, BilinearForm, FormConfig, FormError, FormKind, FormViolation};
use graded_core::rational::{frac, int};
use graded_core::{make_space, GradedMap, GradedSpace, Matrix, Rational};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn form(degrees: &[i64], ell: i64, kind: FormKind, gram: &[&[i64]]) -> BilinearForm {
    BilinearForm::new(make_space(degrees), ell, kind, Matrix::from_i64(gram)).unwrap()
}

/// E1: t_1 of degree 1, t_{-1} of degree -1, g(t_1, t_{-1}) = 1, ℓ = 0.
fn e1() -> BilinearForm {
    form(&[1, -1], 0, FormKind::Symmetric, &[&[0, 1], &[-1, 0]])
}

fn euclid2() -> BilinearForm {
    form(&[0, 0], 0, FormKind::Symmetric, &[&[1, 0], &[0, 1]])
}

fn omega2() -> BilinearForm {
    form(&[0, 0], 0, FormKind::Skew, &[&[0, 1], &[-1, 0]])
}

/// ℓ = -1: t_0 of degree 0, t_1 of degree 1, g(t_0, t_1) = 1.
fn ell_minus_one() -> BilinearForm {
    let cfg: FormConfig =
        serde_json::from_str(r#"{"ell": -1, "kind": "symmetric", "entries": [[0, 1, "1"]]}"#).unwrap();
    cfg.build(&make_space(&[0, 1])).unwrap()
}

fn pm(negative: bool) -> Rational {
    if negative {
        int(-1)
    } else {
        int(1)
    }
}

fn basis(n: usize, i: usize) -> Vec<Rational> {
    (0..n).map(|j| if i == j { int(1) } else { int(0) }).collect()
}

/// `[β_♭(v)](w)` straight from its defining formula.
fn flat_oracle(b: &BilinearForm, l: usize, k: usize) -> Rational {
    let d = b.space().degree(l);
    pm(((d + 1) * b.ell()).rem_euclid(2) == 1) * b.value(l, k)
}

#[test]
fn e1_flat_images() {
    let f = e1().flat().unwrap();
    assert_eq!(f.degree(), 0);
    assert_eq!(f.apply(&basis(2, 0)), vec![int(0), int(1)]);
    assert_eq!(f.apply(&basis(2, 1)), vec![int(-1), int(0)]);
}

#[test]
fn euclidean_flat_is_identity() {
    assert_eq!(euclid2().flat().unwrap().matrix(), &Matrix::identity(2));
}

#[test]
fn ell_minus_one_flat() {
    let b = ell_minus_one();
    assert!(b.is_valid());
    assert_eq!(b.value(1, 0), &int(1));
    let f = b.flat().unwrap();
    assert_eq!(f.degree(), -1);
    // flat(t_0) = (-1)^{(0+1)(-1)} t^1 = -t^1
    assert_eq!(f.apply(&basis(2, 0)), vec![int(0), int(-1)]);
    assert_eq!(f.apply(&basis(2, 1)), vec![int(1), int(0)]);
}

#[test]
fn flat_matches_defining_formula_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for i in 0..40 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        let f = b.flat().unwrap();
        for l in 0..b.dim() {
            let image = f.apply(&basis(b.dim(), l));
            for (k, value) in image.iter().enumerate() {
                assert_eq!(*value, flat_oracle(&b, l, k));
            }
        }
    }
}

#[test]
fn flat_symmetry_and_invertibility_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for i in 0..40 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        let f = b.flat_matrix();
        assert!(f.inverse().is_some());
        for l in 0..b.dim() {
            for k in 0..b.dim() {
                let dl = b.space().degree(l);
                let dk = b.space().degree(k);
                let sign = pm(((dl * dk + b.ell()).rem_euclid(2) == 1) != kind.is_skew());
                assert_eq!(f[(l, k)], &sign * &f[(k, l)]);
            }
        }
    }
}

#[test]
fn validity_examples() {
    assert_eq!(e1().validate(), Ok(()));
    let lopsided = form(&[1], 0, FormKind::Symmetric, &[&[0]]);
    assert_eq!(
        lopsided.validate(),
        Err(FormViolation::Degenerate { degree: 1, partner: -1 })
    );
    assert_eq!(omega2().validate(), Ok(()));
}

#[test]
fn validity_reports_support_and_symmetry() {
    let off = form(&[1, -1], 0, FormKind::Symmetric, &[&[1, 0], &[0, 0]]);
    assert_eq!(off.validate(), Err(FormViolation::Support { lambda: 0, kappa: 0 }));
    let asym = form(&[1, -1], 0, FormKind::Symmetric, &[&[0, 1], &[1, 0]]);
    assert!(matches!(asym.validate(), Err(FormViolation::Symmetry { .. })));
    let wrong_kind = form(&[0, 0], 0, FormKind::Symmetric, &[&[0, 1], &[-1, 0]]);
    assert!(matches!(wrong_kind.validate(), Err(FormViolation::Symmetry { .. })));
}

#[test]
fn inverse_gram_examples() {
    let inv = e1().inverse_form().unwrap();
    assert!(inv.satisfies_identity(&e1()));
    assert_eq!(e1().flat_matrix().mul(&inv.matrix), Matrix::identity(2));
    assert_eq!(euclid2().inverse_form().unwrap().matrix, Matrix::identity(2));
    let doubled = e1().scale(&int(2));
    assert_eq!(doubled.inverse_form().unwrap().matrix, inv.matrix.scale(&frac(1, 2)));
}

#[test]
fn inverse_gram_identity_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for i in 0..40 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        assert!(b.inverse_form().unwrap().satisfies_identity(&b));
        let id = b.inverse_flat().unwrap().compose(&b.flat().unwrap()).unwrap();
        assert_eq!(id.matrix(), &Matrix::identity(b.dim()));
    }
}

#[test]
fn shift_by_zero_is_identity() {
    assert_eq!(e1().shift_form(0).unwrap(), e1());
}

#[test]
fn e1_shifted_by_one() {
    let s = e1().shift_form(1).unwrap();
    assert_eq!(s.space().degrees(), vec![0, -2]);
    assert_eq!(s.ell(), 2);
    assert_eq!(s.kind(), FormKind::Skew);
    assert_eq!(s.validate(), Ok(()));
    // β[1](u, w) = (-1)^{|u|+1} g(δu, δw) for ℓ = 0, ℓ' = 2.
    assert_eq!(s.gram(), &Matrix::from_i64(&[&[0, -1], &[1, 0]]));
}

#[test]
fn shift_there_and_back_restores_kind_and_degree() {
    let mut rng = ChaCha8Rng::seed_from_u64(14);
    for i in 0..20 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        for m in -3..=3 {
            let back = b.shift_form(m).unwrap().shift_form(-m).unwrap();
            assert_eq!(back.kind(), b.kind());
            assert_eq!(back.ell(), b.ell());
            assert_eq!(back.space().degrees(), b.space().degrees());
        }
    }
}

#[test]
fn shift_kind_table_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for i in 0..40 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        for m in -2..=2 {
            let s = b.shift_form(m).unwrap();
            let predicted = if m % 2 == 0 { kind } else { kind.flip() };
            assert_eq!(s.kind(), predicted);
            assert_eq!(s.ell(), b.ell() + 2 * m);
            assert_eq!(s.validate(), Ok(()), "shift by {m} of {b:?}");
        }
    }
}

#[test]
fn dual_kind_table_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for i in 0..40 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        let d = b.dual_form().unwrap();
        let predicted = if b.ell() % 2 == 0 { kind } else { kind.flip() };
        assert_eq!(d.kind(), predicted);
        assert_eq!(d.ell(), -b.ell());
        assert_eq!(d.validate(), Ok(()));
    }
}

/// `β^{-1}(β_♭ v, β_♭ w) = ±(-1)^ℓ [β_♭ v](w)`, minus for skew input, on all
/// basis pairs.
fn check_compatibility(b: &BilinearForm) {
    let d = b.dual_form().unwrap();
    let flat = b.flat().unwrap();
    let n = b.dim();
    for l in 0..n {
        let fv = flat.apply(&basis(n, l));
        for k in 0..n {
            let fw = flat.apply(&basis(n, k));
            let lhs = d.evaluate(&fv, &fw);
            let sign = pm((b.ell().rem_euclid(2) == 1) != b.kind().is_skew());
            assert_eq!(lhs, sign * flat_oracle(b, l, k));
        }
    }
}

#[test]
fn dual_form_examples() {
    let d = euclid2().dual_form().unwrap();
    assert_eq!(d.gram(), &Matrix::identity(2));
    assert_eq!(d.kind(), FormKind::Symmetric);
    check_compatibility(&e1());
    check_compatibility(&omega2());
    assert_eq!(omega2().dual_form().unwrap().kind(), FormKind::Skew);
}

#[test]
fn dual_form_compatibility_on_random_forms() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for i in 0..30 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        check_compatibility(&random_valid_form(&mut rng, kind, -4..=4, 6));
    }
}

#[test]
fn relates_examples() {
    let b = e1();
    let id = GradedMap::identity(b.space());
    assert_eq!(relates(&id, &b, &b, false), Ok(true));
    assert_eq!(relates(&id, &b, &b.negate(), false), Ok(false));
    assert_eq!(relates(&id, &b, &b.negate(), true), Ok(true));
    let flat = b.flat().unwrap();
    assert_eq!(relates(&flat, &b, &b.dual_form().unwrap(), false), Ok(true));
}

#[test]
fn relates_rejects_degree_constraint_separately() {
    let b = e1();
    let shifted = b.shift_form(1).unwrap();
    let (_, delta) = graded_core::degree_shift(b.space(), 1).unwrap();
    // δ[1]: V[1] → V with ℓ = 2 on V[1] and ℓ' = 0 on V: 0 + 2·1 = 2 holds.
    assert!(relates(&delta, &shifted, &b, false).is_ok());
    let id = GradedMap::identity(b.space());
    let other = form(&[1, -1], 2, FormKind::Symmetric, &[&[0, 0], &[0, 0]]);
    assert_eq!(
        relates(&id, &b, &other, false),
        Err(FormError::DegreeConstraint {
            ell: 0,
            ell_prime: 2,
            map_degree: 0
        })
    );
}

#[test]
fn flat_relates_form_to_its_dual_and_back() {
    let mut rng = ChaCha8Rng::seed_from_u64(18);
    for i in 0..30 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 6);
        let d = b.dual_form().unwrap();
        let flat = b.flat().unwrap();
        assert_eq!(relates(&flat, &b, &d, kind.is_skew()), Ok(true));
        // The inverse relates back, with the anti sign toggled for odd |M|.
        let anti_back = kind.is_skew() != (b.ell().rem_euclid(2) == 1);
        assert_eq!(relates(&flat.inverse().unwrap(), &d, &b, anti_back), Ok(true));
    }
}

#[test]
fn shift_delta_relates_shifted_form() {
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for i in 0..30 {
        let kind = if i % 2 == 0 {
            FormKind::Symmetric
        } else {
            FormKind::Skew
        };
        let b = random_valid_form(&mut rng, kind, -4..=4, 5);
        for m in -2..=2 {
            let s = b.shift_form(m).unwrap();
            let (_, delta) = graded_core::degree_shift(b.space(), m).unwrap();
            assert_eq!(relates(&delta, &s, &b, false), Ok(true), "m = {m}");
        }
    }
}

#[test]
fn relates_even_isometries_both_ways() {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let b = e1();
    let v: GradedSpace = b.space().clone();
    for _ in 0..20 {
        let m = random_map(&mut rng, &v, 0);
        if m.matrix().inverse().is_none() {
            continue;
        }
        // Transport β along M: β'(x, y) = β(M^{-1}x, M^{-1}y).
        let inv = m.inverse().unwrap().matrix().clone();
        let gram = inv.transpose().mul(b.gram()).mul(&inv);
        let bp = BilinearForm::new(v.clone(), 0, b.kind(), gram).unwrap();
        assert_eq!(relates(&m, &b, &bp, false), Ok(true));
        assert_eq!(relates(&m.inverse().unwrap(), &bp, &b, false), Ok(true));
    }
}

#[test]
fn loader_completes_partners_and_keeps_conflicts() {
    let space = GradedSpace::from_labels(&["a".into(), "b".into()], &[1, -1]).unwrap();
    let cfg: FormConfig =
        serde_json::from_str(r#"{"ell": 0, "kind": "symmetric", "entries": [["a", "b", "1/1"]]}"#).unwrap();
    assert_eq!(cfg.build(&space).unwrap(), e1().on_space(space.clone()).unwrap());
    let bad: FormConfig =
        serde_json::from_str(r#"{"ell": 0, "kind": "symmetric", "entries": [[0, 1, "1"], [1, 0, "1"]]}"#).unwrap();
    let built = bad.build(&space).unwrap();
    assert!(matches!(built.validate(), Err(FormViolation::Symmetry { .. })));
    let unknown: FormConfig =
        serde_json::from_str(r#"{"ell": 0, "kind": "skew", "entries": [["z", 0, "1"]]}"#).unwrap();
    assert!(unknown.build(&space).is_err());
}

#[test]
fn config_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..10 {
        let b = random_valid_form(&mut rng, FormKind::Skew, -4..=4, 6);
        let cfg = FormConfig::from_form(&b);
        let text = serde_json::to_string(&cfg).unwrap();
        let back: FormConfig = serde_json::from_str(&text).unwrap();
        assert_eq!(back.build(b.space()).unwrap(), b);
    }
}

#[test]
fn zero_space_form_is_valid() {
    let b = BilinearForm::new(make_space(&[]), 3, FormKind::Skew, Matrix::zeros(0, 0)).unwrap();
    assert_eq!(b.validate(), Ok(()));
    assert_eq!(b.dual_form().unwrap().dim(), 0);
}
