use bilinear_forms::random::random_valid_form;
use bilinear_forms::{BilinearForm, FormKind};
use endo_algebra::orthogonality_check;
use graded_core::rational::{frac, int};
use graded_core::{make_space, GradedMap, Matrix, Rational};
use num_traits::{Signed, Zero};
use points_functor::random_orthogonal_map;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use standard_form::{
    factor_underlying, orthogonal_algebra_dim, reconstruct_underlying, shape, standardize, underlying_group_dim,
    underlying_levels, GroupKind, MiddleKind, StandardError,
};

fn form(degrees: &[i64], ell: i64, kind: FormKind, gram: &[&[i64]]) -> BilinearForm {
    BilinearForm::new_valid(make_space(degrees), ell, kind, Matrix::from_i64(gram)).unwrap()
}

fn e1() -> BilinearForm {
    form(&[1, -1], 0, FormKind::Symmetric, &[&[0, 1], &[-1, 0]])
}

fn diag(values: &[Rational]) -> Matrix {
    Matrix::from_fn(values.len(), values.len(), |i, j| {
        if i == j {
            values[i].clone()
        } else {
            Rational::zero()
        }
    })
}

/// Coefficients `c_0, …, c_n` of `det(xI - M)` by the Faddeev-LeVerrier
/// recursion, highest degree first.
fn characteristic_polynomial(m: &Matrix) -> Vec<Rational> {
    let n = m.rows();
    let mut coeffs = vec![int(1)];
    let mut mk = Matrix::zeros(n, n);
    for k in 1..=n {
        let shifted = mk.add(&Matrix::identity(n).scale(coeffs.last().unwrap()));
        mk = m.mul(&shifted);
        let trace: Rational = (0..n).map(|i| mk[(i, i)].clone()).sum();
        coeffs.push(-trace / int(k as i64));
    }
    coeffs
}

/// Positive and negative eigenvalue counts of a symmetric matrix, read off
/// the sign changes of its characteristic polynomial (exact, since all
/// roots are real).
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

#[test]
fn shape_of_small_examples() {
    let s = shape(&make_space(&[1, -1]), 0).unwrap();
    assert_eq!((s.k, s.epsilon, s.i_bullet), (0, 0, 1));
    assert!(!s.has_middle());
    let s = shape(&make_space(&[0, 1]), -1).unwrap();
    assert_eq!((s.k, s.epsilon, s.i_bullet), (1, 1, 0));
    assert_eq!((s.r(1), s.r(0)), (1, 1));
    let s = shape(&make_space(&[2, 2, 2]), -4).unwrap();
    assert_eq!((s.k, s.epsilon, s.i_bullet), (2, 0, 0));
    assert!(s.has_middle());
    for ell in -7..=7 {
        let s = shape(&make_space(&[]), ell).unwrap();
        assert_eq!(-2 * s.k + s.epsilon, ell);
        assert!(s.epsilon == 0 || s.epsilon == 1);
    }
}

#[test]
fn dimension_condition_failure() {
    match shape(&make_space(&[1, 1, -1]), 0) {
        Err(StandardError::DimensionCondition {
            degree,
            dim,
            partner,
            partner_dim,
        }) => {
            assert_eq!((degree, dim, partner, partner_dim), (-1, 1, 1, 2));
        }
        other => panic!("expected a dimension failure, got {other:?}"),
    }
}

#[test]
fn e1_is_already_standard() {
    let report = standardize(&e1()).unwrap();
    assert_eq!(report.change, Matrix::identity(2));
    assert_eq!(report.pairs, vec![(0, 1)]);
    assert_eq!(report.middle_kind, MiddleKind::None);
    assert!(report.matches_standard_pattern());
}

#[test]
fn scaled_e1_rescales_the_partner() {
    let beta = form(&[1, -1], 0, FormKind::Symmetric, &[&[0, 3], &[-3, 0]]);
    let report = standardize(&beta).unwrap();
    assert_eq!(report.change, diag(&[int(1), frac(1, 3)]));
    assert_eq!(*report.standardized.gram(), Matrix::from_i64(&[&[0, 1], &[-1, 0]]));
    assert!(report.matches_standard_pattern());
}

#[test]
fn euclidean_signature() {
    let beta = form(
        &[0, 0, 0],
        0,
        FormKind::Symmetric,
        &[&[1, 0, 0], &[0, 1, 0], &[0, 0, -4]],
    );
    let report = standardize(&beta).unwrap();
    assert_eq!(report.middle_kind, MiddleKind::Metric);
    assert_eq!(report.signature(), (2, 1));
    assert_eq!(sylvester_signature(beta.gram()), (2, 1));
    assert!(report.matches_standard_pattern());
}

#[test]
fn signature_agrees_with_sylvester_on_dense_metrics() {
    let beta = form(
        &[0, 0, 0, 0],
        0,
        FormKind::Symmetric,
        &[&[0, 1, 2, 0], &[1, 0, 0, 3], &[2, 0, 0, 1], &[0, 3, 1, 0]],
    );
    let report = standardize(&beta).unwrap();
    assert_eq!(report.signature(), sylvester_signature(beta.gram()));
    assert!(report.matches_standard_pattern());
    // The middle block of a form with ℓ = -4 on degree 2 is a metric as well.
    let beta = form(&[2, 2], -4, FormKind::Symmetric, &[&[0, 1], &[1, 0]]);
    let report = standardize(&beta).unwrap();
    assert_eq!(report.signature(), (1, 1));
}

#[test]
fn skew_plane_is_symplectic() {
    let beta = form(&[0, 0], 0, FormKind::Skew, &[&[0, 1], &[-1, 0]]);
    let report = standardize(&beta).unwrap();
    assert_eq!(report.middle_kind, MiddleKind::Symplectic);
    assert_eq!(report.middle_pairs, vec![(0, 1)]);
    assert_eq!(report.change, Matrix::identity(2));
    assert_eq!(underlying_levels(&beta).unwrap(), vec![(0, 0, GroupKind::Sp { n: 2 })]);
}

#[test]
fn odd_k_middle_is_symplectic_for_symmetric_forms() {
    // ℓ = -2 gives k = 1, and V_1 pairs with itself antisymmetrically.
    let beta = form(
        &[1, 1, 1, 1],
        -2,
        FormKind::Symmetric,
        &[&[0, 2, 1, 0], &[-2, 0, 0, 1], &[-1, 0, 0, 3], &[0, -1, -3, 0]],
    );
    let report = standardize(&beta).unwrap();
    assert_eq!(report.middle_kind, MiddleKind::Symplectic);
    assert_eq!(report.middle_pairs.len(), 2);
    assert!(report.matches_standard_pattern());
}

#[test]
fn e1_block_of_a_diagonal_automorphism() {
    let beta = e1();
    let a = GradedMap::new(
        beta.space().clone(),
        beta.space().clone(),
        0,
        diag(&[frac(5, 3), frac(3, 5)]),
    )
    .unwrap();
    let f = factor_underlying(&beta, &a).unwrap();
    assert_eq!(f.levels.len(), 1);
    assert_eq!(f.levels[0].kind, GroupKind::GL { n: 1 });
    assert_eq!(f.levels[0].degree, 1);
    assert_eq!(f.levels[0].block, diag(&[frac(5, 3)]));
    assert_eq!(reconstruct_underlying(&beta, &f.blocks()).unwrap(), a);

    let b = GradedMap::new(beta.space().clone(), beta.space().clone(), 0, diag(&[int(2), int(2)])).unwrap();
    assert!(matches!(
        factor_underlying(&beta, &b),
        Err(StandardError::NotOrthogonal)
    ));
}

#[test]
fn reconstruction_rejects_blocks_outside_the_group() {
    let beta = form(&[0, 0], 0, FormKind::Skew, &[&[0, 1], &[-1, 0]]);
    assert!(reconstruct_underlying(&beta, &[diag(&[int(2), int(1)])]).is_err());
    assert!(reconstruct_underlying(&beta, &[Matrix::from_i64(&[&[1, 1], &[0, 1]])]).is_ok());
    assert!(reconstruct_underlying(&beta, &[]).is_err());
    assert!(reconstruct_underlying(&e1(), &[Matrix::zeros(1, 1)]).is_err());
}

#[test]
fn random_forms_standardize() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for kind in [FormKind::Symmetric, FormKind::Skew] {
        for _ in 0..40 {
            let beta = random_valid_form(&mut rng, kind, -3..=3, 6);
            let report = standardize(&beta).unwrap();
            let b = &report.change;
            assert_eq!(*report.standardized.gram(), b.mul(beta.gram()).mul(&b.transpose()));
            assert!(!b.determinant().is_zero());
            assert!(report.standardized.is_valid());
            assert!(report.matches_standard_pattern(), "{beta:?}");
            if report.middle_kind == MiddleKind::Metric {
                let rows = beta.space().indices_of_degree(report.shape.k);
                assert_eq!(
                    report.signature(),
                    sylvester_signature(&beta.gram().submatrix(&rows, &rows))
                );
            }
        }
    }
}

#[test]
fn level_groups_account_for_the_orthogonal_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for kind in [FormKind::Symmetric, FormKind::Skew] {
        for _ in 0..25 {
            let beta = random_valid_form(&mut rng, kind, -3..=3, 6);
            assert_eq!(
                underlying_group_dim(&beta).unwrap(),
                orthogonal_algebra_dim(&beta).unwrap(),
                "{beta:?}"
            );
        }
    }
}

#[test]
fn factorization_round_trip_and_multiplicativity() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for kind in [FormKind::Symmetric, FormKind::Skew] {
        for _ in 0..20 {
            let beta = random_valid_form(&mut rng, kind, -3..=3, 5);
            let a = random_orthogonal_map(&mut rng, &beta).unwrap();
            let b = random_orthogonal_map(&mut rng, &beta).unwrap();
            let fa = factor_underlying(&beta, &a).unwrap();
            let fb = factor_underlying(&beta, &b).unwrap();
            assert_eq!(reconstruct_underlying(&beta, &fa.blocks()).unwrap(), a);
            let ab = a.compose(&b).unwrap();
            assert!(orthogonality_check(&beta, &ab).unwrap());
            let fab = factor_underlying(&beta, &ab).unwrap();
            for ((x, y), z) in fa.levels.iter().zip(&fb.levels).zip(&fab.levels) {
                assert_eq!(x.block.mul(&y.block), z.block);
            }
            let products: Vec<Matrix> = fa.blocks().iter().zip(fb.blocks()).map(|(x, y)| x.mul(&y)).collect();
            assert_eq!(reconstruct_underlying(&beta, &products).unwrap(), ab);
        }
    }
}
