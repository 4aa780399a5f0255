//! Random generation of valid forms and of homogeneous maps, for tests and
//! randomized suites.

use graded_core::rational::{frac, int};
use graded_core::sign::{is_negative, parity};
use graded_core::{make_space, Degree, GradedMap, GradedSpace, Matrix, Rational};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::{BilinearForm, FormKind};

/// A small random rational with numerator in `[-bound, bound]` and
/// denominator in `[1, 3]`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64) -> Rational {
    frac(rng.gen_range(-bound..=bound), rng.gen_range(1..=3))
}

/// A random square matrix with entries from [`small_rational`] that is
/// invertible (rejection sampling on the determinant).
pub fn random_invertible<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Matrix {
    loop {
        let m = Matrix::from_fn(n, n, |_, _| small_rational(rng, 3));
        if !m.determinant().is_zero() {
            return m;
        }
    }
}

/// A random homogeneous map `V → V` of the given degree: every entry allowed
/// by the degree-block constraint is drawn from [`small_rational`], and about
/// a third of them are set to zero.
pub fn random_map<R: Rng + ?Sized>(rng: &mut R, v: &GradedSpace, degree: Degree) -> GradedMap {
    let n = v.dim();
    let m = Matrix::from_fn(n, n, |r, c| {
        if v.degree(c) + degree == v.degree(r) && rng.gen_range(0..3) > 0 {
            small_rational(rng, 4)
        } else {
            int(0)
        }
    });
    GradedMap::new(v.clone(), v.clone(), degree, m).expect("entries respect the degree block")
}

/// A random degree list of total length at most `max_dim` admitting a
/// nondegenerate form of degree `ell` and the given kind, i.e. with
/// `r_j = r_{-(j+ℓ)}` and an even middle block when that block is skew.
pub fn random_admissible_degrees<R: Rng + ?Sized>(
    rng: &mut R,
    ell: Degree,
    kind: FormKind,
    max_dim: usize,
) -> Vec<Degree> {
    let mut degrees = Vec::new();
    let target = rng.gen_range(1..=max_dim.max(1));
    let mut attempts = 0;
    while degrees.len() < target && attempts < 32 {
        attempts += 1;
        let j: Degree = rng.gen_range(-3..=3);
        let partner = -j - ell;
        if j == partner {
            let skew_middle = middle_is_skew(j, ell, kind);
            let size = if skew_middle { 2 } else { 1 };
            if degrees.len() + size <= max_dim {
                degrees.extend(std::iter::repeat_n(j, size));
            }
        } else if degrees.len() + 2 <= max_dim {
            degrees.push(j);
            degrees.push(partner);
        }
    }
    degrees.shuffle(rng);
    degrees
}

/// Whether the block pairing `V_j` with itself (`2j = -ℓ`) is antisymmetric
/// as an ordinary matrix.
pub fn middle_is_skew(j: Degree, ell: Degree, kind: FormKind) -> bool {
    let p = parity(j + ell);
    is_negative(p * p) != kind.is_skew()
}

/// A random nondegenerate form of the given degree and kind on `space`,
/// which must have admissible dimensions.
pub fn random_form_on<R: Rng + ?Sized>(
    rng: &mut R,
    space: &GradedSpace,
    ell: Degree,
    kind: FormKind,
) -> Option<BilinearForm> {
    let n = space.dim();
    let mut probe = BilinearForm::new(space.clone(), ell, kind, Matrix::zeros(n, n)).ok()?;
    let mut gram = Matrix::zeros(n, n);
    for (j, _) in space.gdim().iter() {
        let partner = -j - ell;
        let rows = space.indices_of_degree(j);
        let cols = space.indices_of_degree(partner);
        if rows.len() != cols.len() {
            return None;
        }
        if j > partner {
            continue;
        }
        let size = rows.len();
        let block = if j == partner {
            let skew = middle_is_skew(j, ell, kind);
            if skew && size % 2 == 1 {
                return None;
            }
            loop {
                let r = Matrix::from_fn(size, size, |_, _| small_rational(rng, 3));
                let rt = r.transpose();
                let b = if skew { r.sub(&rt) } else { r.add(&rt) };
                if !b.determinant().is_zero() {
                    break b;
                }
            }
        } else {
            random_invertible(rng, size)
        };
        for (a, &l) in rows.iter().enumerate() {
            for (b, &k) in cols.iter().enumerate() {
                gram[(l, k)] = block[(a, b)].clone();
            }
        }
        if j != partner {
            for &l in &rows {
                for &k in &cols {
                    let v = &gram[(l, k)] * probe.swap_sign(l, k);
                    gram[(k, l)] = v;
                }
            }
        }
    }
    probe = BilinearForm::new(space.clone(), ell, kind, gram).ok()?;
    debug_assert!(probe.is_valid());
    Some(probe)
}

/// A random valid form with `ℓ` drawn from `ells` and total dimension at
/// most `max_dim`.
pub fn random_valid_form<R: Rng + ?Sized>(
    rng: &mut R,
    kind: FormKind,
    ells: std::ops::RangeInclusive<Degree>,
    max_dim: usize,
) -> BilinearForm {
    loop {
        let ell = rng.gen_range(ells.clone());
        let degrees = random_admissible_degrees(rng, ell, kind, max_dim);
        if degrees.is_empty() {
            continue;
        }
        let space = make_space(&degrees);
        if let Some(form) = random_form_on(rng, &space, ell, kind) {
            return form;
        }
    }
}
