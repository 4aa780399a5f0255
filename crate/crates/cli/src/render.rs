//! Shared rendering helpers.

use graded_core::rational::display_rational;
use graded_core::{Matrix, Rational};

pub fn rational(r: &Rational) -> String {
    display_rational(r)
}

pub fn matrix_rows(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(rational).collect()).collect()
}

/// Rows joined by `; `, entries by spaces, e.g. `[1 0; 0 5/3]`.
pub fn matrix_inline(m: &Matrix) -> String {
    let rows: Vec<String> = matrix_rows(m).into_iter().map(|r| r.join(" ")).collect();
    format!("[{}]", rows.join("; "))
}
