//! Koszul sign helpers.

/// Parity of a degree, in `{0, 1}`, valid for negative values as well.
pub fn parity(d: i64) -> i64 {
    d.rem_euclid(2)
}

/// `(-1)^exponent` as `+1` or `-1`.
pub fn koszul(exponent: i64) -> i64 {
    if parity(exponent) == 0 {
        1
    } else {
        -1
    }
}

/// True when `(-1)^exponent == -1`.
pub fn is_negative(exponent: i64) -> bool {
    parity(exponent) == 1
}
