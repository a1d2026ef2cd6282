//! Checked 128-bit integer and fraction arithmetic.
//!
//! Every comparison that decides a verdict or a tightness flag goes through
//! here; nothing is ever divided in floating point.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("exact arithmetic overflowed 128 bits")]
pub struct Overflow;

pub(crate) fn int(x: usize) -> i128 {
    x as i128
}

pub(crate) fn mul(a: i128, b: i128) -> Result<i128, Overflow> {
    a.checked_mul(b).ok_or(Overflow)
}

pub(crate) fn add(a: i128, b: i128) -> Result<i128, Overflow> {
    a.checked_add(b).ok_or(Overflow)
}

pub(crate) fn sub(a: i128, b: i128) -> Result<i128, Overflow> {
    a.checked_sub(b).ok_or(Overflow)
}

fn gcd(mut a: i128, mut b: i128) -> i128 {
    a = a.abs();
    b = b.abs();
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// A reduced fraction with positive denominator.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Fraction {
    pub num: i128,
    pub den: i128,
}

impl Fraction {
    /// Panics if `den == 0`.
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        let sign = if den < 0 { -1 } else { 1 };
        let g = gcd(num, den).max(1);
        Self {
            num: sign * num / g,
            den: sign * den / g,
        }
    }

    pub fn integer(v: i128) -> Self {
        Self { num: v, den: 1 }
    }

    pub fn try_cmp(&self, other: &Self) -> Result<Ordering, Overflow> {
        Ok(mul(self.num, other.den)?.cmp(&mul(other.num, self.den)?))
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Largest `r` with `r * r <= x`, for `x >= 0`.
pub fn isqrt(x: i128) -> i128 {
    assert!(x >= 0);
    if x < 2 {
        return x;
    }
    let mut r = (x as f64).sqrt() as i128;
    while r.checked_mul(r).is_none_or(|sq| sq > x) {
        r -= 1;
    }
    while (r + 1).checked_mul(r + 1).is_some_and(|sq| sq <= x) {
        r += 1;
    }
    r
}
