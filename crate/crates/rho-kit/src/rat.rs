//! Exact rational scalars. Every number in this crate is a [`Rat`]; there is
//! no floating point anywhere in the toolkit.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator (guaranteed by `num::BigRational`).
pub type Rat = BigRational;

/// Shorthand for an integer-valued `Rat`.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for the fraction n/d (d != 0).
pub fn ratq(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

pub fn zero() -> Rat {
    Rat::zero()
}

pub fn one() -> Rat {
    Rat::one()
}

/// Renders a rational as `p/q`, or plain `p` when the denominator is one.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses `p`, `p/q`, or `-p/q` (exact; no decimal forms accepted).
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Rat::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(Rat::from_integer(n))
    }
}

/// Exact absolute value.
pub fn abs(x: &Rat) -> Rat {
    x.abs()
}

/// True when `x` is an integer.
pub fn is_integer(x: &Rat) -> bool {
    x.denom().is_one()
}

/// True when `x` is a nonnegative integer.
pub fn is_nonneg_integer(x: &Rat) -> bool {
    is_integer(x) && !x.is_negative()
}
