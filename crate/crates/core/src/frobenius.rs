//! The two-coin Frobenius problem.
//!
//! For coprime positive integers `p` and `q` the largest integer that is not
//! a non-negative integer combination of them is `(p-1)(q-1) - 1`; with a
//! coin of value 1 every non-negative integer is representable and the
//! answer is -1. These bounds drive the path-decomposition lower bounds on
//! reset thresholds.

use crate::error::{Error, Result};

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Largest integer not expressible as `a*p + b*q` with `a, b >= 0`.
///
/// Requires coprime `p, q >= 1`; returns -1 when every non-negative integer
/// is expressible (that is, when `p` or `q` is 1).
pub fn frobenius(p: u64, q: u64) -> Result<i64> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("coin values must be positive".into()));
    }
    if gcd(p, q) != 1 {
        return Err(Error::Domain(format!("{p} and {q} are not coprime")));
    }
    Ok((p as i64 - 1) * (q as i64 - 1) - 1)
}

/// True iff `m = a*p + b*q` for some non-negative integers `a`, `b`.
///
/// `p` and `q` must be positive; they need not be coprime.
pub fn representable(m: u64, p: u64, q: u64) -> Result<bool> {
    if p == 0 || q == 0 {
        return Err(Error::Domain("coin values must be positive".into()));
    }
    let mut rest = m as i64;
    while rest >= 0 {
        if rest as u64 % q == 0 {
            return Ok(true);
        }
        rest -= p as i64;
    }
    Ok(false)
}
