//! Deterministic trial-division factoring for 64-bit integers.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n < 4 {
        return true;
    }
    if n.is_multiple_of(2) || n.is_multiple_of(3) {
        return false;
    }
    let mut d = 5u64;
    while (d as u128) * (d as u128) <= n as u128 {
        if n.is_multiple_of(d) || n.is_multiple_of(d + 2) {
            return false;
        }
        d += 6;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing prime order.
/// `factorize(1)` is empty.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    for p in [2u64, 3] {
        let mut e = 0;
        while n > 1 && n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
    }
    let mut d = 5u64;
    while n > 1 && (d as u128) * (d as u128) <= n as u128 {
        for p in [d, d + 2] {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            if e > 0 {
                out.push((p, e));
            }
        }
        d += 6;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Narrows an exact integer to the factorable range.
pub(crate) fn to_factorable(value: &BigInt) -> Result<u64> {
    value.to_u64().ok_or_else(|| Error::FactorTooLarge {
        value: value.to_string(),
    })
}
