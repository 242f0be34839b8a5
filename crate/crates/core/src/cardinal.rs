use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

/// A natural number or the countable infinity ω.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Cardinal {
    Finite(BigUint),
    Infinite,
}

impl Cardinal {
    pub fn one() -> Self {
        Cardinal::Finite(BigUint::one())
    }

    pub fn from_u64(n: u64) -> Self {
        Cardinal::Finite(BigUint::from(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Cardinal::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Cardinal::Finite(n) => Some(n),
            Cardinal::Infinite => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.finite().and_then(|n| n.to_u64())
    }

    /// Product with ω absorbing.
    pub fn mul(&self, other: &Cardinal) -> Cardinal {
        match (self, other) {
            (Cardinal::Finite(a), Cardinal::Finite(b)) => Cardinal::Finite(a * b),
            _ => Cardinal::Infinite,
        }
    }
}

impl fmt::Display for Cardinal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cardinal::Finite(n) => write!(f, "{n}"),
            Cardinal::Infinite => f.write_str("inf"),
        }
    }
}
