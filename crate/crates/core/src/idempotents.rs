//! Idempotent endomorphisms and the comparison with capacity.
//!
//! For `X = K(G, 1)` homotopy classes of self-maps correspond to
//! endomorphisms of `G`, so the number of homotopy idempotents of `X` is the
//! number of idempotent endomorphisms of `G`. That number bounds the capacity
//! from above but can be infinite when the capacity is not: `ℤ²` has
//! infinitely many idempotents while `C(T²) = 3`.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::fga::{AbelianGroup, FreeRank, IntMatrix};
use crate::spaces::{capacity, CapacityResult, SpaceExpr};
use crate::summands::{endomorphism_count, oracle_report, sweep_report, OracleConfig, SWEEP_LIMIT};

/// The family `n ↦ [[1, n], [0, 0]]` placed in the top-left corner of an
/// `r × r` zero matrix. Every member is idempotent and distinct members are
/// distinct endomorphisms of `ℤʳ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WitnessFamily {
    pub rank: u64,
}

impl WitnessFamily {
    pub fn member(&self, n: i64) -> IntMatrix {
        let r = self.rank as usize;
        let mut m = IntMatrix::zeros(r, r);
        m[(0, 0)] = BigInt::from(1);
        m[(0, 1)] = BigInt::from(n);
        m
    }

    /// Checks `f·f = f` exactly for every `n` in the range.
    pub fn verify(&self, range: std::ops::RangeInclusive<i64>) -> bool {
        range.into_iter().all(|n| {
            let f = self.member(n);
            &f * &f == f
        })
    }
}

impl fmt::Display for WitnessFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank == 2 {
            f.write_str("[[1, n], [0, 0]], n in Z")
        } else {
            write!(
                f,
                "[[1, n], [0, 0]] in the top-left corner of a {0}x{0} zero matrix, n in Z",
                self.rank
            )
        }
    }
}

/// Number of `f ∈ End(G)` with `f∘f = f`.
///
/// Finite groups are counted exactly: by a sweep of every endomorphism
/// matrix when the ring is small, otherwise by counting complementary
/// subgroup pairs, which are in bijection with idempotents.
pub fn count_idempotent_endos(g: &AbelianGroup, config: OracleConfig) -> Result<Cardinal> {
    Ok(count_with_witness(g, config)?.0)
}

fn count_with_witness(
    g: &AbelianGroup,
    config: OracleConfig,
) -> Result<(Cardinal, Option<WitnessFamily>)> {
    if g.is_finite() {
        let small = endomorphism_count(&g.cyclic_orders())
            .to_u64()
            .is_some_and(|n| n <= SWEEP_LIMIT);
        let report = if small {
            sweep_report(g, config)?
        } else {
            oracle_report(g, config)?
        };
        return Ok((Cardinal::from_u64(report.idempotents), None));
    }
    match g.free_rank() {
        Some(FreeRank::Finite(r)) if g.torsion().is_empty() => match r {
            0 => unreachable!("the trivial group is finite"),
            1 => Ok((Cardinal::from_u64(2), None)),
            _ => {
                let w = WitnessFamily { rank: r };
                if !w.verify(-10..=10) {
                    return Err(Error::Inconsistent(format!(
                        "witness family {w} is not idempotent"
                    )));
                }
                Ok((Cardinal::Infinite, Some(w)))
            }
        },
        _ => Err(Error::Unsupported(format!(
            "idempotents are counted for finite groups and Z^r only, not {g}"
        ))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdempotentReport {
    pub group: AbelianGroup,
    pub idempotent_count: Cardinal,
    /// Capacity of `K(group, 1)`.
    pub capacity_of_em: CapacityResult,
    pub witness: Option<WitnessFamily>,
}

impl IdempotentReport {
    /// `Some(C ≤ |idempotents|)` when both sides are finite.
    pub fn bound_holds(&self) -> Option<bool> {
        let (Cardinal::Finite(count), CapacityResult::Finite(c)) =
            (&self.idempotent_count, &self.capacity_of_em)
        else {
            return None;
        };
        Some(c <= count)
    }
}

pub fn bound_report(g: &AbelianGroup, config: OracleConfig) -> Result<IdempotentReport> {
    let (idempotent_count, witness) = count_with_witness(g, config)?;
    let capacity_of_em = capacity(&SpaceExpr::em(g.clone(), 1)?);
    let report = IdempotentReport {
        group: g.clone(),
        idempotent_count,
        capacity_of_em,
        witness,
    };
    if report.bound_holds() == Some(false) {
        return Err(Error::Inconsistent(format!(
            "capacity of K({g}, 1) exceeds its idempotent count"
        )));
    }
    Ok(report)
}
