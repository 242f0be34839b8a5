//! Formula-versus-oracle sweep over every finite abelian group up to a
//! given order.

use rayon::prelude::*;

use super::count::count_summands;
use super::oracle::{oracle_count_summands, OracleConfig};
use crate::error::{Error, Result};
use crate::fga::{factorize, AbelianGroup, FreeRank, PrimePower};

/// Partitions of `n` as non-increasing part lists.
pub fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All abelian groups of order `n` up to isomorphism, sorted canonically.
pub fn groups_of_order(n: u64) -> Vec<AbelianGroup> {
    let mut groups = vec![AbelianGroup::trivial()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for parts in partitions(e) {
            let local = AbelianGroup::from_parts(
                FreeRank::Finite(0),
                parts
                    .iter()
                    .map(|&a| (PrimePower::new(p, a).expect("p is prime"), 1)),
            );
            for g in &groups {
                next.push(g.direct_sum(&local).expect("finite groups"));
            }
        }
        groups = next;
    }
    groups.sort();
    groups
}

/// Every finite abelian group of order `1..=max_order`, by order then canonical form.
pub fn groups_up_to(max_order: u64) -> Vec<AbelianGroup> {
    (1..=max_order).flat_map(groups_of_order).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyRow {
    pub group: AbelianGroup,
    pub order: u64,
    pub formula: u64,
    pub oracle: u64,
}

impl VerifyRow {
    pub fn passed(&self) -> bool {
        self.formula == self.oracle
    }
}

/// Compares [`count_summands`] with the oracle on every group of order at
/// most `max_order`. Rows come back in the order of [`groups_up_to`].
pub fn verify_sweep(max_order: u64, config: OracleConfig) -> Result<Vec<VerifyRow>> {
    if max_order > config.max_order {
        return Err(Error::ResourceLimit {
            order: max_order.to_string(),
            cap: config.max_order,
        });
    }
    groups_up_to(max_order)
        .into_par_iter()
        .map(|group| {
            let oracle = oracle_count_summands(&group, config)?;
            let formula = count_summands(&group)
                .to_u64()
                .ok_or_else(|| Error::Inconsistent(format!("infinite count for {group}")))?;
            let order = group
                .order()
                .and_then(|n| u64::try_from(n).ok())
                .unwrap_or(0);
            Ok(VerifyRow {
                group,
                order,
                formula,
                oracle,
            })
        })
        .collect()
}
