use num_bigint::BigUint;

use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::fga::{AbelianGroup, FreeRank};

/// Number of direct summands up to isomorphism; ω for infinite free rank.
pub type SummandCount = Cardinal;

/// Largest summand list [`enumerate_summands`] will materialize.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

/// Counts direct summands up to isomorphism.
///
/// For `G = ⊕ Z_{pᵢ^αᵢ}^(kᵢ) ⊕ Z^r` the summands are exactly the groups
/// obtained by keeping `0 ≤ tᵢ ≤ kᵢ` copies of each primary cyclic factor and
/// `0 ≤ s ≤ r` copies of `Z`, so the count is `(r + 1) ∏ (kᵢ + 1)`. Q has
/// only the trivial group and itself.
pub fn count_summands(g: &AbelianGroup) -> SummandCount {
    match g.free_rank() {
        None => Cardinal::from_u64(2),
        Some(FreeRank::Omega) => Cardinal::Infinite,
        Some(FreeRank::Finite(r)) => {
            let mut n = BigUint::from(r) + 1u32;
            for &k in g.torsion().values() {
                n *= BigUint::from(k) + 1u32;
            }
            Cardinal::Finite(n)
        }
    }
}

/// Lists one representative per isomorphism class of direct summands.
///
/// Coordinates are the multiplicities `(t₁, …, tₙ, s)` of the primary cyclic
/// factors in `(prime, exponent)` order followed by the free rank; the first
/// coordinate varies fastest, so the list starts `0, Z_{p₁^α₁}, …` and ends
/// with `g` itself.
pub fn enumerate_summands(g: &AbelianGroup) -> Result<Vec<AbelianGroup>> {
    let Some(FreeRank::Finite(rank)) = g.free_rank() else {
        return Err(Error::Unsupported(format!(
            "cannot enumerate the summands of {g}"
        )));
    };
    let count = count_summands(g);
    if count.to_u64().is_none_or(|n| n > ENUMERATION_LIMIT) {
        return Err(Error::TooMany {
            what: "summand list",
            count: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let factors: Vec<_> = g.torsion().iter().map(|(pp, &k)| (*pp, k)).collect();
    let mut bounds: Vec<u64> = factors.iter().map(|&(_, k)| k).collect();
    bounds.push(rank);

    let mut out = Vec::with_capacity(count.to_u64().unwrap_or(0) as usize);
    let mut digits = vec![0u64; bounds.len()];
    loop {
        let torsion = factors.iter().zip(&digits).map(|(&(pp, _), &t)| (pp, t));
        out.push(AbelianGroup::from_parts(
            FreeRank::Finite(digits[digits.len() - 1]),
            torsion,
        ));
        // odometer, least significant digit first
        let mut i = 0;
        loop {
            if i == digits.len() {
                return Ok(out);
            }
            if digits[i] < bounds[i] {
                digits[i] += 1;
                break;
            }
            digits[i] = 0;
            i += 1;
        }
    }
}

/// Summand classes for any group with finitely many of them, including Q.
pub fn summand_classes(g: &AbelianGroup) -> Result<Vec<AbelianGroup>> {
    if g.is_rationals() {
        return Ok(vec![AbelianGroup::trivial(), g.clone()]);
    }
    enumerate_summands(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fga::parse_group;

    fn g(s: &str) -> AbelianGroup {
        parse_group(s).unwrap()
    }

    fn names(v: &[AbelianGroup]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn counts_from_the_moore_space_examples() {
        assert_eq!(
            count_summands(&g("Z_2^2 + Z_3 + Z^2")),
            Cardinal::from_u64(18)
        );
        assert_eq!(count_summands(&g("Z_9 + Z_64")), Cardinal::from_u64(4));
        assert_eq!(count_summands(&g("Z")), Cardinal::from_u64(2));
        assert_eq!(count_summands(&g("Z_9")), Cardinal::from_u64(2));
    }

    #[test]
    fn edge_counts() {
        assert_eq!(count_summands(&AbelianGroup::trivial()), Cardinal::one());
        assert_eq!(count_summands(&g("Q")), Cardinal::from_u64(2));
        assert_eq!(count_summands(&g("Z^inf")), Cardinal::Infinite);
        assert_eq!(count_summands(&g("Z^inf + Z_2")), Cardinal::Infinite);
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(names(&enumerate_summands(&g("Z_4")).unwrap()), ["0", "Z_4"]);
        assert_eq!(
            names(&enumerate_summands(&g("Z_2^2")).unwrap()),
            ["0", "Z_2", "Z_2^2"]
        );
        assert_eq!(
            names(&enumerate_summands(&g("Z + Z_3")).unwrap()),
            ["0", "Z_3", "Z", "Z_3 + Z"]
        );
        assert_eq!(
            names(&enumerate_summands(&AbelianGroup::trivial()).unwrap()),
            ["0"]
        );
    }

    #[test]
    fn enumeration_rejects_infinite_data() {
        assert!(matches!(
            enumerate_summands(&g("Q")),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            enumerate_summands(&g("Z^inf")),
            Err(Error::Unsupported(_))
        ));
        assert!(matches!(
            enumerate_summands(&g("Z^2000000")),
            Err(Error::TooMany { .. })
        ));
        assert_eq!(names(&summand_classes(&g("Q")).unwrap()), ["0", "Q"]);
    }

    #[test]
    fn enumeration_is_complete_and_distinct() {
        let group = g("Z_2^2 + Z_3 + Z^2");
        let list = enumerate_summands(&group).unwrap();
        assert_eq!(
            Cardinal::from_u64(list.len() as u64),
            count_summands(&group)
        );
        let mut sorted = list.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), list.len());
        assert_eq!(list.last(), Some(&group));
    }
}
