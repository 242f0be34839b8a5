use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::Deserialize;

use super::primes::{factorize, is_prime, to_factorable};
use super::snf::{smith_normal_form, IntMatrix};
use crate::error::{Error, Result};

/// A prime power `p^e` with `e ≥ 1`; the order of a primary cyclic group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PrimePower {
    prime: u64,
    exponent: u32,
}

impl PrimePower {
    pub fn new(prime: u64, exponent: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::InvalidInput(format!("{prime} is not prime")));
        }
        if exponent == 0 {
            return Err(Error::InvalidInput(
                "prime power exponent must be >= 1".into(),
            ));
        }
        if prime.checked_pow(exponent).is_none() {
            return Err(Error::FactorTooLarge {
                value: format!("{prime}^{exponent}"),
            });
        }
        Ok(PrimePower { prime, exponent })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// `prime^exponent`; always fits because construction checks it.
    pub fn value(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

impl fmt::Display for PrimePower {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}", self.prime, self.exponent)
    }
}

/// Free rank of a group: a natural number or the marker ω for countably
/// infinite rank.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FreeRank {
    Finite(u64),
    Omega,
}

impl FreeRank {
    fn add(self, other: FreeRank) -> Result<FreeRank> {
        match (self, other) {
            (FreeRank::Finite(a), FreeRank::Finite(b)) => a
                .checked_add(b)
                .map(FreeRank::Finite)
                .ok_or_else(|| Error::InvalidInput("free rank overflow".into())),
            _ => Ok(FreeRank::Omega),
        }
    }
}

/// Torsion part keyed by primary cyclic order; multiplicities are always ≥ 1.
pub type Torsion = BTreeMap<PrimePower, u64>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Repr {
    Fg {
        free_rank: FreeRank,
        torsion: Torsion,
    },
    Rationals,
}

/// An abelian group in canonical form: free rank plus a multiset of primary
/// cyclic summands, or the rational numbers as a standalone atom.
///
/// Two values are isomorphic exactly when they compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AbelianGroup(Repr);

impl AbelianGroup {
    pub fn trivial() -> Self {
        Self::free(0)
    }

    pub fn free(rank: u64) -> Self {
        AbelianGroup(Repr::Fg {
            free_rank: FreeRank::Finite(rank),
            torsion: Torsion::new(),
        })
    }

    /// Free abelian group of countably infinite rank.
    pub fn free_omega() -> Self {
        AbelianGroup(Repr::Fg {
            free_rank: FreeRank::Omega,
            torsion: Torsion::new(),
        })
    }

    pub fn rationals() -> Self {
        AbelianGroup(Repr::Rationals)
    }

    /// `Z_m` for `m ≥ 1`, decomposed into its primary parts (`Z_1` is trivial).
    pub fn cyclic(m: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidInput("cyclic order must be positive".into()));
        }
        let torsion = if m == 1 {
            Torsion::new()
        } else {
            primary_decomposition(&[BigInt::from(m)])?
        };
        Ok(Self::from_parts(FreeRank::Finite(0), torsion))
    }

    /// Canonicalizes free rank and torsion data, dropping zero multiplicities.
    pub fn from_parts(
        free_rank: FreeRank,
        torsion: impl IntoIterator<Item = (PrimePower, u64)>,
    ) -> Self {
        let mut t = Torsion::new();
        for (pp, k) in torsion {
            if k > 0 {
                *t.entry(pp).or_insert(0) += k;
            }
        }
        AbelianGroup(Repr::Fg {
            free_rank,
            torsion: t,
        })
    }

    pub fn is_rationals(&self) -> bool {
        matches!(self.0, Repr::Rationals)
    }

    /// `None` for Q.
    pub fn free_rank(&self) -> Option<FreeRank> {
        match &self.0 {
            Repr::Fg { free_rank, .. } => Some(*free_rank),
            Repr::Rationals => None,
        }
    }

    /// Primary torsion summands; empty for Q.
    pub fn torsion(&self) -> &Torsion {
        static EMPTY: Torsion = Torsion::new();
        match &self.0 {
            Repr::Fg { torsion, .. } => torsion,
            Repr::Rationals => &EMPTY,
        }
    }

    pub fn is_trivial(&self) -> bool {
        matches!(&self.0, Repr::Fg { free_rank: FreeRank::Finite(0), torsion } if torsion.is_empty())
    }

    /// Finitely generated: no ω rank and not Q.
    pub fn is_finitely_generated(&self) -> bool {
        matches!(
            self.0,
            Repr::Fg {
                free_rank: FreeRank::Finite(_),
                ..
            }
        )
    }

    pub fn is_finite(&self) -> bool {
        self.free_rank() == Some(FreeRank::Finite(0))
    }

    /// Every self-epimorphism is an automorphism. Holds for finitely generated
    /// groups and for Q; fails for free groups of rank ω (the shift map).
    pub fn is_hopfian(&self) -> bool {
        self.free_rank() != Some(FreeRank::Omega)
    }

    /// Group order when finite.
    pub fn order(&self) -> Option<BigUint> {
        if !self.is_finite() {
            return None;
        }
        let mut n = BigUint::one();
        for (pp, &k) in self.torsion() {
            n *= BigUint::from(pp.value()).pow(k as u32);
        }
        Some(n)
    }

    /// Primary cyclic orders with multiplicity, sorted by `(prime, exponent)`.
    pub fn cyclic_orders(&self) -> Vec<u64> {
        self.torsion()
            .iter()
            .flat_map(|(pp, &k)| std::iter::repeat_n(pp.value(), k as usize))
            .collect()
    }

    pub fn direct_sum(&self, other: &AbelianGroup) -> Result<AbelianGroup> {
        match (&self.0, &other.0) {
            (Repr::Rationals, _) if other.is_trivial() => Ok(self.clone()),
            (_, Repr::Rationals) if self.is_trivial() => Ok(other.clone()),
            (Repr::Rationals, _) | (_, Repr::Rationals) => Err(Error::UnsupportedCombination(
                format!("Q is only supported as a standalone group, cannot form {self} + {other}"),
            )),
            (
                Repr::Fg {
                    free_rank: ra,
                    torsion: ta,
                },
                Repr::Fg {
                    free_rank: rb,
                    torsion: tb,
                },
            ) => {
                let mut torsion = ta.clone();
                for (pp, &k) in tb {
                    let slot = torsion.entry(*pp).or_insert(0);
                    *slot = slot
                        .checked_add(k)
                        .ok_or_else(|| Error::InvalidInput("multiplicity overflow".into()))?;
                }
                Ok(AbelianGroup(Repr::Fg {
                    free_rank: ra.add(*rb)?,
                    torsion,
                }))
            }
        }
    }

    /// `k`-fold direct sum of `self`.
    pub fn repeat(&self, k: u64) -> Result<AbelianGroup> {
        match &self.0 {
            _ if k == 0 => Ok(Self::trivial()),
            _ if k == 1 || self.is_trivial() => Ok(self.clone()),
            Repr::Rationals => Err(Error::UnsupportedCombination(
                "Q is only supported as a standalone group".into(),
            )),
            Repr::Fg { free_rank, torsion } => {
                let free_rank = match free_rank {
                    FreeRank::Finite(r) => FreeRank::Finite(
                        r.checked_mul(k)
                            .ok_or_else(|| Error::InvalidInput("free rank overflow".into()))?,
                    ),
                    FreeRank::Omega => FreeRank::Omega,
                };
                let mut out = Torsion::new();
                for (pp, &m) in torsion {
                    let m = m
                        .checked_mul(k)
                        .ok_or_else(|| Error::InvalidInput("multiplicity overflow".into()))?;
                    out.insert(*pp, m);
                }
                Ok(AbelianGroup(Repr::Fg {
                    free_rank,
                    torsion: out,
                }))
            }
        }
    }
}

pub fn is_isomorphic(g: &AbelianGroup, h: &AbelianGroup) -> bool {
    g == h
}

/// Splits invariant factors (each ≥ 2) into prime-power multiplicities.
pub fn primary_decomposition(invariant_factors: &[BigInt]) -> Result<Torsion> {
    let mut torsion = Torsion::new();
    for f in invariant_factors {
        if f < &BigInt::from(2) {
            return Err(Error::InvalidInput(format!(
                "invariant factor {f} must be at least 2"
            )));
        }
        for (p, e) in factorize(to_factorable(f)?) {
            *torsion
                .entry(PrimePower {
                    prime: p,
                    exponent: e,
                })
                .or_insert(0) += 1;
        }
    }
    Ok(torsion)
}

/// A finite presentation `⟨g generators | relation rows⟩` of an abelian group.
#[derive(Debug, Clone, PartialEq, Eq, Deserialize)]
pub struct RelationPresentation {
    pub generators: usize,
    #[serde(default)]
    pub relations: Vec<Vec<i64>>,
}

impl RelationPresentation {
    /// Parses `{"generators": g, "relations": [[...], ...]}`.
    pub fn from_json(text: &str) -> Result<Self> {
        let p: RelationPresentation = serde_json::from_str(text)
            .map_err(|e| Error::InvalidInput(format!("bad presentation JSON: {e}")))?;
        p.relation_matrix()?;
        Ok(p)
    }

    pub fn relation_matrix(&self) -> Result<IntMatrix> {
        IntMatrix::from_rows(self.generators, &self.relations).ok_or_else(|| {
            Error::InvalidInput(format!(
                "every relation must have exactly {} entries",
                self.generators
            ))
        })
    }
}

/// Cokernel of the relation matrix (rows are relators in `Z^g`).
pub fn group_from_presentation(p: &RelationPresentation) -> Result<AbelianGroup> {
    group_from_relations(&p.relation_matrix()?)
}

pub(crate) fn group_from_relations(relations: &IntMatrix) -> Result<AbelianGroup> {
    let g = relations.cols();
    let snf = smith_normal_form(relations);
    let diag = snf.invariant_factors();
    let zero_factors = g - diag.iter().filter(|d| !d.is_zero()).count();
    let nonunit: Vec<BigInt> = diag
        .into_iter()
        .filter(|d| !d.is_zero() && !d.abs().is_one())
        .collect();
    let torsion = primary_decomposition(&nonunit)?;
    Ok(AbelianGroup::from_parts(
        FreeRank::Finite(zero_factors as u64),
        torsion,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pp(p: u64, e: u32) -> PrimePower {
        PrimePower::new(p, e).unwrap()
    }

    fn torsion(items: &[(u64, u32, u64)]) -> Torsion {
        items.iter().map(|&(p, e, k)| (pp(p, e), k)).collect()
    }

    fn present(g: usize, rows: &[Vec<i64>]) -> AbelianGroup {
        group_from_presentation(&RelationPresentation {
            generators: g,
            relations: rows.to_vec(),
        })
        .unwrap()
    }

    #[test]
    fn prime_power_validation() {
        assert!(PrimePower::new(4, 1).is_err());
        assert!(PrimePower::new(2, 0).is_err());
        assert!(PrimePower::new(2, 64).is_err());
        assert_eq!(pp(2, 63).value(), 1 << 63);
    }

    #[test]
    fn presentation_examples() {
        assert_eq!(present(1, &[]), AbelianGroup::free(1));
        assert_eq!(
            present(1, &[vec![6]]),
            AbelianGroup::from_parts(FreeRank::Finite(0), torsion(&[(2, 1, 1), (3, 1, 1)]))
        );
        assert_eq!(
            present(2, &[vec![2, 4], vec![4, 4]]),
            AbelianGroup::from_parts(FreeRank::Finite(0), torsion(&[(2, 1, 1), (2, 2, 1)]))
        );
        assert_eq!(present(0, &[]), AbelianGroup::trivial());
        assert_eq!(present(2, &[vec![1, 0]]), AbelianGroup::free(1));
        assert_eq!(present(2, &[vec![0, 0]]), AbelianGroup::free(2));
    }

    #[test]
    fn presentation_json() {
        let p =
            RelationPresentation::from_json(r#"{"generators": 2, "relations": [[2, 4], [4, 4]]}"#)
                .unwrap();
        assert_eq!(
            group_from_presentation(&p).unwrap().to_string(),
            "Z_2 + Z_4"
        );
        assert!(
            RelationPresentation::from_json(r#"{"generators": 2, "relations": [[1]]}"#).is_err()
        );
        assert!(RelationPresentation::from_json("[1, 2]").is_err());
        let free = RelationPresentation::from_json(r#"{"generators": 3}"#).unwrap();
        assert_eq!(
            group_from_presentation(&free).unwrap(),
            AbelianGroup::free(3)
        );
    }

    #[test]
    fn primary_decomposition_examples() {
        let f = |xs: &[i64]| {
            primary_decomposition(&xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>())
        };
        assert_eq!(f(&[6]).unwrap(), torsion(&[(2, 1, 1), (3, 1, 1)]));
        // ℤ₂ ⊕ ℤ₂ ⊕ ℤ₆ has order 24 = 2³·3.
        let t = f(&[2, 2, 6]).unwrap();
        assert_eq!(t, torsion(&[(2, 1, 3), (3, 1, 1)]));
        let order: u64 = t.iter().map(|(p, &k)| p.value().pow(k as u32)).product();
        assert_eq!(order, 24);
        assert!(f(&[]).unwrap().is_empty());
        assert!(f(&[1]).is_err());
        assert!(f(&[0]).is_err());
        assert!(f(&[-3]).is_err());
    }

    #[test]
    fn direct_sum_examples() {
        let z2 = AbelianGroup::cyclic(2).unwrap();
        let z3 = AbelianGroup::cyclic(3).unwrap();
        assert_eq!(
            z2.direct_sum(&z2).unwrap(),
            AbelianGroup::from_parts(FreeRank::Finite(0), torsion(&[(2, 1, 2)]))
        );
        let a = AbelianGroup::free(1).direct_sum(&z2).unwrap();
        let b = AbelianGroup::free(1).direct_sum(&z3).unwrap();
        assert_eq!(
            a.direct_sum(&b).unwrap(),
            AbelianGroup::from_parts(FreeRank::Finite(2), torsion(&[(2, 1, 1), (3, 1, 1)]))
        );
        let q = AbelianGroup::rationals();
        assert!(matches!(
            q.direct_sum(&AbelianGroup::free(1)),
            Err(Error::UnsupportedCombination(_))
        ));
        assert_eq!(q.direct_sum(&AbelianGroup::trivial()).unwrap(), q);
        assert_eq!(
            AbelianGroup::free_omega()
                .direct_sum(&AbelianGroup::free(3))
                .unwrap(),
            AbelianGroup::free_omega()
        );
    }

    #[test]
    fn isomorphism_examples() {
        let z6 = AbelianGroup::cyclic(6).unwrap();
        let z2z3 = AbelianGroup::cyclic(2)
            .unwrap()
            .direct_sum(&AbelianGroup::cyclic(3).unwrap())
            .unwrap();
        assert!(is_isomorphic(&z6, &z2z3));
        let z4 = AbelianGroup::cyclic(4).unwrap();
        let z2sq = AbelianGroup::cyclic(2).unwrap().repeat(2).unwrap();
        assert!(!is_isomorphic(&z4, &z2sq));
        assert!(!is_isomorphic(
            &AbelianGroup::free(1),
            &AbelianGroup::rationals()
        ));
    }

    #[test]
    fn hopfian() {
        assert!(AbelianGroup::free(2).is_hopfian());
        assert!(!AbelianGroup::free_omega().is_hopfian());
        assert!(AbelianGroup::rationals().is_hopfian());
    }

    /// On ⊕_ω ℤ the left shift (e₀ ↦ 0, eᵢ ↦ eᵢ₋₁) is onto but kills e₀.
    /// Checked on finitely supported vectors, which is all of ⊕_ω ℤ.
    #[test]
    fn omega_rank_shift_is_non_injective_epimorphism() {
        let shift = |v: &[i64]| -> Vec<i64> { v.iter().skip(1).copied().collect() };
        let unshift =
            |v: &[i64]| -> Vec<i64> { std::iter::once(0).chain(v.iter().copied()).collect() };
        for v in [vec![1, 2, 3], vec![0, 0, 5], vec![-4]] {
            assert_eq!(shift(&unshift(&v)), v, "shift must be surjective");
        }
        assert!(shift(&[1]).iter().all(|&x| x == 0), "e₀ lies in the kernel");
    }

    #[test]
    fn order_and_cyclic_orders() {
        let g = AbelianGroup::from_parts(FreeRank::Finite(0), torsion(&[(2, 1, 2), (3, 1, 1)]));
        assert_eq!(g.order(), Some(BigUint::from(12u32)));
        assert_eq!(g.cyclic_orders(), vec![2, 2, 3]);
        assert_eq!(AbelianGroup::free(1).order(), None);
        assert_eq!(AbelianGroup::trivial().order(), Some(BigUint::one()));
    }
}
