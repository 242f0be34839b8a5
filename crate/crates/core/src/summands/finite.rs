//! Element-level model of a finite abelian group `Z_{d₁} ⊕ … ⊕ Z_{d_r}`
//! (each `dᵢ` a prime power) and its subgroup lattice.

use std::collections::{BTreeMap, HashSet};

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::fga::{AbelianGroup, FreeRank, PrimePower};

/// Groups above this order are never materialized element by element.
pub const MAX_ORACLE_ORDER: u64 = 128;

/// Subset of group elements, stored as a bitset over element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    fn empty(n: usize) -> Self {
        ElementSet {
            words: vec![0; n.div_ceil(64)],
        }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.words[x / 64] >> (x % 64) & 1 == 1
    }

    fn insert(&mut self, x: usize) {
        self.words[x / 64] |= 1 << (x % 64);
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i * 64 + b)
        })
    }

    fn intersection_len(&self, other: &ElementSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }
}

pub struct SubgroupLattice {
    pub subgroups: Vec<ElementSet>,
    pub complements: Vec<Vec<usize>>,
}

impl SubgroupLattice {
    /// Number of (image, kernel) pairs, i.e. of idempotent endomorphisms.
    pub fn complementary_pairs(&self) -> u64 {
        self.complements.iter().map(|ks| ks.len() as u64).sum()
    }
}

/// Finite abelian group with explicit addition table. Element `x` has
/// mixed-radix coordinates over the cyclic moduli, first modulus least
/// significant; element 0 is the identity.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    group: AbelianGroup,
    moduli: Vec<u64>,
    order: usize,
    add: Vec<u32>,
    neg: Vec<u32>,
    element_order: Vec<u64>,
}

impl FiniteGroup {
    /// Materializes `g`, which must be finite with order at most `cap`
    /// (itself at most [`MAX_ORACLE_ORDER`]).
    pub fn new(g: &AbelianGroup, cap: u64) -> Result<Self> {
        if cap > MAX_ORACLE_ORDER {
            return Err(Error::InvalidInput(format!(
                "oracle cap {cap} exceeds the supported maximum {MAX_ORACLE_ORDER}"
            )));
        }
        let Some(order) = g.order() else {
            return Err(Error::Unsupported(format!("{g} is not a finite group")));
        };
        if order.to_u64().is_none_or(|n| n > cap) {
            return Err(Error::ResourceLimit {
                order: order.to_string(),
                cap,
            });
        }
        let moduli = g.cyclic_orders();
        let n = order.to_usize().expect("order below cap");
        let mut fg = FiniteGroup {
            group: g.clone(),
            moduli,
            order: n,
            add: vec![0; n * n],
            neg: vec![0; n],
            element_order: vec![0; n],
        };
        let coords: Vec<Vec<u64>> = (0..n).map(|x| fg.coords(x)).collect();
        for a in 0..n {
            for b in 0..n {
                let sum: Vec<u64> = coords[a]
                    .iter()
                    .zip(&coords[b])
                    .zip(&fg.moduli)
                    .map(|((x, y), d)| (x + y) % d)
                    .collect();
                fg.add[a * n + b] = fg.index(&sum) as u32;
            }
            let neg: Vec<u64> = coords[a]
                .iter()
                .zip(&fg.moduli)
                .map(|(x, d)| (d - x) % d)
                .collect();
            fg.neg[a] = fg.index(&neg) as u32;
        }
        for x in 0..n {
            let (mut k, mut y) = (1, x);
            while y != 0 {
                y = fg.add(y, x);
                k += 1;
            }
            fg.element_order[x] = k;
        }
        Ok(fg)
    }

    pub fn group(&self) -> &AbelianGroup {
        &self.group
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn coords(&self, mut x: usize) -> Vec<u64> {
        self.moduli
            .iter()
            .map(|&d| {
                let c = x as u64 % d;
                x /= d as usize;
                c
            })
            .collect()
    }

    pub fn index(&self, coords: &[u64]) -> usize {
        let mut x = 0usize;
        for (c, &d) in coords.iter().zip(&self.moduli).rev() {
            x = x * d as usize + (c % d) as usize;
        }
        x
    }

    /// Element whose only nonzero coordinate is a 1 in slot `i`.
    pub fn basis_element(&self, i: usize) -> usize {
        self.moduli[..i].iter().product::<u64>() as usize
    }

    pub fn all(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        (0..self.order).for_each(|x| s.insert(x));
        s
    }

    pub fn trivial_subgroup(&self) -> ElementSet {
        let mut s = ElementSet::empty(self.order);
        s.insert(0);
        s
    }

    /// Subgroup generated by `gens`.
    pub fn span(&self, gens: impl IntoIterator<Item = usize>) -> ElementSet {
        let mut s = self.trivial_subgroup();
        for g in gens {
            if !s.contains(g) {
                s = self.join_cyclic(&s, g);
            }
        }
        s
    }

    /// `s + ⟨x⟩` for a subgroup `s`.
    fn join_cyclic(&self, s: &ElementSet, x: usize) -> ElementSet {
        let mut multiples = vec![0usize];
        let mut y = x;
        while y != 0 {
            multiples.push(y);
            y = self.add(y, x);
        }
        let mut out = ElementSet::empty(self.order);
        for a in s.iter() {
            for &m in &multiples {
                out.insert(self.add(a, m));
            }
        }
        out
    }

    /// Every subgroup, sorted by size and then bit pattern.
    pub fn subgroups(&self) -> Vec<ElementSet> {
        let trivial = self.trivial_subgroup();
        let mut seen: HashSet<ElementSet> = HashSet::from([trivial.clone()]);
        let mut queue = vec![trivial];
        let mut next = 0;
        while next < queue.len() {
            let s = queue[next].clone();
            next += 1;
            // s + ⟨x⟩ depends only on the coset x + s.
            let mut covered = s.clone();
            for x in 0..self.order {
                if covered.contains(x) {
                    continue;
                }
                for a in s.iter() {
                    covered.insert(self.add(a, x));
                }
                let t = self.join_cyclic(&s, x);
                if seen.insert(t.clone()) {
                    queue.push(t);
                }
            }
        }
        queue.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        queue
    }

    /// Subgroups together with, for every subgroup `H`, the indices of the
    /// complements `K` with `H ∩ K = 0` and `|H|·|K| = |G|` (hence
    /// `H ⊕ K = G`). Each such pair is the image and kernel of exactly one
    /// idempotent endomorphism.
    pub fn lattice(&self) -> SubgroupLattice {
        let subgroups = self.subgroups();
        let mut by_size: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (i, s) in subgroups.iter().enumerate() {
            by_size.entry(s.len()).or_default().push(i);
        }
        let complements = subgroups
            .iter()
            .map(|h| {
                by_size
                    .get(&(self.order / h.len()))
                    .map(|ks| {
                        ks.iter()
                            .copied()
                            .filter(|&k| h.intersection_len(&subgroups[k]) == 1)
                            .collect()
                    })
                    .unwrap_or_default()
            })
            .collect();
        SubgroupLattice {
            subgroups,
            complements,
        }
    }

    /// Isomorphism class of a subgroup read off from element orders: for each
    /// prime `p`, `log_p |{x : p^k x = 0}|` counts the cyclic factors of
    /// exponent at least 1, 2, …, which pins down the multiplicities.
    pub fn classify(&self, h: &ElementSet) -> AbelianGroup {
        let primes: Vec<u64> = {
            let mut ps: Vec<u64> = self.group.torsion().keys().map(PrimePower::prime).collect();
            ps.dedup();
            ps
        };
        let mut torsion = Vec::new();
        for p in primes {
            // ranks[k] = #{factors with exponent ≥ k + 1}
            let mut ranks = Vec::new();
            let mut prev_log = 0u32;
            let mut pk = 1u64;
            loop {
                pk *= p;
                let killed = h
                    .iter()
                    .filter(|&x| pk.is_multiple_of(self.element_order[x]))
                    .count() as u64;
                let log = ilog_exact(killed, p);
                if log == prev_log {
                    break;
                }
                ranks.push(log - prev_log);
                prev_log = log;
            }
            for (k, &r) in ranks.iter().enumerate() {
                let next = ranks.get(k + 1).copied().unwrap_or(0);
                if r > next {
                    let pp = PrimePower::new(p, k as u32 + 1).expect("divides group order");
                    torsion.push((pp, (r - next) as u64));
                }
            }
        }
        AbelianGroup::from_parts(FreeRank::Finite(0), torsion)
    }
}

fn ilog_exact(mut n: u64, p: u64) -> u32 {
    let mut k = 0;
    while n > 1 {
        debug_assert_eq!(n % p, 0, "p-subgroup size must be a power of p");
        n /= p;
        k += 1;
    }
    k
}
