//! Endomorphisms of finite abelian groups as integer matrices.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::finite::FiniteGroup;
use crate::error::{Error, Result};
use crate::fga::{group_from_relations, smith_normal_form, AbelianGroup, IntMatrix};

/// Endomorphism of `Z_{d₁} ⊕ … ⊕ Z_{d_r}`. Column `j` holds the image of the
/// `j`-th generator; entry `(i, j)` lies in `Hom(Z_{d_j}, Z_{d_i})`, so it is
/// a multiple of `dᵢ / gcd(dᵢ, d_j)` reduced modulo `dᵢ`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EndoMatrix {
    moduli: Vec<u64>,
    entries: Vec<u64>,
}

impl EndoMatrix {
    /// Validates and reduces `rows` against the cyclic moduli of a group.
    pub fn new(moduli: &[u64], rows: &[Vec<i64>]) -> Result<Self> {
        let r = moduli.len();
        if rows.len() != r || rows.iter().any(|row| row.len() != r) {
            return Err(Error::InvalidEndomorphism(format!(
                "expected a {r}x{r} matrix"
            )));
        }
        let mut entries = Vec::with_capacity(r * r);
        for (i, row) in rows.iter().enumerate() {
            for (j, &x) in row.iter().enumerate() {
                let di = moduli[i];
                let step = di / di.gcd(&moduli[j]);
                let x = x.rem_euclid(di as i64) as u64;
                if !x.is_multiple_of(step) {
                    return Err(Error::InvalidEndomorphism(format!(
                        "entry ({i}, {j}) = {x} does not define a map Z_{} -> Z_{di}",
                        moduli[j]
                    )));
                }
                entries.push(x);
            }
        }
        Ok(EndoMatrix {
            moduli: moduli.to_vec(),
            entries,
        })
    }

    pub fn identity(moduli: &[u64]) -> Self {
        let r = moduli.len();
        let mut entries = vec![0; r * r];
        for i in 0..r {
            entries[i * r + i] = 1 % moduli[i];
        }
        EndoMatrix {
            moduli: moduli.to_vec(),
            entries,
        }
    }

    pub fn zero(moduli: &[u64]) -> Self {
        EndoMatrix {
            moduli: moduli.to_vec(),
            entries: vec![0; moduli.len() * moduli.len()],
        }
    }

    pub fn moduli(&self) -> &[u64] {
        &self.moduli
    }

    pub fn dim(&self) -> usize {
        self.moduli.len()
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.dim() + j]
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &EndoMatrix) -> EndoMatrix {
        assert_eq!(
            self.moduli, other.moduli,
            "endomorphisms of different groups"
        );
        let r = self.dim();
        let mut entries = vec![0; r * r];
        for i in 0..r {
            let d = self.moduli[i] as u128;
            for j in 0..r {
                let mut acc = 0u128;
                for k in 0..r {
                    acc = (acc + self.get(i, k) as u128 * other.get(k, j) as u128) % d;
                }
                entries[i * r + j] = acc as u64;
            }
        }
        EndoMatrix {
            moduli: self.moduli.clone(),
            entries,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        &self.compose(self) == self
    }

    /// Image of the coordinate vector `x`.
    pub fn apply(&self, x: &[u64]) -> Vec<u64> {
        (0..self.dim())
            .map(|i| {
                let d = self.moduli[i] as u128;
                (0..self.dim()).fold(0u128, |acc, k| {
                    (acc + self.get(i, k) as u128 * x[k] as u128) % d
                }) as u64
            })
            .collect()
    }

    fn column(&self, j: usize) -> Vec<u64> {
        (0..self.dim()).map(|i| self.get(i, j)).collect()
    }
}

impl fmt::Debug for EndoMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<&[u64]> = self.entries.chunks(self.dim().max(1)).collect();
        write!(f, "EndoMatrix{:?} over {:?}", rows, self.moduli)
    }
}

/// `|End(G)| = ∏ gcd(dᵢ, d_j)`.
pub fn endomorphism_count(moduli: &[u64]) -> BigUint {
    let mut n = BigUint::from(1u32);
    for &a in moduli {
        for &b in moduli {
            n *= a.gcd(&b);
        }
    }
    n
}

/// Visits every endomorphism of the group with the given moduli.
pub fn for_each_endomorphism(moduli: &[u64], mut visit: impl FnMut(&EndoMatrix)) {
    let r = moduli.len();
    let steps: Vec<u64> = (0..r * r)
        .map(|e| {
            let (i, j) = (e / r, e % r);
            moduli[i] / moduli[i].gcd(&moduli[j])
        })
        .collect();
    let mut m = EndoMatrix::zero(moduli);
    loop {
        visit(&m);
        let mut e = 0;
        loop {
            if e == r * r {
                return;
            }
            let d = moduli[e / r];
            m.entries[e] += steps[e];
            if m.entries[e] < d {
                break;
            }
            m.entries[e] = 0;
            e += 1;
        }
    }
}

/// Canonical form of the image of `m` in the finite group `g`.
///
/// The image is `L / D·Zʳ`, where `L` is the lattice spanned by the columns
/// of `[C | D]` (`C` the matrix, `D = diag(dᵢ)`). From `u·[C | D]·v = [S | 0]`
/// we get `L = u⁻¹·S·Zʳ`, so the image is presented by the relation matrix
/// `S⁻¹·u·D`, which is integral.
pub fn image_of_endomorphism(g: &AbelianGroup, m: &EndoMatrix) -> Result<AbelianGroup> {
    if !g.is_finite() {
        return Err(Error::Unsupported(format!("{g} is not a finite group")));
    }
    let moduli = g.cyclic_orders();
    if moduli != m.moduli {
        return Err(Error::InvalidEndomorphism(format!(
            "matrix is over moduli {:?}, but {g} has moduli {moduli:?}",
            m.moduli
        )));
    }
    let r = moduli.len();
    let mut gens = IntMatrix::zeros(r, 2 * r);
    for i in 0..r {
        for j in 0..r {
            gens[(i, j)] = BigInt::from(m.get(i, j));
        }
        gens[(i, r + i)] = BigInt::from(moduli[i]);
    }
    let snf = smith_normal_form(&gens);
    let s = snf.invariant_factors();
    let mut relations = IntMatrix::zeros(r, r);
    for j in 0..r {
        for i in 0..r {
            let num = &snf.u[(i, j)] * BigInt::from(moduli[j]);
            let (q, rem) = num.div_rem(&s[i]);
            if !rem.is_zero() {
                return Err(Error::Inconsistent(
                    "image lattice does not contain D·Z^r".into(),
                ));
            }
            // row j of the presentation = column j of S⁻¹·u·D
            relations[(j, i)] = q;
        }
    }
    group_from_relations(&relations)
}

/// Image computed from elements: the span of the column images.
pub(crate) fn image_elements(fg: &FiniteGroup, m: &EndoMatrix) -> super::finite::ElementSet {
    fg.span((0..m.dim()).map(|j| fg.index(&m.column(j))))
}

/// Projection onto `h` along `k` as a matrix, for complementary subgroups.
pub(crate) fn projection(
    fg: &FiniteGroup,
    h: &super::finite::ElementSet,
    k: &super::finite::ElementSet,
) -> Result<EndoMatrix> {
    let r = fg.moduli().len();
    let mut rows = vec![vec![0i64; r]; r];
    for j in 0..r {
        let e = fg.basis_element(j);
        let part = h
            .iter()
            .find(|&x| k.contains(fg.add(e, fg.neg(x))))
            .ok_or_else(|| Error::Inconsistent("subgroups are not complementary".into()))?;
        for (row, c) in rows.iter_mut().zip(fg.coords(part)) {
            row[j] = c.to_i64().expect("coordinate below modulus");
        }
    }
    EndoMatrix::new(fg.moduli(), &rows)
}
