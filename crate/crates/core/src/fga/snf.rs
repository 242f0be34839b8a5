//! Smith normal form over arbitrary-precision integers.
//!
//! For an `m × n` input `a` we produce unimodular `u` (`m × m`) and `v`
//! (`n × n`) with `u · a · v = d`, where `d` is diagonal, its entries are
//! non-negative, each divides the next, and zeros come last.
//!
//! Pivoting always picks the nonzero entry of smallest absolute value in the
//! remaining block (ties broken by lowest row, then lowest column), clears its
//! column with row operations, then its row with column operations, and
//! repeats until the pivot divides the whole remaining block. The output is
//! therefore a deterministic function of the input.

use std::fmt;
use std::ops::{Index, IndexMut, Mul};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense row-major integer matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    /// Builds a matrix from rows; all rows must have length `cols`.
    pub fn from_rows<T: Into<BigInt> + Clone>(cols: usize, rows: &[Vec<T>]) -> Option<Self> {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for row in rows {
            if row.len() != cols {
                return None;
            }
            data.extend(row.iter().cloned().map(Into::into));
        }
        Some(IntMatrix {
            rows: rows.len(),
            cols,
            data,
        })
    }

    pub fn diagonal<T: Into<BigInt> + Clone>(rows: usize, cols: usize, diag: &[T]) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (i, x) in diag.iter().enumerate().take(rows.min(cols)) {
            m[(i, i)] = x.clone().into();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    /// Diagonal entries `d[0][0], d[1][1], …` up to `min(rows, cols)`.
    pub fn diagonal_entries(&self) -> Vec<BigInt> {
        (0..self.rows.min(self.cols))
            .map(|i| self[(i, i)].clone())
            .collect()
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[target] += factor * row[source]`
    fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for j in 0..self.cols {
            let delta = factor * &self[(source, j)];
            self[(target, j)] += delta;
        }
    }

    /// `col[target] += factor * col[source]`
    fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        for i in 0..self.rows {
            let delta = factor * &self[(i, source)];
            self[(i, target)] += delta;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for j in 0..self.cols {
            let x = std::mem::take(&mut self[(i, j)]);
            self[(i, j)] = -x;
        }
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;

    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;

    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in matrix product");
        let mut out = IntMatrix::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    out[(i, j)] += a * &rhs[(k, j)];
                }
            }
        }
        out
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<Vec<String>> = (0..self.rows)
            .map(|i| self.row(i).iter().map(ToString::to_string).collect())
            .collect();
        write!(f, "{rows:?}")
    }
}

/// Witnessed Smith normal form: `u · a · v = d`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    /// Nonzero diagonal entries followed by the zero ones, as a sequence of length `min(m, n)`.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        self.d.diagonal_entries()
    }
}

pub fn smith_normal_form(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.rows(), a.cols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);

    for t in 0..m.min(n) {
        loop {
            let Some((pi, pj)) = smallest_pivot(&d, t) else {
                return SnfResult { d, u, v };
            };
            d.swap_rows(t, pi);
            u.swap_rows(t, pi);
            d.swap_cols(t, pj);
            v.swap_cols(t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = -(&d[(i, t)] / &d[(t, t)]);
                d.add_row_multiple(i, t, &q);
                u.add_row_multiple(i, t, &q);
                clean &= d[(i, t)].is_zero();
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = -(&d[(t, j)] / &d[(t, t)]);
                d.add_col_multiple(j, t, &q);
                v.add_col_multiple(j, t, &q);
                clean &= d[(t, j)].is_zero();
            }
            if !clean {
                continue;
            }

            // Pivot row and column are clear; enforce divisibility on the rest.
            match first_non_multiple(&d, t) {
                Some(i) => {
                    let one = BigInt::one();
                    d.add_row_multiple(t, i, &one);
                    u.add_row_multiple(t, i, &one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            d.negate_row(t);
            u.negate_row(t);
        }
    }
    SnfResult { d, u, v }
}

fn smallest_pivot(d: &IntMatrix, t: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for i in t..d.rows() {
        for j in t..d.cols() {
            let x = &d[(i, j)];
            if x.is_zero() {
                continue;
            }
            let better = match best {
                None => true,
                Some(b) => x.magnitude() < d[b].magnitude(),
            };
            if better {
                best = Some((i, j));
            }
        }
    }
    best
}

/// First row (below `t`) holding an entry not divisible by the pivot `d[t][t]`.
fn first_non_multiple(d: &IntMatrix, t: usize) -> Option<usize> {
    let pivot = &d[(t, t)];
    (t + 1..d.rows()).find(|&i| (t + 1..d.cols()).any(|j| !d[(i, j)].is_multiple_of(pivot)))
}
