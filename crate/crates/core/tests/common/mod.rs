#![allow(dead_code)]

use capax::fga::IntMatrix;
use capax::spaces::SpaceExpr;
use capax::{AbelianGroup, FreeRank, PrimePower};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

/// Fixed-seed runner with no failure persistence, for counted sweeps.
pub fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

pub fn prime_power() -> impl Strategy<Value = PrimePower> {
    (prop::sample::select(vec![2u64, 3, 5, 7, 11]), 1u32..=3)
        .prop_map(|(p, e)| PrimePower::new(p, e).unwrap())
}

/// Finitely generated groups with small free rank and torsion.
pub fn fg_group() -> impl Strategy<Value = AbelianGroup> {
    (
        0u64..=2,
        prop::collection::vec((prime_power(), 1u64..=2), 0..=3),
    )
        .prop_map(|(r, t)| AbelianGroup::from_parts(FreeRank::Finite(r), t))
}

pub fn any_group() -> impl Strategy<Value = AbelianGroup> {
    prop_oneof![
        8 => fg_group(),
        1 => Just(AbelianGroup::rationals()),
        1 => fg_group().prop_map(|g| g.direct_sum(&AbelianGroup::free_omega()).unwrap()),
    ]
}

fn leaf() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        Just(SpaceExpr::Point),
        (1u32..=6).prop_map(SpaceExpr::Sphere),
        (1u32..=4).prop_map(SpaceExpr::Torus),
        (0u64..=12).prop_map(SpaceExpr::PseudoProjective),
        (any_group(), 2u32..=6).prop_map(|(group, degree)| SpaceExpr::Moore { group, degree }),
        (any_group(), 1u32..=5).prop_map(|(group, degree)| SpaceExpr::Em { group, degree }),
    ]
}

/// Arbitrary well-formed expressions, including ones without a normal form.
pub fn any_expr() -> impl Strategy<Value = SpaceExpr> {
    leaf().prop_recursive(3, 24, 4, |inner| {
        prop_oneof![
            (1u32..=3, inner.clone()).prop_map(|(t, e)| e.suspend(t)),
            prop::collection::vec(inner.clone(), 2..=4).prop_map(SpaceExpr::Wedge),
            prop::collection::vec(inner, 2..=3).prop_map(SpaceExpr::Product),
        ]
    })
}

fn moore_piece() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        (fg_group(), 2u32..=6).prop_map(|(group, degree)| SpaceExpr::Moore { group, degree }),
        (2u32..=6).prop_map(SpaceExpr::Sphere),
        (0u64..=12, 1u32..=4).prop_map(|(q, t)| SpaceExpr::PseudoProjective(q).suspend(t)),
        Just(SpaceExpr::Point),
    ]
}

fn em_piece() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        (fg_group(), 1u32..=4).prop_map(|(group, degree)| SpaceExpr::Em { group, degree }),
        (1u32..=3).prop_map(SpaceExpr::Torus),
        Just(SpaceExpr::Sphere(1)),
    ]
}

/// Expressions whose capacity is expected to be finite: Moore wedges,
/// Eilenberg-MacLane products and wedges of circles.
pub fn finite_capacity_expr() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        3 => prop::collection::vec(moore_piece(), 1..=4).prop_map(SpaceExpr::wedge_of),
        3 => (prop::collection::vec(em_piece(), 1..=3), prop::option::of(5u32..=6)).prop_map(
            |(mut parts, q)| {
                // Q has no room for a second summand in its degree.
                if let Some(degree) = q {
                    parts.push(SpaceExpr::Em { group: AbelianGroup::rationals(), degree });
                }
                SpaceExpr::product_of(parts)
            }
        ),
        1 => (1usize..=5).prop_map(|k| SpaceExpr::wedge_of(vec![SpaceExpr::Sphere(1); k])),
        1 => Just(SpaceExpr::Point),
    ]
}

/// `M(A, n)` with `A` finitely generated, or a sphere of dimension at least 2.
pub fn moore_atom() -> impl Strategy<Value = SpaceExpr> {
    prop_oneof![
        5 => (fg_group(), 2u32..=8).prop_map(|(group, degree)| SpaceExpr::Moore { group, degree }),
        1 => (2u32..=8).prop_map(SpaceExpr::Sphere),
    ]
}

pub fn small_matrix(max_dim: usize, bound: i64) -> impl Strategy<Value = IntMatrix> {
    (0..=max_dim, 0..=max_dim).prop_flat_map(move |(m, n)| {
        prop::collection::vec(prop::collection::vec(-bound..=bound, n), m)
            .prop_map(move |rows| IntMatrix::from_rows(n, &rows).unwrap())
    })
}

/// Fraction-free Gaussian elimination.
pub fn determinant(a: &IntMatrix) -> BigInt {
    let n = a.rows();
    assert_eq!(n, a.cols(), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let mut m = a.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[(k, k)].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[(i, k)].is_zero()) else {
                return BigInt::zero();
            };
            for j in 0..n {
                let t = m[(k, j)].clone();
                m[(k, j)] = m[(swap, j)].clone();
                m[(swap, j)] = t;
            }
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&m[(i, j)] * &m[(k, k)] - &m[(i, k)] * &m[(k, j)]) / &prev;
                m[(i, j)] = v;
            }
        }
        prev = m[(k, k)].clone();
    }
    sign * &m[(n - 1, n - 1)]
}

/// Every defining property of a Smith normal form of `a`.
pub fn check_snf(a: &IntMatrix) -> Result<(), String> {
    let r = capax::fga::smith_normal_form(a);
    if &(&r.u * a) * &r.v != r.d {
        return Err(format!("u*a*v != d for {a:?}"));
    }
    if !r.d.is_diagonal() {
        return Err(format!("d is not diagonal for {a:?}"));
    }
    for (name, m) in [("u", &r.u), ("v", &r.v)] {
        if determinant(m).abs() != BigInt::one() {
            return Err(format!("{name} is not unimodular for {a:?}"));
        }
    }
    let diag = r.d.diagonal_entries();
    if diag.iter().any(|x| x.is_negative()) {
        return Err(format!("negative diagonal entry for {a:?}"));
    }
    for w in diag.windows(2) {
        let ok = if w[0].is_zero() {
            w[1].is_zero()
        } else {
            (&w[1] % &w[0]).is_zero()
        };
        if !ok {
            return Err(format!("divisibility chain broken in {diag:?} for {a:?}"));
        }
    }
    Ok(())
}
