use std::fmt;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use super::ast::SpaceExpr;
use super::normal::{normalize, DegreeMap, NormalForm, UnknownReason};
use crate::cardinal::Cardinal;
use crate::error::{Error, Result};
use crate::fga::{AbelianGroup, FreeRank};
use crate::summands::{count_summands, summand_classes, ENUMERATION_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CapacityResult {
    Finite(BigUint),
    Infinite,
    Unknown {
        reason: UnknownReason,
        detail: String,
    },
}

impl CapacityResult {
    pub fn finite_value(&self) -> Option<&BigUint> {
        match self {
            CapacityResult::Finite(n) => Some(n),
            _ => None,
        }
    }

    pub fn to_u64(&self) -> Option<u64> {
        self.finite_value().and_then(ToPrimitive::to_u64)
    }
}

impl fmt::Display for CapacityResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CapacityResult::Finite(n) => write!(f, "{n}"),
            CapacityResult::Infinite => f.write_str("inf"),
            CapacityResult::Unknown { reason, detail } => write!(f, "unknown ({reason}): {detail}"),
        }
    }
}

impl From<Cardinal> for CapacityResult {
    fn from(c: Cardinal) -> Self {
        match c {
            Cardinal::Finite(n) => CapacityResult::Finite(n),
            Cardinal::Infinite => CapacityResult::Infinite,
        }
    }
}

/// Number of homotopy types dominated by the space.
///
/// A Moore wedge or Eilenberg-MacLane product with distinct degrees has
/// capacity equal to the product over degrees of the number of direct
/// summands of each group, provided the groups are Hopfian; with a single
/// degree no Hopfian hypothesis is needed. A wedge of `k` circles has
/// capacity `k + 1`.
pub fn capacity(e: &SpaceExpr) -> CapacityResult {
    capacity_of_form(&normalize(e))
}

pub fn capacity_of_form(form: &NormalForm) -> CapacityResult {
    match form {
        NormalForm::Point => CapacityResult::Finite(BigUint::from(1u32)),
        NormalForm::CircleWedge(k) => CapacityResult::Finite(BigUint::from(*k) + 1u32),
        NormalForm::MooreWedge(m) | NormalForm::EmProduct(m) => {
            if m.len() > 1 && m.values().any(|g| !g.is_hopfian()) {
                return CapacityResult::Unknown {
                    reason: UnknownReason::NonHopfian,
                    detail: "the product formula needs Hopfian groups in every degree".into(),
                };
            }
            m.values()
                .map(count_summands)
                .fold(Cardinal::one(), |acc, c| acc.mul(&c))
                .into()
        }
        NormalForm::Unclassified { reason, detail } => CapacityResult::Unknown {
            reason: *reason,
            detail: detail.clone(),
        },
    }
}

/// One representative of every homotopy type dominated by the space, with
/// the lowest degree varying fastest. The first entry is always the point
/// and the last is the space itself.
pub fn dominated_types(e: &SpaceExpr) -> Result<Vec<SpaceExpr>> {
    let form = normalize(e);
    let count = match capacity_of_form(&form) {
        CapacityResult::Finite(n) => n,
        other => {
            return Err(Error::Unsupported(format!(
                "dominated types need a finite capacity, got {other}"
            )))
        }
    };
    if count > BigUint::from(ENUMERATION_LIMIT) {
        return Err(Error::TooMany {
            what: "dominated type list",
            count: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    match form {
        NormalForm::Point => Ok(vec![SpaceExpr::Point]),
        NormalForm::CircleWedge(k) => Ok((0..=k)
            .map(|j| SpaceExpr::wedge_of(vec![SpaceExpr::Sphere(1); j as usize]))
            .collect()),
        NormalForm::MooreWedge(m) => Ok(choices(&m)?
            .into_iter()
            .map(|pick| {
                SpaceExpr::wedge_of(pick.into_iter().map(|(n, g)| moore_atom(g, n)).collect())
            })
            .collect()),
        NormalForm::EmProduct(m) => Ok(choices(&m)?
            .into_iter()
            .map(|pick| {
                SpaceExpr::product_of(pick.into_iter().map(|(n, g)| em_atom(g, n)).collect())
            })
            .collect()),
        NormalForm::Unclassified { .. } => unreachable!("capacity was finite"),
    }
}

/// Cartesian product of summand choices per degree; trivial picks omitted.
fn choices(m: &DegreeMap) -> Result<Vec<Vec<(u32, AbelianGroup)>>> {
    let per_degree: Vec<(u32, Vec<AbelianGroup>)> = m
        .iter()
        .map(|(&n, g)| Ok((n, summand_classes(g)?)))
        .collect::<Result<_>>()?;
    let mut out = Vec::new();
    let mut idx = vec![0usize; per_degree.len()];
    loop {
        out.push(
            per_degree
                .iter()
                .zip(&idx)
                .filter(|((_, opts), &i)| !opts[i].is_trivial())
                .map(|((n, opts), &i)| (*n, opts[i].clone()))
                .collect(),
        );
        let mut d = 0;
        loop {
            if d == idx.len() {
                return Ok(out);
            }
            idx[d] += 1;
            if idx[d] < per_degree[d].1.len() {
                break;
            }
            idx[d] = 0;
            d += 1;
        }
    }
}

fn moore_atom(group: AbelianGroup, degree: u32) -> SpaceExpr {
    if group == AbelianGroup::free(1) {
        SpaceExpr::Sphere(degree)
    } else {
        SpaceExpr::Moore { group, degree }
    }
}

fn em_atom(group: AbelianGroup, degree: u32) -> SpaceExpr {
    match (degree, group.free_rank()) {
        (1, Some(FreeRank::Finite(1))) if group.torsion().is_empty() => SpaceExpr::Sphere(1),
        (1, Some(FreeRank::Finite(k))) if group.torsion().is_empty() && k <= u32::MAX as u64 => {
            SpaceExpr::Torus(k as u32)
        }
        _ => SpaceExpr::Em { group, degree },
    }
}

/// Reduced integral homology `H̃ᵢ` for `i ≥ 1`.
///
/// Supported for wedges of Moore spaces (one nonzero group per degree) and
/// for wedges of circles.
pub fn homology(e: &SpaceExpr, i: u32) -> Result<AbelianGroup> {
    if i == 0 {
        return Err(Error::InvalidInput(
            "reduced homology is tabulated from degree 1".into(),
        ));
    }
    let form = normalize(e);
    let circles = match &form {
        NormalForm::CircleWedge(k) => Some(*k),
        NormalForm::EmProduct(m) if m.len() == 1 && m.get(&1) == Some(&AbelianGroup::free(1)) => {
            Some(1)
        }
        _ => None,
    };
    if let Some(k) = circles {
        return Ok(if i == 1 {
            AbelianGroup::free(k)
        } else {
            AbelianGroup::trivial()
        });
    }
    match form {
        NormalForm::Point => Ok(AbelianGroup::trivial()),
        NormalForm::MooreWedge(m) => Ok(m.get(&i).cloned().unwrap_or_else(AbelianGroup::trivial)),
        NormalForm::EmProduct(_) => Err(Error::Unsupported(
            "homology of Eilenberg-MacLane spaces is not computed".into(),
        )),
        NormalForm::Unclassified { reason, .. } => {
            Err(Error::Unsupported(format!("no normal form ({reason})")))
        }
        NormalForm::CircleWedge(_) => unreachable!(),
    }
}

/// Homotopy group `πᵢ` for `i ≥ 1` of a product of Eilenberg-MacLane spaces.
pub fn homotopy_group(e: &SpaceExpr, i: u32) -> Result<AbelianGroup> {
    if i == 0 {
        return Err(Error::InvalidInput(
            "homotopy groups start at degree 1".into(),
        ));
    }
    match normalize(e) {
        NormalForm::Point => Ok(AbelianGroup::trivial()),
        NormalForm::EmProduct(m) => Ok(m.get(&i).cloned().unwrap_or_else(AbelianGroup::trivial)),
        NormalForm::MooreWedge(_) => Err(Error::Unsupported(
            "homotopy groups of Moore spaces are not computed".into(),
        )),
        NormalForm::CircleWedge(_) => Err(Error::Unsupported(
            "the fundamental group of a wedge of circles is free non-abelian".into(),
        )),
        NormalForm::Unclassified { reason, .. } => {
            Err(Error::Unsupported(format!("no normal form ({reason})")))
        }
    }
}

/// Rewrites `M(A, n)` as `Σ^{n-1}(P_{q₁} v … v P_{q_r})`, one `P_q` per
/// primary cyclic factor and one `P_0` (the circle) per free generator.
pub fn moore_pseudoprojective_form(m: &SpaceExpr) -> Result<SpaceExpr> {
    let (group, degree) = match m {
        SpaceExpr::Moore { group, degree } => (group.clone(), *degree),
        SpaceExpr::Sphere(n) if *n >= 2 => (AbelianGroup::free(1), *n),
        other => {
            return Err(Error::Unsupported(format!(
                "expected a Moore space M(A, n) or a sphere S^n with n >= 2, got {other}"
            )))
        }
    };
    let Some(FreeRank::Finite(rank)) = group.free_rank() else {
        return Err(Error::Unsupported(format!(
            "{group} is not finitely generated"
        )));
    };
    let count = rank.saturating_add(group.torsion().values().sum::<u64>());
    if count > ENUMERATION_LIMIT {
        return Err(Error::TooMany {
            what: "pseudo-projective wedge",
            count: count.to_string(),
            limit: ENUMERATION_LIMIT,
        });
    }
    let mut parts: Vec<SpaceExpr> = group
        .cyclic_orders()
        .into_iter()
        .map(SpaceExpr::PseudoProjective)
        .collect();
    parts.extend((0..rank).map(|_| SpaceExpr::PseudoProjective(0)));
    if parts.is_empty() {
        return Ok(SpaceExpr::Point);
    }
    Ok(SpaceExpr::wedge_of(parts).suspend(degree - 1))
}
