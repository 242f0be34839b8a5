//! Normal forms of space expressions.
//!
//! Every supported expression is rewritten to a wedge of Moore spaces of
//! pairwise distinct degrees, a product of Eilenberg-MacLane spaces of
//! pairwise distinct degrees, a wedge of circles, or a point. Atoms of equal
//! degree are merged by direct sum of their groups, which is what makes the
//! degrees distinct. Anything else is reported as unclassified with a reason.

use std::collections::BTreeMap;
use std::fmt;

use super::ast::SpaceExpr;
use crate::fga::AbelianGroup;

/// Why an expression has no normal form (and therefore no known capacity).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum UnknownReason {
    /// A circle wedged with a simply connected Moore space, e.g. `S^1 v S^2`.
    OpenProblem,
    /// More than one degree carries a non-Hopfian group.
    NonHopfian,
    /// A combination outside Moore wedges and Eilenberg-MacLane products.
    UnsupportedMix,
    /// Merging Q with a nontrivial group of the same degree.
    QSum,
}

impl UnknownReason {
    pub fn code(self) -> &'static str {
        match self {
            UnknownReason::OpenProblem => "open-problem",
            UnknownReason::NonHopfian => "non-hopfian",
            UnknownReason::UnsupportedMix => "unsupported-mix",
            UnknownReason::QSum => "q-sum",
        }
    }
}

impl fmt::Display for UnknownReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

/// Degree-indexed groups; every entry is nontrivial and the map is nonempty.
pub type DegreeMap = BTreeMap<u32, AbelianGroup>;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum NormalForm {
    Point,
    /// `⋁ₙ M(Aₙ, n)` over distinct degrees `n ≥ 2`.
    MooreWedge(DegreeMap),
    /// `∏ₙ K(Gₙ, n)` over distinct degrees `n ≥ 1`.
    EmProduct(DegreeMap),
    /// Wedge of `k ≥ 2` circles. A single circle is `EmProduct{1: Z}`.
    CircleWedge(u64),
    Unclassified {
        reason: UnknownReason,
        detail: String,
    },
}

impl NormalForm {
    fn unclassified(reason: UnknownReason) -> Self {
        let detail = match reason {
            UnknownReason::OpenProblem => {
                "a circle wedged with a simply connected Moore space (as in S^1 v S^2) has no known capacity"
            }
            UnknownReason::NonHopfian => {
                "the product formula needs Hopfian groups in every degree"
            }
            UnknownReason::UnsupportedMix => {
                "expression is neither a wedge of Moore spaces nor a product of Eilenberg-MacLane spaces"
            }
            UnknownReason::QSum => "Q is only supported as a standalone group",
        };
        NormalForm::Unclassified {
            reason,
            detail: detail.to_string(),
        }
    }

    fn moore(degree: u32, group: AbelianGroup) -> Self {
        single(degree, group, NormalForm::MooreWedge)
    }

    fn em(degree: u32, group: AbelianGroup) -> Self {
        single(degree, group, NormalForm::EmProduct)
    }

    fn circles(k: u64) -> Self {
        match k {
            0 => NormalForm::Point,
            1 => NormalForm::em(1, AbelianGroup::free(1)),
            _ => NormalForm::CircleWedge(k),
        }
    }

    /// Number of circles if this is `S^1` or a wedge of circles.
    fn circle_count(&self) -> Option<u64> {
        match self {
            NormalForm::CircleWedge(k) => Some(*k),
            NormalForm::EmProduct(m) if is_single_circle(m) => Some(1),
            _ => None,
        }
    }
}

fn is_single_circle(m: &DegreeMap) -> bool {
    m.len() == 1 && m.get(&1) == Some(&AbelianGroup::free(1))
}

fn single(degree: u32, group: AbelianGroup, wrap: fn(DegreeMap) -> NormalForm) -> NormalForm {
    if group.is_trivial() {
        NormalForm::Point
    } else {
        wrap(DegreeMap::from([(degree, group)]))
    }
}

pub fn normalize(e: &SpaceExpr) -> NormalForm {
    match e {
        SpaceExpr::Point => NormalForm::Point,
        SpaceExpr::Sphere(1) => NormalForm::circles(1),
        SpaceExpr::Sphere(n) => NormalForm::moore(*n, AbelianGroup::free(1)),
        SpaceExpr::Moore { group, degree } => NormalForm::moore(*degree, group.clone()),
        SpaceExpr::Em { group, degree } => NormalForm::em(*degree, group.clone()),
        SpaceExpr::Torus(k) => NormalForm::em(1, AbelianGroup::free(u64::from(*k))),
        SpaceExpr::PseudoProjective(0) => NormalForm::circles(1),
        SpaceExpr::PseudoProjective(1) => NormalForm::Point,
        SpaceExpr::PseudoProjective(_) => NormalForm::unclassified(UnknownReason::UnsupportedMix),
        SpaceExpr::Suspension { times, inner } => suspend(inner, *times),
        SpaceExpr::Wedge(parts) => wedge(parts.iter().map(normalize).collect()),
        SpaceExpr::Product(parts) => product(parts.iter().map(normalize).collect()),
    }
}

/// `Σ^t e`. Suspension distributes over wedges and takes `P_q` to `M(Z_q, 2)`.
fn suspend(e: &SpaceExpr, t: u32) -> NormalForm {
    match e {
        SpaceExpr::PseudoProjective(q) => {
            let Some(degree) = t.checked_add(1) else {
                return NormalForm::unclassified(UnknownReason::UnsupportedMix);
            };
            match *q {
                0 => NormalForm::moore(degree, AbelianGroup::free(1)),
                q => NormalForm::moore(degree, AbelianGroup::cyclic(q).expect("q >= 1")),
            }
        }
        SpaceExpr::Suspension { times, inner } => match times.checked_add(t) {
            Some(total) => suspend(inner, total),
            None => NormalForm::unclassified(UnknownReason::UnsupportedMix),
        },
        SpaceExpr::Wedge(parts) => wedge(parts.iter().map(|p| suspend(p, t)).collect()),
        other => shift(normalize(other), t),
    }
}

fn shift(form: NormalForm, t: u32) -> NormalForm {
    if let Some(k) = form.circle_count() {
        return match t.checked_add(1) {
            Some(degree) => NormalForm::moore(degree, AbelianGroup::free(k)),
            None => NormalForm::unclassified(UnknownReason::UnsupportedMix),
        };
    }
    match form {
        NormalForm::MooreWedge(m) => {
            let mut out = DegreeMap::new();
            for (n, g) in m {
                match n.checked_add(t) {
                    Some(n) => out.insert(n, g),
                    None => return NormalForm::unclassified(UnknownReason::UnsupportedMix),
                };
            }
            NormalForm::MooreWedge(out)
        }
        NormalForm::EmProduct(_) => NormalForm::unclassified(UnknownReason::UnsupportedMix),
        other => other,
    }
}

fn merge(into: &mut DegreeMap, from: DegreeMap) -> Result<(), UnknownReason> {
    for (n, g) in from {
        let merged = match into.get(&n) {
            Some(h) => h.direct_sum(&g).map_err(|_| UnknownReason::QSum)?,
            None => g,
        };
        into.insert(n, merged);
    }
    Ok(())
}

/// Splits child forms into classified ones and the reasons of the rest;
/// points are dropped.
fn partition(forms: Vec<NormalForm>) -> (Vec<NormalForm>, Vec<UnknownReason>) {
    let mut ok = Vec::new();
    let mut reasons = Vec::new();
    for f in forms {
        match f {
            NormalForm::Point => {}
            NormalForm::Unclassified { reason, .. } => reasons.push(reason),
            other => ok.push(other),
        }
    }
    (ok, reasons)
}

/// The smallest reason wins, so the result does not depend on child order.
fn resolve(reasons: Vec<UnknownReason>, form: impl FnOnce() -> NormalForm) -> NormalForm {
    match reasons.into_iter().min() {
        Some(r) => NormalForm::unclassified(r),
        None => form(),
    }
}

fn wedge(forms: Vec<NormalForm>) -> NormalForm {
    let (mut forms, mut reasons) = partition(forms);
    if reasons.is_empty() && forms.len() <= 1 {
        return forms.pop().unwrap_or(NormalForm::Point);
    }
    let mut circles = 0u64;
    let mut moore = DegreeMap::new();
    let mut has_moore = false;
    for f in forms {
        if let Some(k) = f.circle_count() {
            circles += k;
            continue;
        }
        match f {
            NormalForm::MooreWedge(m) => {
                has_moore = true;
                if let Err(r) = merge(&mut moore, m) {
                    reasons.push(r);
                }
            }
            _ => reasons.push(UnknownReason::UnsupportedMix),
        }
    }
    if circles > 0 && has_moore {
        reasons.push(UnknownReason::OpenProblem);
    }
    resolve(reasons, || {
        if has_moore {
            NormalForm::MooreWedge(moore)
        } else {
            NormalForm::circles(circles)
        }
    })
}

fn product(forms: Vec<NormalForm>) -> NormalForm {
    let (mut forms, mut reasons) = partition(forms);
    if reasons.is_empty() && forms.len() <= 1 {
        return forms.pop().unwrap_or(NormalForm::Point);
    }
    let mut em = DegreeMap::new();
    for f in forms {
        match f {
            NormalForm::EmProduct(m) => {
                if let Err(r) = merge(&mut em, m) {
                    reasons.push(r);
                }
            }
            _ => reasons.push(UnknownReason::UnsupportedMix),
        }
    }
    resolve(reasons, || NormalForm::EmProduct(em))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fga::parse_group;
    use crate::spaces::parse;

    fn nf(s: &str) -> NormalForm {
        normalize(&parse(s).unwrap())
    }

    fn map(items: &[(u32, &str)]) -> DegreeMap {
        items
            .iter()
            .map(|&(n, g)| (n, parse_group(g).unwrap()))
            .collect()
    }

    fn reason(f: NormalForm) -> UnknownReason {
        match f {
            NormalForm::Unclassified { reason, .. } => reason,
            other => panic!("expected unclassified, got {other:?}"),
        }
    }

    #[test]
    fn same_degree_spheres_merge() {
        assert_eq!(nf("S^2 v S^2"), NormalForm::MooreWedge(map(&[(2, "Z^2")])));
    }

    #[test]
    fn torus_is_em() {
        assert_eq!(nf("T^2"), NormalForm::EmProduct(map(&[(1, "Z^2")])));
        assert_eq!(nf("S^1 x S^1"), nf("T^2"));
    }

    #[test]
    fn circle_with_sphere_is_open() {
        assert_eq!(reason(nf("S^1 v S^2")), UnknownReason::OpenProblem);
        assert_eq!(reason(nf("S^2 v S^1")), UnknownReason::OpenProblem);
        assert_eq!(reason(nf("P_0 v M(Z_3, 4)")), UnknownReason::OpenProblem);
    }

    #[test]
    fn circles() {
        assert_eq!(nf("S^1 v S^1 v S^1"), NormalForm::CircleWedge(3));
        assert_eq!(nf("S^1 v pt"), nf("S^1"));
        assert_eq!(nf("(S^1 v S^1) v P_0"), NormalForm::CircleWedge(3));
        assert_ne!(nf("S^1 v S^1"), nf("T^2"));
    }

    #[test]
    fn points_collapse() {
        assert_eq!(nf("pt"), NormalForm::Point);
        assert_eq!(nf("M(0, 3)"), NormalForm::Point);
        assert_eq!(nf("P_1"), NormalForm::Point);
        assert_eq!(nf("pt v pt x pt"), NormalForm::Point);
        assert_eq!(nf("susp^4(pt)"), NormalForm::Point);
    }

    #[test]
    fn suspensions() {
        assert_eq!(
            nf("susp^2(P_3)"),
            NormalForm::MooreWedge(map(&[(3, "Z_3")]))
        );
        assert_eq!(nf("susp(P_2 v P_3)"), nf("M(Z_6, 2)"));
        assert_eq!(nf("susp^1(susp^2(P_0))"), nf("S^4"));
        assert_eq!(nf("susp(S^1 v S^1)"), nf("S^2 v S^2"));
        assert_eq!(nf("susp^3(M(Z_2, 2) v S^5)"), nf("M(Z_2, 5) v S^8"));
        assert_eq!(reason(nf("susp(T^2)")), UnknownReason::UnsupportedMix);
    }

    #[test]
    fn unsupported_mixes() {
        assert_eq!(reason(nf("S^2 x S^3")), UnknownReason::UnsupportedMix);
        assert_eq!(reason(nf("T^2 v S^2")), UnknownReason::UnsupportedMix);
        assert_eq!(
            reason(nf("K(Z_2, 2) v K(Z_3, 3)")),
            UnknownReason::UnsupportedMix
        );
        assert_eq!(reason(nf("P_2")), UnknownReason::UnsupportedMix);
        assert_eq!(
            reason(nf("(S^1 v S^1) x S^1")),
            UnknownReason::UnsupportedMix
        );
    }

    #[test]
    fn q_sums() {
        assert_eq!(reason(nf("M(Q, 2) v S^2")), UnknownReason::QSum);
        assert_eq!(reason(nf("K(Q, 1) x S^1")), UnknownReason::QSum);
        assert_eq!(
            nf("M(Q, 2) v S^3"),
            NormalForm::MooreWedge(map(&[(2, "Q"), (3, "Z")]))
        );
    }

    #[test]
    fn em_products_merge() {
        assert_eq!(
            nf("K(Z_2, 2) x T^2 x K(Z_3, 2)"),
            NormalForm::EmProduct(map(&[(1, "Z^2"), (2, "Z_6")]))
        );
    }

    #[test]
    fn reasons_ignore_child_order() {
        assert_eq!(nf("S^2 v S^1"), nf("S^1 v S^2"));
        assert_eq!(nf("M(Q, 2) v S^2 v T^2"), nf("T^2 v S^2 v M(Q, 2)"));
        assert_eq!(nf("P_2 v S^1 v S^2"), nf("S^2 v S^1 v P_2"));
    }
}
