use capax::idempotents::{bound_report, count_idempotent_endos, WitnessFamily};
use capax::spaces::CapacityResult;
use capax::summands::{groups_up_to, oracle_report, OracleConfig};
use capax::{AbelianGroup, Cardinal};

#[test]
fn idempotents_bound_classes_and_capacity_up_to_order_64() {
    let cfg = OracleConfig::default();
    for g in groups_up_to(64) {
        let count = count_idempotent_endos(&g, cfg).unwrap();
        let Cardinal::Finite(count) = count else {
            panic!("{g} is finite but has infinitely many idempotents");
        };
        let classes = oracle_report(&g, cfg).unwrap().class_count();
        assert!(count >= classes.into(), "{g}");
        let r = bound_report(&g, cfg).unwrap();
        assert_eq!(r.bound_holds(), Some(true), "{g}");
        let CapacityResult::Finite(c) = r.capacity_of_em else {
            panic!("K({g}, 1) should have finite capacity");
        };
        assert!(c <= count, "{g}");
    }
}

#[test]
fn free_groups_of_rank_two_and_up_have_infinitely_many() {
    for r in 2..=5 {
        let g = AbelianGroup::free(r);
        let report = bound_report(&g, OracleConfig::default()).unwrap();
        assert_eq!(report.idempotent_count, Cardinal::Infinite);
        assert_eq!(
            report.capacity_of_em,
            CapacityResult::Finite((r + 1).into())
        );
        let w = report.witness.expect("witness family");
        assert_eq!(w, WitnessFamily { rank: r });
        assert!(w.verify(-10..=10));
    }
}

#[test]
fn witness_members_are_pairwise_distinct() {
    let w = WitnessFamily { rank: 2 };
    let members: Vec<_> = (-10..=10).map(|n| w.member(n)).collect();
    for (i, a) in members.iter().enumerate() {
        for b in &members[i + 1..] {
            assert_ne!(a, b);
        }
    }
}
