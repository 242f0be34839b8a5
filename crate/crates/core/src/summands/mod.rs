//! Direct summands of abelian groups up to isomorphism.

mod count;
mod endo;
mod finite;
mod oracle;
mod verify;

pub use count::{
    count_summands, enumerate_summands, summand_classes, SummandCount, ENUMERATION_LIMIT,
};
pub use endo::{endomorphism_count, for_each_endomorphism, image_of_endomorphism, EndoMatrix};
pub use finite::{ElementSet, FiniteGroup, SubgroupLattice, MAX_ORACLE_ORDER};
pub use oracle::{
    oracle_count_summands, oracle_report, sweep_report, OracleConfig, OracleReport,
    DEFAULT_ORACLE_CAP, SWEEP_LIMIT,
};
pub use verify::{groups_of_order, groups_up_to, partitions, verify_sweep, VerifyRow};
