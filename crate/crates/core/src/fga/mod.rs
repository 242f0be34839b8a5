//! Finitely generated abelian groups.

mod group;
mod literal;
mod primes;
mod snf;

pub(crate) use group::group_from_relations;
pub use group::{
    group_from_presentation, is_isomorphic, primary_decomposition, AbelianGroup, FreeRank,
    PrimePower, RelationPresentation, Torsion,
};
pub use literal::parse_group;
pub(crate) use literal::parse_group_at;
pub use primes::{factorize, is_prime};
pub use snf::{smith_normal_form, IntMatrix, SnfResult};
