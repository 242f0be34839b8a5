//! Space expressions: parsing, normal forms and the derived invariants.

mod ast;
mod eval;
mod normal;
mod parser;

pub use ast::SpaceExpr;
pub use eval::{
    capacity, capacity_of_form, dominated_types, homology, homotopy_group,
    moore_pseudoprojective_form, CapacityResult,
};
pub use normal::{normalize, DegreeMap, NormalForm, UnknownReason};
pub use parser::parse;
