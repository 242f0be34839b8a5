//! Exact capacity calculator for Moore spaces, Eilenberg-MacLane spaces and
//! their wedges and products.
//!
//! The crate is layered bottom-up:
//!
//! * [`fga`]: finitely generated abelian groups in canonical primary form,
//!   built on an exact Smith normal form.
//! * [`summands`]: direct summands up to isomorphism, with a brute-force
//!   oracle built on idempotent endomorphisms of finite groups.
//! * [`spaces`]: space expressions, their normal forms and the invariants
//!   computed from them.
//! * [`idempotents`]: idempotent endomorphism counts compared with the
//!   capacity of `K(G, 1)`.

pub mod error;
pub mod fga;
pub mod idempotents;
pub mod spaces;
pub mod summands;

mod cardinal;
mod lex;

pub use cardinal::Cardinal;
pub use error::{Error, Result};
pub use fga::{AbelianGroup, FreeRank, PrimePower};
