//! Finite loops, loop near-rings and finite rings as executable structures.
//!
//! Everything is table-driven over the carrier `0..n` with `0` as the
//! additive zero. The crate decides locality of loop near-rings, computes
//! Jacobson radicals, lifts idempotents and decomposes the regular module of
//! a finite ring into indecomposable summands, with independent brute-force
//! cross-checks built into the procedures.

pub mod axioms;
pub mod bounds;
pub mod closure;
pub mod decomp;
pub mod error;
pub mod format;
pub mod generators;
pub mod homs;
pub mod loops;
pub mod nearrings;
pub mod report;
pub mod rings;
pub mod subset;
pub mod table;

pub use bounds::Bounds;
pub use decomp::{CornerRing, IdempotentFamily, KsReport};
pub use error::{Error, Result, ValidationError};
pub use generators::{CorpusSpec, Structure};
pub use homs::{LnrHom, TransferReport};
pub use loops::{CayleyLoop, LoopHom};
pub use nearrings::{LocalityReport, LoopNearRing, Units};
pub use rings::{FiniteRing, TwoSidedIdeal};
pub use subset::ElementSubset;
pub use table::Table;
