//! Combinatorics of the theta correspondence on unipotent characters of
//! finite unitary dual pairs (U_n, U_n′).
//!
//! Partitions are the source of truth; β-sets, symbols and bipartitions are
//! derived views. Degrees are exact factored rational functions in q.

pub mod betasets;
pub mod correspondence;
pub mod error;
pub mod partitions;
pub mod qseries;
pub mod relations;
pub mod symbols;
pub mod table;
pub mod verify;

pub use betasets::BetaSet;
pub use error::{Error, Result};
pub use partitions::{Bipartition, Partition, TwoCore};
pub use qseries::FactoredQPoly;
pub use symbols::{Sector, Symbol};
