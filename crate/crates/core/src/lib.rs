//! Exact Schubert calculus on Grassmannians.
//!
//! The crate provides partition combinatorics, the Littlewood–Richardson
//! ring of `G(k,n)`, Künneth products of Grassmannians, the class maps of
//! the cone / bundle / face constructions, stabilization of realizability
//! sets across ambient spaces, a realizability oracle for the classified
//! families, and Hodge-index obstruction search. All arithmetic is exact.

pub mod classification;
pub mod constructions;
pub mod error;
pub mod kunneth;
pub mod obstructions;
pub mod partitions;
pub mod schubert;
pub mod stability;
pub mod text;

pub use error::Error;
pub use kunneth::{ProductClass, ProductSpec};
pub use partitions::{GrassmannianSpec, Partition};
pub use schubert::{BasisConvention, CohomologyClass};

pub use classification::{realizability, realizability_searched, Ring, Status, Verdict};
pub use obstructions::{search_obstruction, ObstructionWitness, SearchBudget};
