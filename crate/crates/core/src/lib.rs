//! Exact q-series arithmetic for the Monster module viewed as a module over
//! the Virasoro algebra at central charge 24.
//!
//! - [`series`]: truncated series on the (1/24)·Z exponent lattice, partition
//!   numbers, eta, Eisenstein series, Δ, j and J.
//! - [`virasoro`]: Verma and irreducible characters at c = 24 and the integer
//!   analysis of Verma module embeddings.
//! - [`decomp`]: singular-vector generating series per Monster character,
//!   their multiplicities, McKay–Thompson prefixes and corpus verification.
//! - [`corpus`]: CSV fixtures and report emission.
//! - [`cli`]: the `moonshine` command-line front end.

pub mod cli;
pub mod corpus;
pub mod decomp;
pub mod series;
pub mod virasoro;

pub use series::{GradedSeries, PartitionTable, SeriesError};
