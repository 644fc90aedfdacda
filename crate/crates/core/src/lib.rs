//! preflab: a finite-model laboratory for preferential consequence.
//!
//! The crate implements, checks, and cross-verifies the algebraic theory of
//! preferential consequence over finite universes, where every claim is
//! decidable by brute force:
//!
//! - [`universe`]: finite universes, set families with closure flags, the
//!   least-definable-superset operator `hat`, smallness of subsets.
//! - [`logic`]: finite propositional languages, formulas, theories, and the
//!   definable families that connect syntax to the set-algebra layer.
//! - [`structures`]: preferential structures with copies, ranked and Booth
//!   structures, distance spaces, minimal choice `μ`, minimizing initial
//!   segments (MISE) and limit consequence.
//! - [`conditions`]: the postulate-checking engine for every named condition
//!   (cumulativity hierarchy, H-hulls, the `μτ` tree procedure, limit laws,
//!   Booth conditions, logical rules).
//! - [`represent`]: representation constructions turning a choice function
//!   that passes the right gate into a structure reproducing it, exactly or
//!   up to `hat`.
//! - [`gallery`]: generators for the worked counterexample instances.
//! - [`laws`]: exhaustive desk-scale sweeps of the fact suites.
//! - [`instance`] and [`cli`]: the JSON instance format and the command-line
//!   front end.
//!
//! See the `examples/` directory for one runnable walkthrough per capability.

pub mod cli;
pub mod conditions;
pub mod error;
pub mod gallery;
pub mod instance;
pub mod laws;
pub mod logic;
pub mod represent;
pub mod structures;
pub mod universe;

pub use error::{Error, Result};
