//! A workbench for synchronizing finite automata, built around the families
//! whose underlying digraphs have exactly two distinct cycle lengths.
//!
//! The crate provides:
//!
//! - core types for complete deterministic automata, bit-packed state sets,
//!   words with exponent shorthand, and digraphs ([`automaton`], [`word`],
//!   [`digraph`], JSON formats in [`json`]);
//! - an exact solver for synchronizability, reset thresholds, shortest
//!   reset words and reset targets, together with the coin-problem and
//!   two-cycle lower bounds ([`solver`], [`frobenius`]);
//! - constructors, closed-form thresholds and certificate words for the
//!   Wielandt-type and branch-coloring families ([`families`]);
//! - the row congruence, factor automata and isomorphism testing
//!   ([`quotient`]);
//! - primitivity, digraph exponents and coloring enumeration
//!   ([`primitive`], [`coloring`]);
//! - an exhaustive census of attainable thresholds for tiny state counts
//!   ([`explore`]).

pub mod automaton;
pub mod coloring;
pub mod digraph;
pub mod error;
pub mod explore;
pub mod families;
pub mod frobenius;
pub mod json;
pub mod primitive;
pub mod quotient;
pub mod solver;
pub mod word;

pub use automaton::{Dfa, StateSet};
pub use digraph::Digraph;
pub use error::{Error, Result};
pub use families::{DmVariant, FamilyParams, FormulaReport};
pub use quotient::Partition;
pub use solver::{LowerBoundHypothesis, ResetResult};
pub use word::Word;
