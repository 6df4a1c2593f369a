//! Error type shared by every operation in the crate.

/// Errors produced while constructing or analysing automata and digraphs.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// A word contains a letter index outside the automaton's alphabet.
    #[error("letter {letter} is out of range for alphabet of size {alphabet_size}")]
    InvalidLetter { letter: usize, alphabet_size: usize },

    /// A state set was applied to an automaton over a different universe.
    #[error("state set over {set_universe} states does not match automaton with {num_states} states")]
    UniverseMismatch {
        set_universe: usize,
        num_states: usize,
    },

    /// Malformed textual input (JSON automata/digraphs, word syntax).
    #[error("parse error: {0}")]
    Parse(String),

    /// The automaton admits no reset word.
    #[error("automaton is not synchronizing")]
    NotSynchronizing,

    /// A configurable feasibility cap (state count, cycle budget, coloring
    /// budget, isomorphism search size) was exceeded.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Arguments violate the operation's domain (non-coprime pair,
    /// out-of-range family parameters, non-primitive digraph, ...).
    #[error("domain error: {0}")]
    Domain(String),

    /// The structural hypotheses of a bound or collapse argument do not
    /// hold for the supplied automaton.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// A partition passed to `factor` is not compatible with the action.
    #[error("partition is not a congruence: {0}")]
    NotCongruence(String),

    /// A family constructor produced (or would produce) a degenerate
    /// instance and refused it.
    #[error("construction failed: {0}")]
    Construction(String),

    /// A self-check that should be unfalsifiable failed; signals a bug.
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
