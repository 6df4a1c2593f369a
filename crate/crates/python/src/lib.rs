//! Python bindings: automata, digraphs and the exact solver in-process.
//!
//! Usage from Python:
//!
//!     import synchro_py as sp
//!     a = sp.Automaton.wielandt(5, 5, 3)
//!     threshold, witness, targets = a.reset_threshold()

use std::collections::BTreeMap;
use std::str::FromStr;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use synchro_core::automaton::StateSet;
use synchro_core::error::Error;
use synchro_core::families::DmVariant;
use synchro_core::word::Word;
use synchro_core::{coloring, explore, families, frobenius, json, primitive, quotient, solver};

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Internal(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn parse_variant(variant: &str) -> PyResult<DmVariant> {
    match variant {
        "aa" => Ok(DmVariant::Aa),
        "ab" => Ok(DmVariant::Ab),
        _ => Err(PyValueError::new_err(format!(
            "unknown coloring variant {variant:?}, expected \"aa\" or \"ab\""
        ))),
    }
}

fn parse_word(text: &str) -> PyResult<Word> {
    Word::from_str(text).map_err(to_py)
}

/// A complete deterministic automaton over letters a, b, ...
#[pyclass(frozen)]
struct Automaton {
    inner: synchro_core::Dfa,
}

#[pymethods]
impl Automaton {
    /// Parses the JSON wire format
    /// `{"states": n, "alphabet": ["a","b"], "delta": [[..],..]}`.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Automaton {
            inner: json::dfa_from_json(text).map_err(to_py)?,
        })
    }

    /// Builds an automaton from a transition table `delta[state][letter]`.
    #[staticmethod]
    fn from_delta(delta: Vec<Vec<usize>>, alphabet_size: usize) -> PyResult<Self> {
        Ok(Automaton {
            inner: synchro_core::Dfa::new(alphabet_size, delta).map_err(to_py)?,
        })
    }

    /// The Wielandt-type automaton W(n, q, p).
    #[staticmethod]
    fn wielandt(n: usize, q: usize, p: usize) -> PyResult<Self> {
        Ok(Automaton {
            inner: families::build_wielandt(n, q, p).map_err(to_py)?,
        })
    }

    /// A branch coloring D^variant_lambda(q, p, k); variant is "aa" or "ab".
    #[staticmethod]
    #[pyo3(signature = (variant, q, p, k, lambda=0))]
    fn dm(variant: &str, q: usize, p: usize, k: usize, lambda: usize) -> PyResult<Self> {
        Ok(Automaton {
            inner: families::build_dm(parse_variant(variant)?, q, p, k, lambda).map_err(to_py)?,
        })
    }

    /// The classical cyclic series with threshold (n-1)^2.
    #[staticmethod]
    fn cerny(n: usize) -> PyResult<Self> {
        Ok(Automaton {
            inner: families::build_cerny(n).map_err(to_py)?,
        })
    }

    fn num_states(&self) -> usize {
        self.inner.num_states()
    }

    fn alphabet_size(&self) -> usize {
        self.inner.alphabet_size()
    }

    fn delta(&self) -> Vec<Vec<usize>> {
        (0..self.inner.num_states())
            .map(|s| self.inner.row(s).to_vec())
            .collect()
    }

    fn to_json(&self) -> String {
        json::dfa_to_json(&self.inner)
    }

    /// Image of a set of states under a word (exponent shorthand allowed).
    fn apply(&self, states: Vec<usize>, word: &str) -> PyResult<Vec<usize>> {
        let set = StateSet::from_states(self.inner.num_states(), states).map_err(to_py)?;
        let image = self.inner.apply(&set, &parse_word(word)?).map_err(to_py)?;
        Ok(image.iter().collect())
    }

    /// Runs a word from a single state.
    fn run(&self, state: usize, word: &str) -> PyResult<usize> {
        self.inner.run_state(state, &parse_word(word)?).map_err(to_py)
    }

    fn is_synchronizing(&self) -> bool {
        solver::is_synchronizing(&self.inner)
    }

    /// Exact reset threshold: returns (threshold, witness, targets).
    #[pyo3(signature = (cap=24))]
    fn reset_threshold(&self, cap: usize) -> PyResult<(usize, String, Vec<usize>)> {
        let result = solver::reset_threshold_with_cap(&self.inner, cap).map_err(to_py)?;
        Ok((
            result.threshold,
            result.witness.to_string(),
            result.targets.iter().collect(),
        ))
    }

    /// The state a reset word drives everything to, or None.
    fn check_reset_word(&self, word: &str) -> PyResult<Option<usize>> {
        solver::check_reset_word(&self.inner, &parse_word(word)?).map_err(to_py)
    }

    /// States reachable from `state` by words of exactly `length` letters.
    fn reach_layer(&self, state: usize, length: usize) -> PyResult<Vec<usize>> {
        Ok(solver::reach_layer(&self.inner, state, length)
            .map_err(to_py)?
            .iter()
            .collect())
    }

    /// Classes of the row congruence, sorted by minimal member.
    fn sigma_classes(&self) -> Vec<Vec<usize>> {
        quotient::sigma_congruence(&self.inner)
            .classes()
            .iter()
            .map(|c| c.iter().collect())
            .collect()
    }

    /// The factor automaton by the row congruence.
    fn sigma_factor(&self) -> PyResult<Self> {
        let part = quotient::sigma_congruence(&self.inner);
        Ok(Automaton {
            inner: quotient::factor(&self.inner, &part).map_err(to_py)?,
        })
    }

    #[pyo3(signature = (other, allow_letter_permutation=false, cap=16))]
    fn is_isomorphic(
        &self,
        other: &Automaton,
        allow_letter_permutation: bool,
        cap: usize,
    ) -> PyResult<bool> {
        quotient::is_isomorphic_with_cap(&self.inner, &other.inner, allow_letter_permutation, cap)
            .map_err(to_py)
    }

    fn underlying_digraph(&self) -> Digraph {
        Digraph {
            inner: self.inner.underlying_digraph(),
        }
    }

    /// Exponent of the underlying digraph, threshold, and the gap
    /// inequality rt > exp - n: returns (exponent, threshold, ok).
    #[pyo3(signature = (cap=24))]
    fn exponent_gap(&self, cap: usize) -> PyResult<(usize, usize, bool)> {
        let gap = primitive::exponent_gap_check_with_cap(&self.inner, cap).map_err(to_py)?;
        Ok((gap.exponent, gap.threshold, gap.ok))
    }

    fn __repr__(&self) -> String {
        format!(
            "Automaton(states={}, alphabet={})",
            self.inner.num_states(),
            self.inner.alphabet_size()
        )
    }

    fn __eq__(&self, other: &Automaton) -> bool {
        self.inner == other.inner
    }
}

/// A digraph given by its edge list; no parallel edges, loops allowed.
#[pyclass(frozen)]
struct Digraph {
    inner: synchro_core::Digraph,
}

#[pymethods]
impl Digraph {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(Digraph {
            inner: json::digraph_from_json(text).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_edges(vertices: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(Digraph {
            inner: synchro_core::Digraph::new(vertices, &edges).map_err(to_py)?,
        })
    }

    /// The branch digraph D_lambda(q, p, k).
    #[staticmethod]
    #[pyo3(signature = (q, p, k, lambda=0))]
    fn dm(q: usize, p: usize, k: usize, lambda: usize) -> PyResult<Self> {
        Ok(Digraph {
            inner: families::build_dm_digraph(q, p, k, lambda).map_err(to_py)?,
        })
    }

    fn num_vertices(&self) -> usize {
        self.inner.num_vertices()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn to_json(&self) -> String {
        json::digraph_to_json(&self.inner)
    }

    fn is_strongly_connected(&self) -> bool {
        self.inner.is_strongly_connected()
    }

    fn is_primitive(&self) -> bool {
        primitive::is_primitive(&self.inner)
    }

    fn exponent(&self) -> PyResult<usize> {
        primitive::exponent(&self.inner).map_err(to_py)
    }

    #[pyo3(signature = (budget=10_000))]
    fn simple_cycle_lengths(&self, budget: usize) -> PyResult<Vec<usize>> {
        self.inner
            .simple_cycle_lengths_with_budget(budget)
            .map_err(to_py)
    }

    /// All colorings up to isomorphism: list of (Automaton, synchronizing).
    #[pyo3(signature = (budget=10_000))]
    fn colorings(&self, budget: usize) -> PyResult<Vec<(Automaton, bool)>> {
        Ok(coloring::enumerate_colorings_with_budget(&self.inner, budget)
            .map_err(to_py)?
            .into_iter()
            .map(|c| (Automaton { inner: c.dfa }, c.synchronizing))
            .collect())
    }

    fn __repr__(&self) -> String {
        format!(
            "Digraph(vertices={}, edges={})",
            self.inner.num_vertices(),
            self.inner.num_edges()
        )
    }
}

/// Largest integer not expressible as a non-negative combination of two
/// coprime positive integers.
#[pyfunction]
fn frobenius_number(p: u64, q: u64) -> PyResult<i64> {
    frobenius::frobenius(p, q).map_err(to_py)
}

/// True iff m = a*p + b*q for non-negative integers a, b.
#[pyfunction]
fn representable(m: u64, p: u64, q: u64) -> PyResult<bool> {
    frobenius::representable(m, p, q).map_err(to_py)
}

/// Closed-form reset threshold of W(n, q, p).
#[pyfunction]
fn wielandt_rt_formula(n: usize, q: usize, p: usize) -> PyResult<usize> {
    families::wielandt_rt_formula(n, q, p).map_err(to_py)
}

/// Closed-form reset threshold of the branch coloring.
#[pyfunction]
#[pyo3(signature = (variant, q, p, k, lambda=0))]
fn dm_rt_formula(variant: &str, q: usize, p: usize, k: usize, lambda: usize) -> PyResult<usize> {
    families::dm_rt_formula(parse_variant(variant)?, q, p, k, lambda).map_err(to_py)
}

/// The closed-form shortest reset word for W(n, q, p).
#[pyfunction]
fn wielandt_witness(n: usize, q: usize, p: usize) -> PyResult<String> {
    Ok(families::wielandt_witness(n, q, p).map_err(to_py)?.to_string())
}

/// The closed-form shortest reset word for the unstretched branch coloring.
#[pyfunction]
fn dm_witness(variant: &str, q: usize, p: usize, k: usize) -> PyResult<String> {
    Ok(families::dm_witness(parse_variant(variant)?, q, p, k)
        .map_err(to_py)?
        .to_string())
}

/// Census of attainable reset thresholds of binary n-state automata
/// (n <= 5): returns {threshold: table_count}.
#[pyfunction]
fn reset_threshold_census(n: usize) -> PyResult<BTreeMap<usize, u64>> {
    Ok(explore::reset_threshold_census(n).map_err(to_py)?.counts)
}

#[pymodule]
fn synchro_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Automaton>()?;
    m.add_class::<Digraph>()?;
    m.add_function(wrap_pyfunction!(frobenius_number, m)?)?;
    m.add_function(wrap_pyfunction!(representable, m)?)?;
    m.add_function(wrap_pyfunction!(wielandt_rt_formula, m)?)?;
    m.add_function(wrap_pyfunction!(dm_rt_formula, m)?)?;
    m.add_function(wrap_pyfunction!(wielandt_witness, m)?)?;
    m.add_function(wrap_pyfunction!(dm_witness, m)?)?;
    m.add_function(wrap_pyfunction!(reset_threshold_census, m)?)?;
    Ok(())
}
