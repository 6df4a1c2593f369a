//! JSON wire formats for automata and digraphs.
//!
//! Automaton: `{"states": n, "alphabet": ["a","b",...], "delta": [[...],...]}`
//! where `delta[s][x]` is the image of state `s` under letter `x`.
//! Digraph: `{"vertices": n, "edges": [[u,v],...]}`.
//!
//! Letter naming is fixed: letter `i` is the `i`-th lowercase letter, so the
//! words appearing in the literature round-trip literally.

use serde::{Deserialize, Serialize};

use crate::automaton::Dfa;
use crate::digraph::Digraph;
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct DfaRepr {
    states: usize,
    alphabet: Vec<String>,
    delta: Vec<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct DigraphRepr {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

fn canonical_letter(i: usize) -> String {
    ((b'a' + i as u8) as char).to_string()
}

pub fn dfa_to_json(dfa: &Dfa) -> String {
    let repr = DfaRepr {
        states: dfa.num_states(),
        alphabet: (0..dfa.alphabet_size()).map(canonical_letter).collect(),
        delta: (0..dfa.num_states()).map(|s| dfa.row(s).to_vec()).collect(),
    };
    serde_json::to_string(&repr).expect("serializing a plain struct cannot fail")
}

pub fn dfa_from_json(text: &str) -> Result<Dfa> {
    let repr: DfaRepr =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("automaton JSON: {e}")))?;
    if repr.alphabet.is_empty() {
        return Err(Error::Parse("alphabet must be nonempty".into()));
    }
    for (i, name) in repr.alphabet.iter().enumerate() {
        if *name != canonical_letter(i) {
            return Err(Error::Parse(format!(
                "alphabet entry {i} is {name:?}, expected {:?} (letters are named a, b, ... in order)",
                canonical_letter(i)
            )));
        }
    }
    if repr.delta.len() != repr.states {
        return Err(Error::Parse(format!(
            "delta has {} rows, expected one per state ({})",
            repr.delta.len(),
            repr.states
        )));
    }
    for (s, row) in repr.delta.iter().enumerate() {
        if row.len() != repr.alphabet.len() {
            return Err(Error::Parse(format!(
                "delta[{s}] has {} entries, expected {}",
                row.len(),
                repr.alphabet.len()
            )));
        }
        for (x, &t) in row.iter().enumerate() {
            if t >= repr.states {
                return Err(Error::Parse(format!(
                    "delta[{s}][{x}] = {t} is outside the state range 0..{}",
                    repr.states
                )));
            }
        }
    }
    Dfa::new(repr.alphabet.len(), repr.delta)
}

pub fn digraph_to_json(g: &Digraph) -> String {
    let repr = DigraphRepr {
        vertices: g.num_vertices(),
        edges: g.edges(),
    };
    serde_json::to_string(&repr).expect("serializing a plain struct cannot fail")
}

pub fn digraph_from_json(text: &str) -> Result<Digraph> {
    let repr: DigraphRepr =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("digraph JSON: {e}")))?;
    Digraph::new(repr.vertices, &repr.edges).map_err(|e| match e {
        Error::Construction(msg) => Error::Parse(msg),
        other => other,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn automaton_round_trip() {
        let dfa = Dfa::new(2, vec![vec![1, 0], vec![2, 1], vec![3, 2], vec![0, 0]]).unwrap();
        let text = dfa_to_json(&dfa);
        let back = dfa_from_json(&text).unwrap();
        assert_eq!(dfa, back);
    }

    #[test]
    fn rejects_incomplete_table() {
        let text = r#"{"states": 2, "alphabet": ["a","b"], "delta": [[0,0]]}"#;
        assert!(matches!(dfa_from_json(text), Err(Error::Parse(_))));
        let text = r#"{"states": 2, "alphabet": ["a","b"], "delta": [[0],[0,0]]}"#;
        assert!(matches!(dfa_from_json(text), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_out_of_range_entry() {
        let text = r#"{"states": 2, "alphabet": ["a","b"], "delta": [[0,2],[0,0]]}"#;
        assert!(matches!(dfa_from_json(text), Err(Error::Parse(_))));
    }

    #[test]
    fn rejects_noncanonical_alphabet() {
        let text = r#"{"states": 1, "alphabet": ["x"], "delta": [[0]]}"#;
        assert!(matches!(dfa_from_json(text), Err(Error::Parse(_))));
    }

    #[test]
    fn digraph_round_trip() {
        let g = Digraph::new(3, &[(0, 1), (1, 2), (2, 0), (0, 2)]).unwrap();
        let back = digraph_from_json(&digraph_to_json(&g)).unwrap();
        assert_eq!(g, back);
        assert!(digraph_from_json(r#"{"vertices": 1, "edges": [[0,1]]}"#).is_err());
    }
}
