//! Directed graphs by adjacency lists: connectivity and cycle structure.

use crate::error::{Error, Result};

/// Default ceiling on the number of simple cycles enumerated per call.
pub const DEFAULT_CYCLE_BUDGET: usize = 10_000;

/// A digraph without parallel edges; loops are allowed.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    num_vertices: usize,
    /// Sorted out-neighbor list per vertex.
    adj: Vec<Vec<usize>>,
}

impl Digraph {
    pub fn new(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if num_vertices == 0 {
            return Err(Error::Construction("digraph needs at least one vertex".into()));
        }
        let mut adj = vec![Vec::new(); num_vertices];
        for &(u, v) in edges {
            if u >= num_vertices || v >= num_vertices {
                return Err(Error::Construction(format!(
                    "edge ({u}, {v}) leaves the vertex set 0..{num_vertices}"
                )));
            }
            adj[u].push(v);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Construction(format!(
                    "duplicate edge out of vertex {u}"
                )));
            }
        }
        Ok(Digraph { num_vertices, adj })
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.adj.iter().map(Vec::len).sum()
    }

    /// All edges, sorted lexicographically.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.num_edges());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                out.push((u, v));
            }
        }
        out
    }

    pub fn out_neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// True iff every ordered vertex pair is joined by a directed path.
    pub fn is_strongly_connected(&self) -> bool {
        if self.num_vertices == 1 {
            return true;
        }
        let mut rev = vec![Vec::new(); self.num_vertices];
        for (u, v) in self.edges() {
            rev[v].push(u);
        }
        reachable_from_zero(&self.adj) == self.num_vertices
            && reachable_from_zero(&rev) == self.num_vertices
    }

    /// Lengths of all distinct simple directed cycles, sorted ascending.
    ///
    /// One entry per cycle (rotations identified); a loop contributes 1.
    pub fn simple_cycle_lengths(&self) -> Result<Vec<usize>> {
        self.simple_cycle_lengths_with_budget(DEFAULT_CYCLE_BUDGET)
    }

    /// As [`simple_cycle_lengths`](Self::simple_cycle_lengths) with an
    /// explicit cycle-count budget; exceeding it is a resource error.
    pub fn simple_cycle_lengths_with_budget(&self, budget: usize) -> Result<Vec<usize>> {
        // Each simple cycle is enumerated exactly once, rooted at its
        // minimal vertex: paths from `root` may only use vertices > root.
        let mut lengths = Vec::new();
        let mut work: usize = 0;
        let work_budget = budget.saturating_mul(1_000).max(1_000_000);
        for root in 0..self.num_vertices {
            let mut on_path = vec![false; self.num_vertices];
            self.cycle_dfs(
                root,
                root,
                1,
                &mut on_path,
                &mut lengths,
                budget,
                &mut work,
                work_budget,
            )?;
        }
        lengths.sort_unstable();
        Ok(lengths)
    }

    #[allow(clippy::too_many_arguments)]
    fn cycle_dfs(
        &self,
        root: usize,
        u: usize,
        depth: usize,
        on_path: &mut Vec<bool>,
        lengths: &mut Vec<usize>,
        budget: usize,
        work: &mut usize,
        work_budget: usize,
    ) -> Result<()> {
        on_path[u] = true;
        for &v in &self.adj[u] {
            *work += 1;
            if *work > work_budget {
                return Err(Error::ResourceLimit(format!(
                    "cycle enumeration exceeded {work_budget} steps"
                )));
            }
            if v == root {
                lengths.push(depth);
                if lengths.len() > budget {
                    return Err(Error::ResourceLimit(format!(
                        "more than {budget} simple cycles"
                    )));
                }
            } else if v > root && !on_path[v] {
                self.cycle_dfs(
                    root,
                    v,
                    depth + 1,
                    on_path,
                    lengths,
                    budget,
                    work,
                    work_budget,
                )?;
            }
        }
        on_path[u] = false;
        Ok(())
    }

    /// Relabels vertices by the permutation `perm` (vertex `v` becomes
    /// `perm[v]`).
    pub fn relabel(&self, perm: &[usize]) -> Result<Digraph> {
        if perm.len() != self.num_vertices {
            return Err(Error::Domain(
                "permutation length does not match vertex count".into(),
            ));
        }
        let edges: Vec<(usize, usize)> = self
            .edges()
            .into_iter()
            .map(|(u, v)| (perm[u], perm[v]))
            .collect();
        Digraph::new(self.num_vertices, &edges)
    }
}

fn reachable_from_zero(adj: &[Vec<usize>]) -> usize {
    let mut seen = vec![false; adj.len()];
    let mut stack = vec![0usize];
    seen[0] = true;
    let mut count = 1;
    while let Some(u) = stack.pop() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                stack.push(v);
            }
        }
    }
    count
}
