//! Edge disjoint paths, with an optional minimum path length.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{path, Graph, Vertex};
use crate::subgraph::contains_subgraph;

/// Largest edge count the exhaustive solvers accept by default.
pub const DEFAULT_EDGE_CAP: usize = 40;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdpInstance {
    pub graph: Graph,
    pub pairs: Vec<(Vertex, Vertex)>,
    /// Every path needs at least this many edges; 0 is classic EDP.
    pub min_length: usize,
}

impl EdpInstance {
    pub fn new(graph: Graph, pairs: Vec<(Vertex, Vertex)>, min_length: usize) -> Result<Self> {
        let inst = EdpInstance {
            graph,
            pairs,
            min_length,
        };
        inst.validate()?;
        Ok(inst)
    }

    pub fn validate(&self) -> Result<()> {
        if self.pairs.is_empty() {
            return Err(crate::error::param("pairs", "at least one terminal pair is required"));
        }
        let n = self.graph.vertex_count();
        for (i, &(s, t)) in self.pairs.iter().enumerate() {
            if s >= n || t >= n {
                return Err(crate::error::param("pairs", format!("pair {i} ({s},{t}) has a vertex outside 0..{n}")));
            }
            if s == t {
                return Err(crate::error::param("pairs", format!("pair {i} joins vertex {s} to itself")));
            }
        }
        Ok(())
    }
}

/// A solution: one vertex sequence per pair, in pair order.
pub type Paths = Vec<Vec<Vertex>>;

/// Pairwise edge-disjoint simple paths, one per pair, each with at least
/// `min_length` edges; `None` if there are none.
pub fn edp_solve(inst: &EdpInstance) -> Result<Option<Paths>> {
    edp_solve_with_cap(inst, DEFAULT_EDGE_CAP)
}

pub fn edp_solve_with_cap(inst: &EdpInstance, cap: usize) -> Result<Option<Paths>> {
    inst.validate()?;
    check_cap(&inst.graph, cap)?;
    Ok(Search::new(inst, usize::MAX).run())
}

/// As [`edp_solve`] on a graph without a path of `m` vertices, so only paths
/// with at most `m - 2` edges need to be explored.
pub fn edp_solve_bounded_depth(inst: &EdpInstance, m: usize) -> Result<Option<Paths>> {
    inst.validate()?;
    if m < 2 {
        return Err(crate::error::param("m", "must be at least 2"));
    }
    check_cap(&inst.graph, DEFAULT_EDGE_CAP)?;
    if contains_subgraph(&inst.graph, &path(m)) {
        return Err(Error::Precondition(format!("graph contains a path on {m} vertices")));
    }
    if inst.min_length >= m {
        return Ok(None);
    }
    Ok(Search::new(inst, m - 2).run())
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(128);
    if g.edge_count() > cap {
        return Err(Error::TooLarge {
            what: "edge count",
            actual: g.edge_count(),
            cap,
        });
    }
    Ok(())
}

/// Checks each path joins its pair, has at least `min_length` edges, uses
/// only graph edges without repeating a vertex, and shares no edge with
/// another path.
pub fn validate_paths(inst: &EdpInstance, paths: &[Vec<Vertex>]) -> bool {
    if paths.len() != inst.pairs.len() {
        return false;
    }
    let mut used = std::collections::HashSet::new();
    for (path, &(s, t)) in paths.iter().zip(&inst.pairs) {
        if path.first() != Some(&s) || path.last() != Some(&t) || path.len() < inst.min_length + 1 {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        if !path.iter().all(|&v| v < inst.graph.vertex_count() && seen.insert(v)) {
            return false;
        }
        for w in path.windows(2) {
            let e = (w[0].min(w[1]), w[0].max(w[1]));
            if !inst.graph.has_edge(e.0, e.1) || !used.insert(e) {
                return false;
            }
        }
    }
    true
}

struct Search<'a> {
    inst: &'a EdpInstance,
    max_len: usize,
    /// `edge_id[v][i]` is the index of the edge to `neighbours(v)[i]`.
    edge_id: Vec<Vec<usize>>,
}

impl<'a> Search<'a> {
    fn new(inst: &'a EdpInstance, max_len: usize) -> Self {
        let g = &inst.graph;
        let edge_id = g
            .vertices()
            .map(|v| {
                g.neighbours(v)
                    .iter()
                    .map(|&u| {
                        let e = (v.min(u), v.max(u));
                        g.edges().binary_search(&e).expect("edge exists")
                    })
                    .collect()
            })
            .collect();
        Search { inst, max_len, edge_id }
    }

    fn run(&self) -> Option<Paths> {
        let mut paths = Vec::with_capacity(self.inst.pairs.len());
        self.assign(0, 0, &mut paths).then_some(paths)
    }

    fn assign(&self, pair: usize, used: u128, paths: &mut Paths) -> bool {
        if pair == self.inst.pairs.len() {
            return true;
        }
        let (s, t) = self.inst.pairs[pair];
        let mut visited = vec![false; self.inst.graph.vertex_count()];
        visited[s] = true;
        let mut current = vec![s];
        self.extend(pair, t, used, &mut visited, &mut current, paths)
    }

    fn extend(
        &self,
        pair: usize,
        t: Vertex,
        used: u128,
        visited: &mut [bool],
        current: &mut Vec<Vertex>,
        paths: &mut Paths,
    ) -> bool {
        let v = *current.last().expect("non-empty");
        if v == t {
            if current.len() > self.inst.min_length {
                paths.push(current.clone());
                if self.assign(pair + 1, used, paths) {
                    return true;
                }
                paths.pop();
            }
            return false;
        }
        if current.len() > self.max_len {
            return false;
        }
        for (i, &u) in self.inst.graph.neighbours(v).iter().enumerate() {
            let bit = 1u128 << self.edge_id[v][i];
            if visited[u] || used & bit != 0 {
                continue;
            }
            visited[u] = true;
            current.push(u);
            let found = self.extend(pair, t, used | bit, visited, current, paths);
            current.pop();
            visited[u] = false;
            if found {
                return true;
            }
        }
        false
    }
}
