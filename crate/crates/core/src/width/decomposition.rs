use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};

/// A permutation of `0..n` giving the order vertices are taken in.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<Vertex>", try_from = "Vec<Vertex>")]
pub struct VertexOrder(Vec<Vertex>);

impl From<VertexOrder> for Vec<Vertex> {
    fn from(order: VertexOrder) -> Self {
        order.0
    }
}

impl TryFrom<Vec<Vertex>> for VertexOrder {
    type Error = crate::error::Error;

    fn try_from(order: Vec<Vertex>) -> Result<Self> {
        VertexOrder::new(order)
    }
}

impl VertexOrder {
    pub fn new(order: Vec<Vertex>) -> Result<Self> {
        let n = order.len();
        let mut seen = vec![false; n];
        for &v in &order {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidParameter {
                    name: "order",
                    reason: format!("not a permutation of 0..{n}"),
                });
            }
        }
        Ok(VertexOrder(order))
    }

    pub fn identity(n: usize) -> Self {
        VertexOrder((0..n).collect())
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `positions()[v]` is the index of `v` in the order.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }
}

/// Bags in path order; each bag is kept sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PathDecomposition {
    pub bags: Vec<Vec<Vertex>>,
}

impl PathDecomposition {
    pub fn new(bags: Vec<Vec<Vertex>>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        PathDecomposition { bags }
    }

    /// Largest bag size minus one (0 for no bags).
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }
}

impl fmt::Display for PathDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .bags
            .iter()
            .map(|b| {
                let vs: Vec<String> = b.iter().map(usize::to_string).collect();
                format!("{{{}}}", vs.join(","))
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeDecomposition {
    pub bags: Vec<Vec<Vertex>>,
    /// Edges between bag indices.
    pub tree: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    pub fn width(&self) -> usize {
        self.bags.iter().map(Vec::len).max().unwrap_or(1).saturating_sub(1)
    }
}

impl From<&PathDecomposition> for TreeDecomposition {
    fn from(p: &PathDecomposition) -> Self {
        TreeDecomposition {
            bags: p.bags.clone(),
            tree: (1..p.bags.len()).map(|i| (i - 1, i)).collect(),
        }
    }
}

/// Rooted forest given by parent pointers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationForest {
    pub parent: Vec<Option<Vertex>>,
}

impl EliminationForest {
    /// Number of vertices on the longest root-to-leaf path, or `None` if the
    /// parent relation has a cycle or an out-of-range entry.
    pub fn height(&self) -> Option<usize> {
        let n = self.parent.len();
        let mut best = 0;
        for start in 0..n {
            let mut len = 0;
            let mut v = start;
            loop {
                len += 1;
                if len > n {
                    return None;
                }
                match self.parent[v] {
                    None => break,
                    Some(p) if p < n => v = p,
                    Some(_) => return None,
                }
            }
            best = best.max(len);
        }
        Some(best)
    }

    fn is_ancestor(&self, a: Vertex, mut v: Vertex) -> bool {
        while let Some(p) = self.parent[v] {
            if p == a {
                return true;
            }
            v = p;
        }
        false
    }
}

fn bags_in_range(g: &Graph, bags: &[Vec<Vertex>]) -> bool {
    bags.iter().flatten().all(|&v| v < g.vertex_count())
}

fn covers_edges(g: &Graph, bags: &[Vec<Vertex>]) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
}

/// Whether `d` is a path decomposition of `g`.
pub fn check_path_decomposition(g: &Graph, d: &PathDecomposition) -> bool {
    path_decomposition_error(g, d).is_none()
}

/// First violated condition, if any.
pub fn path_decomposition_error(g: &Graph, d: &PathDecomposition) -> Option<String> {
    if !bags_in_range(g, &d.bags) {
        return Some("a bag references a vertex outside the graph".into());
    }
    for v in g.vertices() {
        let hits: Vec<usize> = (0..d.bags.len()).filter(|&i| d.bags[i].contains(&v)).collect();
        match (hits.first(), hits.last()) {
            (None, _) => return Some(format!("vertex {v} is in no bag")),
            (Some(&a), Some(&b)) if b - a + 1 != hits.len() => {
                return Some(format!("bags containing vertex {v} are not contiguous"))
            }
            _ => {}
        }
    }
    g.edges()
        .iter()
        .find(|&&(u, v)| !d.bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
        .map(|(u, v)| format!("edge {u}-{v} is not covered by any bag"))
}

pub fn check_tree_decomposition(g: &Graph, d: &TreeDecomposition) -> bool {
    let m = d.bags.len();
    if !bags_in_range(g, &d.bags) || d.tree.iter().any(|&(a, b)| a >= m || b >= m || a == b) {
        return false;
    }
    if m == 0 {
        return g.vertex_count() == 0;
    }
    // A tree: m - 1 edges and connected.
    if d.tree.len() != m - 1 {
        return false;
    }
    let tree_graph = match Graph::new(m, d.tree.iter().copied()) {
        Ok(t) => t,
        Err(_) => return false,
    };
    if !tree_graph.is_connected() {
        return false;
    }
    for v in g.vertices() {
        let holding: Vec<usize> = (0..m).filter(|&i| d.bags[i].contains(&v)).collect();
        if holding.is_empty() || !tree_graph.induced_subgraph(&holding).is_connected() {
            return false;
        }
    }
    covers_edges(g, &d.bags)
}

pub fn check_elimination_forest(g: &Graph, f: &EliminationForest) -> bool {
    if f.parent.len() != g.vertex_count() || f.height().is_none() {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(u, v)| f.is_ancestor(u, v) || f.is_ancestor(v, u))
}

/// `max` over prefixes of the order of the number of prefix vertices with a
/// neighbour outside the prefix.
pub fn vertex_separation(g: &Graph, order: &VertexOrder) -> Result<usize> {
    if order.len() != g.vertex_count() {
        return Err(Error::InvalidParameter {
            name: "order",
            reason: format!(
                "order has {} entries for {} vertices",
                order.len(),
                g.vertex_count()
            ),
        });
    }
    let pos = order.positions();
    // Vertex at position i stays on the boundary until its last neighbour enters.
    let last: Vec<usize> = order
        .as_slice()
        .iter()
        .map(|&v| g.neighbours(v).iter().map(|&w| pos[w]).max().unwrap_or(0))
        .collect();
    let mut best = 0;
    for i in 0..order.len() {
        // Prefix = positions 0..=i.
        let boundary = (0..=i).filter(|&j| last[j] > i).count();
        best = best.max(boundary);
    }
    Ok(best)
}
