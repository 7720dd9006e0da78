//! Simple undirected graphs with optional colour lists.
//!
//! Vertices are dense ids `0..n`. Every transform returns a new graph; fresh
//! vertices are always appended after the existing ones in a fixed order so
//! that composed constructions are reproducible.

use std::collections::VecDeque;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};

pub type Vertex = usize;

/// A set of colours `1..=31` stored as a bitmask (bit `c` is colour `c`).
/// Serialized as the ascending list of its colours.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
#[serde(into = "Vec<u8>", try_from = "Vec<u8>")]
pub struct ColourSet(u32);

impl From<ColourSet> for Vec<u8> {
    fn from(set: ColourSet) -> Self {
        set.iter().collect()
    }
}

impl TryFrom<Vec<u8>> for ColourSet {
    type Error = String;

    fn try_from(colours: Vec<u8>) -> std::result::Result<Self, String> {
        match colours.iter().find(|&&c| c == 0 || c > 31) {
            Some(c) => Err(format!("colour {c} is outside 1..=31")),
            None => Ok(ColourSet::from_colours(colours)),
        }
    }
}

impl ColourSet {
    pub const EMPTY: ColourSet = ColourSet(0);

    /// `{1, ..., k}`.
    pub fn full(k: u8) -> Self {
        assert!(k <= 31, "at most 31 colours are supported");
        ColourSet(((1u64 << (k as u32 + 1)) - 2) as u32)
    }

    pub fn from_colours<I: IntoIterator<Item = u8>>(colours: I) -> Self {
        let mut set = ColourSet::EMPTY;
        for c in colours {
            set.insert(c);
        }
        set
    }

    pub fn from_bits(bits: u32) -> Self {
        ColourSet(bits & !1)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    pub fn insert(&mut self, colour: u8) {
        assert!((1..=31).contains(&colour), "colour {colour} out of range");
        self.0 |= 1 << colour;
    }

    pub fn remove(&mut self, colour: u8) {
        if colour < 32 {
            self.0 &= !(1 << colour);
        }
    }

    pub fn contains(self, colour: u8) -> bool {
        colour < 32 && self.0 & (1 << colour) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColourSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersection(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 & other.0)
    }

    pub fn union(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 | other.0)
    }

    pub fn difference(self, other: ColourSet) -> ColourSet {
        ColourSet(self.0 & !other.0)
    }

    /// Colours in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1u8..32).filter(move |&c| self.contains(c))
    }

    pub fn max(self) -> Option<u8> {
        self.iter().last()
    }
}

impl fmt::Debug for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{self}}}")
    }
}

impl fmt::Display for ColourSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in self.iter() {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

/// Colours a list may use: `{1, 2, 3}`.
pub const LIST_UNIVERSE: ColourSet = ColourSet(0b1110);

/// Serialized as `{"n": .., "edges": [[u, v], ..], "lists": [[1, 2], ..] | null}`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
#[serde(into = "GraphData", try_from = "GraphData")]
pub struct Graph {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    adj: Vec<Vec<Vertex>>,
    lists: Option<Vec<ColourSet>>,
}

#[derive(Serialize, Deserialize)]
struct GraphData {
    n: usize,
    edges: Vec<(Vertex, Vertex)>,
    #[serde(default)]
    lists: Option<Vec<ColourSet>>,
}

impl From<Graph> for GraphData {
    fn from(g: Graph) -> Self {
        GraphData {
            n: g.n,
            edges: g.edges,
            lists: g.lists,
        }
    }
}

impl TryFrom<GraphData> for Graph {
    type Error = Error;

    fn try_from(data: GraphData) -> Result<Self> {
        let g = Graph::new(data.n, data.edges)?;
        match data.lists {
            Some(lists) => g.with_lists(lists),
            None => Ok(g),
        }
    }
}

/// Compact one-line form, e.g. `n=3 [0-1 1-2]`.
impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, (u, v)) in self.edges.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "]")
    }
}

impl Graph {
    /// Builds a graph, rejecting self-loops, duplicate edges and endpoints `>= n`.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut normalised = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::InvalidGraph(format!(
                    "edge {u}-{v} references a vertex outside 0..{n}"
                )));
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("self-loop at vertex {u}")));
            }
            normalised.push((u.min(v), u.max(v)));
            adj[u].push(v);
            adj[v].push(u);
        }
        normalised.sort_unstable();
        if let Some(w) = normalised.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidGraph(format!(
                "duplicate edge {}-{}",
                w[0].0, w[0].1
            )));
        }
        for nbrs in &mut adj {
            nbrs.sort_unstable();
        }
        Ok(Graph {
            n,
            edges: normalised,
            adj,
            lists: None,
        })
    }

    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            edges: Vec::new(),
            adj: vec![Vec::new(); n],
            lists: None,
        }
    }

    /// Attaches one list per vertex; each list must be a non-empty subset of `{1,2,3}`.
    pub fn with_lists(mut self, lists: Vec<ColourSet>) -> Result<Self> {
        if lists.len() != self.n {
            return Err(Error::InvalidGraph(format!(
                "{} lists given for {} vertices",
                lists.len(),
                self.n
            )));
        }
        for (v, list) in lists.iter().enumerate() {
            if list.is_empty() {
                return Err(Error::InvalidGraph(format!("list of vertex {v} is empty")));
            }
            if !list.is_subset(LIST_UNIVERSE) {
                return Err(Error::InvalidGraph(format!(
                    "list of vertex {v} is {{{list}}}, not a subset of {{1,2,3}}"
                )));
            }
        }
        self.lists = Some(lists);
        Ok(self)
    }

    pub fn without_lists(mut self) -> Self {
        self.lists = None;
        self
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges as `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    /// Sorted neighbours of `v`.
    pub fn neighbours(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn lists(&self) -> Option<&[ColourSet]> {
        self.lists.as_deref()
    }

    pub fn list(&self, v: Vertex) -> Option<ColourSet> {
        self.lists.as_ref().map(|l| l[v])
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_subcubic(&self) -> bool {
        self.max_degree() <= 3
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        degs
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Subgraph induced on `vertices`; vertex `i` of the result is `vertices[i]`.
    pub fn induced_subgraph(&self, vertices: &[Vertex]) -> Graph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        let mut g = Graph::new(vertices.len(), edges).expect("induced subgraph of a valid graph");
        if let Some(lists) = &self.lists {
            g.lists = Some(vertices.iter().map(|&v| lists[v]).collect());
        }
        g
    }

    /// Disjoint union; the vertices of `other` are shifted by `self.vertex_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        let mut g = Graph::new(self.n + other.n, edges).expect("union of valid graphs");
        g.lists = match (&self.lists, &other.lists) {
            (None, None) => None,
            (a, b) => {
                let left = a.clone().unwrap_or_else(|| vec![LIST_UNIVERSE; self.n]);
                let right = b.clone().unwrap_or_else(|| vec![LIST_UNIVERSE; other.n]);
                Some(left.into_iter().chain(right).collect())
            }
        };
        g
    }

    /// Renames vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(param("perm", "length differs from vertex count"));
        }
        let mut seen = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut seen[p], true) {
                return Err(param("perm", "not a permutation"));
            }
        }
        let mut g = Graph::new(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))?;
        if let Some(lists) = &self.lists {
            let mut relabelled = vec![ColourSet::EMPTY; self.n];
            for (v, &l) in lists.iter().enumerate() {
                relabelled[perm[v]] = l;
            }
            g.lists = Some(relabelled);
        }
        Ok(g)
    }
}

/// The graphs the generators know how to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NamedGraph {
    /// `P_n`: `n` vertices, `n - 1` edges.
    Path(usize),
    /// `C_n`, `n >= 3`.
    Cycle(usize),
    /// `K_n`.
    Clique(usize),
    /// `K_{1,3}`.
    Claw,
    /// `K_{1,leaves}`.
    Star(usize),
    /// Centre with three legs of the given lengths (vertices per leg).
    SubdividedClaw(usize, usize, usize),
}

pub fn make_named(kind: NamedGraph) -> Result<Graph> {
    match kind {
        NamedGraph::Path(n) => {
            if n == 0 {
                return Err(param("path", "needs at least one vertex"));
            }
            Graph::new(n, (1..n).map(|i| (i - 1, i)))
        }
        NamedGraph::Cycle(n) => {
            if n < 3 {
                return Err(param("cycle", format!("length {n} is below 3")));
            }
            Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
        }
        NamedGraph::Clique(n) => {
            if n == 0 {
                return Err(param("clique", "size 0"));
            }
            Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
        }
        NamedGraph::Claw => make_named(NamedGraph::Star(3)),
        NamedGraph::Star(leaves) => {
            if leaves == 0 {
                return Err(param("star", "needs at least one leaf"));
            }
            Graph::new(leaves + 1, (1..=leaves).map(|i| (0, i)))
        }
        NamedGraph::SubdividedClaw(a, b, c) => {
            if a == 0 || b == 0 || c == 0 {
                return Err(param("subdivided_claw", "leg lengths must be at least 1"));
            }
            let mut edges = Vec::new();
            let mut next = 1;
            for leg in [a, b, c] {
                let mut prev = 0;
                for _ in 0..leg {
                    edges.push((prev, next));
                    prev = next;
                    next += 1;
                }
            }
            Graph::new(next, edges)
        }
    }
}

/// `P_n`. Panics if `n == 0`.
pub fn path(n: usize) -> Graph {
    make_named(NamedGraph::Path(n)).expect("path needs n >= 1")
}

/// `C_n`. Panics if `n < 3`.
pub fn cycle(n: usize) -> Graph {
    make_named(NamedGraph::Cycle(n)).expect("cycle needs n >= 3")
}

/// `K_n`. Panics if `n == 0`.
pub fn clique(n: usize) -> Graph {
    make_named(NamedGraph::Clique(n)).expect("clique needs n >= 1")
}

pub fn claw() -> Graph {
    make_named(NamedGraph::Claw).expect("claw")
}

/// Replaces every edge by a path with `k` fresh internal vertices.
///
/// Edge number `e` (in sorted edge order) `u < v` becomes
/// `u, n + e*k, ..., n + e*k + k - 1, v`. Fresh vertices get the full list
/// `{1,2,3}` when `g` carries lists.
pub fn subdivide(g: &Graph, k: usize) -> Graph {
    subdivide_with_lists(g, k, |_| LIST_UNIVERSE)
}

/// As [`subdivide`], giving the fresh vertices of edge `e` the list `inner(e)`.
/// Lists are attached whenever `g` has lists.
pub fn subdivide_with_lists<F>(g: &Graph, k: usize, inner: F) -> Graph
where
    F: Fn(usize) -> ColourSet,
{
    if k == 0 {
        return g.clone();
    }
    let n = g.vertex_count();
    let mut edges = Vec::with_capacity((k + 1) * g.edge_count());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + e * k;
        edges.push((u, base));
        for j in 1..k {
            edges.push((base + j - 1, base + j));
        }
        edges.push((base + k - 1, v));
    }
    let mut out = Graph::new(n + k * g.edge_count(), edges).expect("subdivision of a valid graph");
    if let Some(lists) = g.lists() {
        let mut all = lists.to_vec();
        for e in 0..g.edge_count() {
            all.extend(std::iter::repeat_n(inner(e), k));
        }
        out.lists = Some(all);
    }
    out
}

/// The `j`-th (0-based) internal vertex that [`subdivide`] creates on edge number `e`.
pub fn subdivision_vertex(g: &Graph, k: usize, e: usize, j: usize) -> Vertex {
    debug_assert!(j < k && e < g.edge_count());
    g.vertex_count() + e * k + j
}

pub fn every_edge_in_triangle(g: &Graph) -> bool {
    g.edges().iter().all(|&(u, v)| edge_in_triangle(g, u, v))
}

fn edge_in_triangle(g: &Graph, u: Vertex, v: Vertex) -> bool {
    let (a, b) = (g.neighbours(u), g.neighbours(v));
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}

/// Adds a fresh apex `w` with edges `uw, wv` for every edge `uv` not already in
/// a triangle, in sorted edge order.
pub fn triangle_augment(g: &Graph) -> Graph {
    let mut edges = g.edges().to_vec();
    let mut next = g.vertex_count();
    for &(u, v) in g.edges() {
        if !edge_in_triangle(g, u, v) {
            edges.push((u, next));
            edges.push((next, v));
            next += 1;
        }
    }
    let mut out = Graph::new(next, edges).expect("augmentation of a valid graph");
    if let Some(lists) = g.lists() {
        let mut all = lists.to_vec();
        all.resize(next, LIST_UNIVERSE);
        out.lists = Some(all);
    }
    out
}
