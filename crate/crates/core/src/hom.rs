//! Plain and locally constrained graph homomorphisms.
//!
//! [`hom_exists`] is a backtracking search that keeps every domain
//! arc-consistent along the edges of `G` and enforces the local constraints as
//! soon as a vertex is fixed. [`hom_exists_pw`] is the dynamic programme over a
//! path decomposition of `G`. When `G` carries colour lists, colour `c` stands
//! for vertex `c - 1` of `H`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{param, Error, Result};
use crate::graph::{Graph, Vertex};
use crate::width::{path_decomposition_error, PathDecomposition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HomMode {
    Plain,
    LocallyInjective,
    LocallyBijective,
    LocallySurjective,
}

impl HomMode {
    pub const ALL: [HomMode; 4] = [
        HomMode::Plain,
        HomMode::LocallyInjective,
        HomMode::LocallyBijective,
        HomMode::LocallySurjective,
    ];

    fn injective(self) -> bool {
        matches!(self, HomMode::LocallyInjective | HomMode::LocallyBijective)
    }

    fn surjective(self) -> bool {
        matches!(self, HomMode::LocallySurjective | HomMode::LocallyBijective)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomWitness {
    pub mapping: Vec<Vertex>,
}

/// Largest target the bitset search supports.
pub const MAX_TARGET_VERTICES: usize = 64;

/// Checks edge preservation, lists and the per-vertex local condition.
pub fn validate_witness(g: &Graph, h: &Graph, mode: HomMode, mapping: &[Vertex]) -> bool {
    if mapping.len() != g.vertex_count() || mapping.iter().any(|&a| a >= h.vertex_count()) {
        return false;
    }
    if let Some(lists) = g.lists() {
        for (u, list) in lists.iter().enumerate() {
            if !list.contains(mapping[u] as u8 + 1) {
                return false;
            }
        }
    }
    if !g.edges().iter().all(|&(u, v)| h.has_edge(mapping[u], mapping[v])) {
        return false;
    }
    for u in g.vertices() {
        let mut images: Vec<Vertex> = g.neighbours(u).iter().map(|&w| mapping[w]).collect();
        images.sort_unstable();
        let total = images.len();
        images.dedup();
        if mode.injective() && images.len() != total {
            return false;
        }
        if mode.surjective() && images.as_slice() != h.neighbours(mapping[u]) {
            return false;
        }
    }
    true
}

/// `max_degree(g) <= d` or `max_degree(h) <= d`.
pub fn degree_bounded_check(g: &Graph, h: &Graph, d: usize) -> bool {
    g.max_degree() <= d || h.max_degree() <= d
}

/// A homomorphism of the requested kind from `g` to `h`, if one exists.
pub fn hom_exists(g: &Graph, h: &Graph, mode: HomMode) -> Result<Option<HomWitness>> {
    if h.vertex_count() == 0 {
        return Err(param("h", "target graph is empty"));
    }
    if h.vertex_count() > MAX_TARGET_VERTICES {
        return Err(Error::TooLarge {
            what: "target vertex count",
            actual: h.vertex_count(),
            cap: MAX_TARGET_VERTICES,
        });
    }
    let target = Target::new(h);
    let mut mapping = vec![usize::MAX; g.vertex_count()];
    for comp in g.components() {
        let sub = g.induced_subgraph(&comp);
        match Search::new(&sub, &target, mode).solve() {
            Some(local) => {
                for (i, &v) in comp.iter().enumerate() {
                    mapping[v] = local[i];
                }
            }
            None => return Ok(None),
        }
    }
    debug_assert!(validate_witness(g, h, mode, &mapping));
    Ok(Some(HomWitness { mapping }))
}

struct Target {
    n: usize,
    nbr: Vec<u64>,
    degree: Vec<usize>,
}

impl Target {
    fn new(h: &Graph) -> Self {
        Target {
            n: h.vertex_count(),
            nbr: h
                .vertices()
                .map(|a| h.neighbours(a).iter().fold(0u64, |m, &b| m | 1 << b))
                .collect(),
            degree: h.vertices().map(|a| h.degree(a)).collect(),
        }
    }

    fn all(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }

    fn neighbours_of(&self, set: u64) -> u64 {
        bits(set).fold(0, |m, a| m | self.nbr[a])
    }
}

fn bits(mut set: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            None
        } else {
            let a = set.trailing_zeros() as usize;
            set &= set - 1;
            Some(a)
        }
    })
}

struct Search<'a> {
    g: &'a Graph,
    h: &'a Target,
    mode: HomMode,
    /// Vertices sharing a neighbour with `u` (images must differ under injectivity).
    siblings: Vec<Vec<Vertex>>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, h: &'a Target, mode: HomMode) -> Self {
        let siblings = if mode.injective() {
            g.vertices()
                .map(|u| {
                    let mut s: Vec<Vertex> = g
                        .neighbours(u)
                        .iter()
                        .flat_map(|&w| g.neighbours(w).iter().copied())
                        .filter(|&x| x != u)
                        .collect();
                    s.sort_unstable();
                    s.dedup();
                    s
                })
                .collect()
        } else {
            Vec::new()
        };
        Search {
            g,
            h,
            mode,
            siblings,
        }
    }

    fn initial_domains(&self) -> Vec<u64> {
        self.g
            .vertices()
            .map(|u| {
                let du = self.g.degree(u);
                let mut dom = 0u64;
                for a in 0..self.h.n {
                    let da = self.h.degree[a];
                    let ok = match self.mode {
                        HomMode::Plain => du == 0 || da > 0,
                        HomMode::LocallyInjective => du <= da,
                        HomMode::LocallySurjective => du >= da && (du == 0 || da > 0),
                        HomMode::LocallyBijective => du == da,
                    };
                    let listed = self.g.list(u).is_none_or(|l| a < 31 && l.contains(a as u8 + 1));
                    if ok && listed {
                        dom |= 1 << a;
                    }
                }
                dom & self.h.all()
            })
            .collect()
    }

    fn solve(&self) -> Option<Vec<Vertex>> {
        let mut domains = self.initial_domains();
        let all: Vec<Vertex> = self.g.vertices().collect();
        if !self.propagate(&mut domains, all) {
            return None;
        }
        self.branch(domains)
    }

    fn branch(&self, domains: Vec<u64>) -> Option<Vec<Vertex>> {
        let pick = self
            .g
            .vertices()
            .filter(|&u| domains[u].count_ones() > 1)
            .min_by_key(|&u| (domains[u].count_ones(), std::cmp::Reverse(self.g.degree(u))));
        let Some(u) = pick else {
            let mapping: Vec<Vertex> = domains.iter().map(|d| d.trailing_zeros() as usize).collect();
            return self.local_ok_all(&mapping).then_some(mapping);
        };
        for a in bits(domains[u]) {
            let mut next = domains.clone();
            next[u] = 1 << a;
            if self.propagate(&mut next, vec![u]) {
                if let Some(found) = self.branch(next) {
                    return Some(found);
                }
            }
        }
        None
    }

    /// Arc consistency along edges plus the local constraints of fixed vertices.
    fn propagate(&self, domains: &mut [u64], mut queue: Vec<Vertex>) -> bool {
        let mut queued = vec![false; domains.len()];
        for &u in &queue {
            queued[u] = true;
        }
        while let Some(u) = queue.pop() {
            queued[u] = false;
            if domains[u] == 0 {
                return false;
            }
            let support = self.h.neighbours_of(domains[u]);
            let fixed = domains[u].count_ones() == 1;
            let mut touched: Vec<Vertex> = Vec::new();
            for &w in self.g.neighbours(u) {
                let narrowed = domains[w] & support;
                if narrowed != domains[w] {
                    domains[w] = narrowed;
                    touched.push(w);
                }
            }
            if fixed && self.mode.injective() {
                for &s in &self.siblings[u] {
                    let narrowed = domains[s] & !domains[u];
                    if narrowed != domains[s] {
                        domains[s] = narrowed;
                        touched.push(s);
                    }
                }
            }
            if self.mode.surjective() && !self.surjection_possible(domains, u) {
                return false;
            }
            for w in touched {
                if domains[w] == 0 {
                    return false;
                }
                // Neighbours of w may have lost their cover.
                if self.mode.surjective() {
                    for &x in self.g.neighbours(w) {
                        if !self.surjection_possible(domains, x) {
                            return false;
                        }
                    }
                }
                if !queued[w] {
                    queued[w] = true;
                    queue.push(w);
                }
            }
        }
        true
    }

    /// For a fixed `u`, every neighbour of its image must remain reachable
    /// from some neighbour of `u`.
    fn surjection_possible(&self, domains: &[u64], u: Vertex) -> bool {
        if domains[u].count_ones() != 1 {
            return true;
        }
        let a = domains[u].trailing_zeros() as usize;
        let offered = self
            .g
            .neighbours(u)
            .iter()
            .fold(0u64, |m, &w| m | domains[w]);
        self.h.nbr[a] & !offered == 0
    }

    fn local_ok_all(&self, mapping: &[Vertex]) -> bool {
        self.g.vertices().all(|u| {
            let images: Vec<Vertex> = self.g.neighbours(u).iter().map(|&w| mapping[w]).collect();
            let set = images.iter().fold(0u64, |m, &b| m | 1 << b);
            let edges_ok = set & !self.h.nbr[mapping[u]] == 0;
            let inj_ok = !self.mode.injective() || set.count_ones() as usize == images.len();
            let surj_ok = !self.mode.surjective() || set == self.h.nbr[mapping[u]];
            edges_ok && inj_ok && surj_ok
        })
    }
}

/// Plain homomorphism existence by dynamic programming over `d`, a path
/// decomposition of `g`. Each bag keeps the set of partial maps of its
/// vertices; bags are processed as a sequence of forget and introduce steps.
pub fn hom_exists_pw(g: &Graph, h: &Graph, d: &PathDecomposition) -> Result<bool> {
    if h.vertex_count() == 0 {
        return Err(param("h", "target graph is empty"));
    }
    if let Some(why) = path_decomposition_error(g, d) {
        return Err(Error::InvalidDecomposition(why));
    }
    let allowed: Vec<Vec<Vertex>> = g
        .vertices()
        .map(|u| {
            h.vertices()
                .filter(|&a| g.list(u).is_none_or(|l| a < 31 && l.contains(a as u8 + 1)))
                .collect()
        })
        .collect();

    let mut active: Vec<Vertex> = Vec::new();
    let mut states: HashSet<Vec<Vertex>> = HashSet::from([Vec::new()]);
    let empty: Vec<Vertex> = Vec::new();
    for bag in d.bags.iter().chain(std::iter::once(&empty)) {
        // Forget.
        let keep: Vec<usize> = (0..active.len()).filter(|&i| bag.contains(&active[i])).collect();
        if keep.len() != active.len() {
            active = keep.iter().map(|&i| active[i]).collect();
            states = states
                .into_iter()
                .map(|s| keep.iter().map(|&i| s[i]).collect())
                .collect();
        }
        // Introduce.
        for &v in bag {
            if active.contains(&v) {
                continue;
            }
            let adjacent: Vec<usize> = (0..active.len()).filter(|&i| g.has_edge(active[i], v)).collect();
            let mut next = HashSet::new();
            for s in &states {
                for &a in &allowed[v] {
                    if adjacent.iter().all(|&i| h.has_edge(s[i], a)) {
                        let mut t = s.clone();
                        t.push(a);
                        next.insert(t);
                    }
                }
            }
            active.push(v);
            states = next;
            if states.is_empty() {
                return Ok(false);
            }
        }
    }
    Ok(!states.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, cycle, path, ColourSet};
    use crate::width::pathwidth_with_cap;

    fn exists(g: &Graph, h: &Graph, mode: HomMode) -> bool {
        let w = hom_exists(g, h, mode).unwrap();
        if let Some(w) = &w {
            assert!(validate_witness(g, h, mode, &w.mapping));
        }
        w.is_some()
    }

    #[test]
    fn plain_examples() {
        assert!(!exists(&clique(4), &clique(3), HomMode::Plain));
        assert!(exists(&cycle(15), &clique(3), HomMode::Plain));
        assert!(exists(&cycle(6), &path(2), HomMode::Plain));
        assert!(!exists(&cycle(5), &path(2), HomMode::Plain));
        assert!(exists(&Graph::empty(0), &clique(1), HomMode::Plain));
        assert!(hom_exists(&path(2), &Graph::empty(0), HomMode::Plain).is_err());
    }

    #[test]
    fn local_examples() {
        assert!(exists(&cycle(6), &cycle(3), HomMode::LocallyBijective));
        assert!(!exists(&cycle(5), &cycle(3), HomMode::LocallyBijective));
        for g in [clique(4), cycle(7), path(4)] {
            assert!(exists(&g, &g, HomMode::LocallyBijective));
        }
        // A path cannot cover a cycle bijectively (degree-1 ends).
        assert!(!exists(&path(3), &cycle(3), HomMode::LocallyBijective));
        assert!(exists(&path(3), &cycle(3), HomMode::LocallyInjective));
        assert!(exists(&cycle(4), &path(2), HomMode::LocallySurjective));
        assert!(!exists(&path(3), &cycle(3), HomMode::LocallySurjective));
    }

    #[test]
    fn lists_restrict_images() {
        let one = ColourSet::from_colours([1]);
        let g = path(2).with_lists(vec![one, one]).unwrap();
        assert!(!exists(&g, &clique(3), HomMode::Plain));
        let two = ColourSet::from_colours([2]);
        let g = path(2).with_lists(vec![one, two]).unwrap();
        let w = hom_exists(&g, &clique(3), HomMode::Plain).unwrap().unwrap();
        assert_eq!(w.mapping, vec![0, 1]);
    }

    #[test]
    fn dp_matches_examples() {
        let c15 = cycle(15);
        let d = pathwidth_with_cap(&c15, 15).unwrap().certificate;
        assert!(hom_exists_pw(&c15, &clique(3), &d).unwrap());
        let single = PathDecomposition::new(vec![vec![0, 1, 2, 3]]);
        assert!(!hom_exists_pw(&clique(4), &clique(3), &single).unwrap());
        let p5 = path(5);
        let d = PathDecomposition::new(vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4]]);
        assert!(hom_exists_pw(&p5, &path(2), &d).unwrap());
        let bad = PathDecomposition::new(vec![vec![0, 1]]);
        assert!(hom_exists_pw(&p5, &path(2), &bad).is_err());
    }

    #[test]
    fn degree_bound() {
        assert!(degree_bounded_check(&clique(5), &clique(4), 3));
        assert!(!degree_bounded_check(&clique(5), &clique(5), 3));
        assert!(degree_bounded_check(&cycle(9), &clique(6), 3));
    }
}
