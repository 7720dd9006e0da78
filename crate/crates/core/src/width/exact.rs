//! Exact width parameters for small graphs.
//!
//! Every routine returns the optimum together with a certificate that the
//! matching checker accepts. Vertex sets are `u32` bitmasks, so the cap can be
//! raised to at most [`HARD_VERTEX_CAP`].

use std::collections::{HashMap, HashSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::width::decomposition::{
    EliminationForest, PathDecomposition, TreeDecomposition, VertexOrder,
};

pub const DEFAULT_VERTEX_CAP: usize = 12;
pub const HARD_VERTEX_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Certified<C> {
    pub value: usize,
    pub certificate: C,
}

fn check_cap(g: &Graph, cap: usize) -> Result<()> {
    let cap = cap.min(HARD_VERTEX_CAP);
    if g.vertex_count() > cap {
        return Err(Error::TooLarge {
            what: "vertex count",
            actual: g.vertex_count(),
            cap,
        });
    }
    Ok(())
}

fn neighbour_masks(g: &Graph) -> Vec<u32> {
    g.vertices()
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect()
}

fn members(mask: u32) -> impl Iterator<Item = Vertex> {
    (0..32).filter(move |&v| mask >> v & 1 == 1)
}

pub fn pathwidth(g: &Graph) -> Result<Certified<PathDecomposition>> {
    pathwidth_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Searches sequences of introduce/forget steps directly: a state is the set
/// of introduced vertices plus the currently open bag, and a vertex may only
/// be forgotten once all of its neighbours have been introduced.
pub fn pathwidth_with_cap(g: &Graph, cap: usize) -> Result<Certified<PathDecomposition>> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Certified {
            value: 0,
            certificate: PathDecomposition::new(Vec::new()),
        });
    }
    let nbr = neighbour_masks(g);
    for width in 0..n {
        let mut search = BagSearch {
            nbr: &nbr,
            full: full_mask(n),
            limit: width + 1,
            dead: HashSet::new(),
            steps: Vec::new(),
        };
        if search.run(0, 0) {
            let bags = search.bags();
            return Ok(Certified {
                value: width,
                certificate: PathDecomposition::new(bags),
            });
        }
    }
    unreachable!("a single bag always has width n - 1")
}

fn full_mask(n: usize) -> u32 {
    if n == 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[derive(Clone, Copy)]
enum Step {
    Introduce(Vertex),
    Forget(Vertex),
}

struct BagSearch<'a> {
    nbr: &'a [u32],
    full: u32,
    limit: usize,
    dead: HashSet<(u32, u32)>,
    steps: Vec<Step>,
}

impl BagSearch<'_> {
    fn run(&mut self, introduced: u32, open: u32) -> bool {
        if introduced == self.full {
            return true;
        }
        if self.dead.contains(&(introduced, open)) {
            return false;
        }
        for v in members(open) {
            if self.nbr[v] & !introduced == 0 {
                self.steps.push(Step::Forget(v));
                if self.run(introduced, open & !(1 << v)) {
                    return true;
                }
                self.steps.pop();
            }
        }
        if (open.count_ones() as usize) < self.limit {
            for v in members(self.full & !introduced) {
                self.steps.push(Step::Introduce(v));
                if self.run(introduced | 1 << v, open | 1 << v) {
                    return true;
                }
                self.steps.pop();
            }
        }
        self.dead.insert((introduced, open));
        false
    }

    /// The open bag after every introduce step, dropping bags contained in
    /// their successor.
    fn bags(&self) -> Vec<Vec<Vertex>> {
        let mut open = 0u32;
        let mut raw = Vec::new();
        for step in &self.steps {
            match *step {
                Step::Introduce(v) => {
                    open |= 1 << v;
                    raw.push(open);
                }
                Step::Forget(v) => open &= !(1 << v),
            }
        }
        let mut kept = Vec::new();
        for (i, &bag) in raw.iter().enumerate() {
            let absorbed = raw.get(i + 1).is_some_and(|&next| bag & !next == 0);
            if !absorbed {
                kept.push(members(bag).collect());
            }
        }
        kept
    }
}

/// Vertices outside `set ∪ {v}` reachable from `v` through `set`.
fn reach_through(nbr: &[u32], set: u32, v: Vertex) -> u32 {
    let mut seen = 1u32 << v;
    let mut frontier = 1u32 << v;
    let mut outside = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        for u in members(frontier) {
            let around = nbr[u] & !seen;
            outside |= around & !set;
            next |= around & set;
            seen |= around;
        }
        frontier = next;
    }
    outside
}

pub fn treewidth(g: &Graph) -> Result<Certified<TreeDecomposition>> {
    treewidth_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Dynamic programme over elimination orderings: the cost of eliminating `v`
/// after the set `S` is the number of vertices reachable from `v` through `S`.
pub fn treewidth_with_cap(g: &Graph, cap: usize) -> Result<Certified<TreeDecomposition>> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Certified {
            value: 0,
            certificate: TreeDecomposition {
                bags: Vec::new(),
                tree: Vec::new(),
            },
        });
    }
    let nbr = neighbour_masks(g);
    let size = 1usize << n;
    let mut best = vec![usize::MAX; size];
    let mut last = vec![0u8; size];
    best[0] = 0;
    for set in 1..size as u32 {
        for v in members(set) {
            let rest = set & !(1 << v);
            let cost = best[rest as usize].max(reach_through(&nbr, rest, v).count_ones() as usize);
            if cost < best[set as usize] {
                best[set as usize] = cost;
                last[set as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full_mask(n);
    while set != 0 {
        let v = last[set as usize] as Vertex;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    let certificate = decomposition_from_elimination(&nbr, &order);
    Ok(Certified {
        value: best[full_mask(n) as usize],
        certificate,
    })
}

fn decomposition_from_elimination(nbr: &[u32], order: &[Vertex]) -> TreeDecomposition {
    let n = order.len();
    let mut position = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        position[v] = i;
    }
    let mut eliminated = 0u32;
    let mut bags = Vec::with_capacity(n);
    let mut tree = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let higher = reach_through(nbr, eliminated, v);
        bags.push(members(higher | 1 << v).collect::<Vec<_>>());
        let parent = members(higher).map(|w| position[w]).min();
        match parent {
            Some(p) => tree.push((i, p)),
            None if i + 1 < n => tree.push((i, n - 1)),
            None => {}
        }
        eliminated |= 1 << v;
    }
    TreeDecomposition { bags, tree }
}

pub fn treedepth(g: &Graph) -> Result<Certified<EliminationForest>> {
    treedepth_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// `td` of a connected set is one plus the best `td` after deleting a root;
/// a disconnected set takes the maximum over its components.
pub fn treedepth_with_cap(g: &Graph, cap: usize) -> Result<Certified<EliminationForest>> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    let nbr = neighbour_masks(g);
    let mut memo: HashMap<u32, (usize, Vertex)> = HashMap::new();
    let all = full_mask(n);
    let value = components_of(&nbr, all)
        .into_iter()
        .map(|c| connected_treedepth(&nbr, c, &mut memo))
        .max()
        .unwrap_or(0);
    let mut parent = vec![None; n];
    for comp in components_of(&nbr, all) {
        build_forest(&nbr, comp, None, &mut memo, &mut parent);
    }
    Ok(Certified {
        value,
        certificate: EliminationForest { parent },
    })
}

fn components_of(nbr: &[u32], set: u32) -> Vec<u32> {
    let mut remaining = set;
    let mut out = Vec::new();
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        let mut comp = 1u32 << start;
        let mut frontier = comp;
        while frontier != 0 {
            let mut next = 0;
            for u in members(frontier) {
                next |= nbr[u] & set & !comp;
            }
            comp |= next;
            frontier = next;
        }
        remaining &= !comp;
        out.push(comp);
    }
    out
}

fn connected_treedepth(nbr: &[u32], set: u32, memo: &mut HashMap<u32, (usize, Vertex)>) -> usize {
    if let Some(&(d, _)) = memo.get(&set) {
        return d;
    }
    let mut best = (usize::MAX, 0);
    for root in members(set) {
        let rest = set & !(1 << root);
        let below = components_of(nbr, rest)
            .into_iter()
            .map(|c| connected_treedepth(nbr, c, memo))
            .max()
            .unwrap_or(0);
        if below + 1 < best.0 {
            best = (below + 1, root);
        }
    }
    memo.insert(set, best);
    best.0
}

fn build_forest(
    nbr: &[u32],
    set: u32,
    above: Option<Vertex>,
    memo: &mut HashMap<u32, (usize, Vertex)>,
    parent: &mut [Option<Vertex>],
) {
    connected_treedepth(nbr, set, memo);
    let root = memo[&set].1;
    parent[root] = above;
    for comp in components_of(nbr, set & !(1 << root)) {
        build_forest(nbr, comp, Some(root), memo, parent);
    }
}

pub fn min_vertex_separation(g: &Graph) -> Result<Certified<VertexOrder>> {
    min_vertex_separation_with_cap(g, DEFAULT_VERTEX_CAP)
}

/// Subset dynamic programme: the best order of a prefix set `S` pays the
/// boundary of `S` plus the best cost of `S` minus its last vertex.
pub fn min_vertex_separation_with_cap(g: &Graph, cap: usize) -> Result<Certified<VertexOrder>> {
    check_cap(g, cap)?;
    let n = g.vertex_count();
    let nbr = neighbour_masks(g);
    let size = 1usize << n;
    let mut best = vec![usize::MAX; size];
    let mut last = vec![0u8; size];
    best[0] = 0;
    for set in 1..size as u32 {
        let boundary = members(set).filter(|&u| nbr[u] & !set != 0).count();
        for v in members(set) {
            let rest = set & !(1 << v);
            let cost = best[rest as usize].max(boundary);
            if cost < best[set as usize] {
                best[set as usize] = cost;
                last[set as usize] = v as u8;
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut set = full_mask(n);
    while set != 0 {
        let v = last[set as usize] as Vertex;
        order.push(v);
        set &= !(1 << v);
    }
    order.reverse();
    Ok(Certified {
        value: best[full_mask(n) as usize],
        certificate: VertexOrder::new(order).expect("a permutation"),
    })
}
