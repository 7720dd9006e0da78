//! Subgraph containment, brute-force isomorphism and canonical forms for
//! small graphs.

use std::collections::HashSet;

use crate::graph::{Graph, Vertex};

/// Whether `h` is isomorphic to a (not necessarily induced) subgraph of `g`.
///
/// Exponential; intended for `h` with about ten vertices or fewer.
pub fn contains_subgraph(g: &Graph, h: &Graph) -> bool {
    find_subgraph(g, h).is_some()
}

/// An injective map `V(h) -> V(g)` sending edges to edges, if one exists.
pub fn find_subgraph(g: &Graph, h: &Graph) -> Option<Vec<Vertex>> {
    if h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count() {
        return None;
    }
    let gd = g.degree_sequence();
    let hd = h.degree_sequence();
    // The i-th largest degree of h cannot exceed the i-th largest degree of g.
    if hd.iter().zip(&gd).any(|(a, b)| a > b) {
        return None;
    }

    let order = search_order(h);
    let mut position = vec![usize::MAX; h.vertex_count()];
    for (i, &x) in order.iter().enumerate() {
        position[x] = i;
    }
    // For each position: the already-placed neighbours of that vertex.
    let back: Vec<Vec<Vertex>> = order
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            h.neighbours(x)
                .iter()
                .copied()
                .filter(|&y| position[y] < i)
                .collect()
        })
        .collect();

    let mut image = vec![usize::MAX; h.vertex_count()];
    let mut used = vec![false; g.vertex_count()];
    if embed(g, h, &order, &back, 0, &mut image, &mut used) {
        Some(image)
    } else {
        None
    }
}

fn search_order(h: &Graph) -> Vec<Vertex> {
    let n = h.vertex_count();
    let mut placed = vec![false; n];
    let mut links = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let next = (0..n)
            .filter(|&v| !placed[v])
            .max_by_key(|&v| (links[v], h.degree(v), std::cmp::Reverse(v)))
            .expect("unplaced vertex remains");
        placed[next] = true;
        order.push(next);
        for &w in h.neighbours(next) {
            links[w] += 1;
        }
    }
    order
}

fn embed(
    g: &Graph,
    h: &Graph,
    order: &[Vertex],
    back: &[Vec<Vertex>],
    depth: usize,
    image: &mut [Vertex],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let x = order[depth];
    let need = h.degree(x);
    let candidates: Vec<Vertex> = match back[depth].first() {
        Some(&anchor) => g.neighbours(image[anchor]).to_vec(),
        None => g.vertices().collect(),
    };
    for c in candidates {
        if used[c] || g.degree(c) < need {
            continue;
        }
        if !back[depth].iter().all(|&y| g.has_edge(c, image[y])) {
            continue;
        }
        image[x] = c;
        used[c] = true;
        if embed(g, h, order, back, depth + 1, image, used) {
            return true;
        }
        used[c] = false;
    }
    image[x] = usize::MAX;
    false
}

/// Brute-force isomorphism test (lists are ignored).
pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.vertex_count() == b.vertex_count()
        && a.edge_count() == b.edge_count()
        && a.degree_sequence() == b.degree_sequence()
        && contains_subgraph(a, b)
}

/// Stable colouring by iterated degree refinement. Colour ids are ranks of
/// isomorphism-invariant signatures, so equal graphs up to relabelling get
/// equal colour multisets.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colour: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut around: Vec<usize> = g.neighbours(v).iter().map(|&w| colour[w]).collect();
                around.sort_unstable();
                (colour[v], around)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures
            .iter()
            .map(|s| distinct.binary_search(s).expect("signature present"))
            .collect();
        let classes_before = {
            let mut c = colour.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        colour = next;
        if distinct.len() == classes_before {
            return colour;
        }
    }
}

/// Adjacency bits of `g` under `perm` (position -> vertex), upper triangle,
/// first pair most significant.
fn code_under(g: &Graph, perm: &[Vertex]) -> u64 {
    let n = perm.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code = (code << 1) | g.has_edge(perm[i], perm[j]) as u64;
        }
    }
    code
}

/// Largest vertex count [`canonical_form`] supports (the code is 64 bits).
pub const CANON_MAX_VERTICES: usize = 11;

/// A canonical relabelling of `g` (lists ignored) and its adjacency code.
/// Two graphs are isomorphic iff their codes (and vertex counts) agree.
///
/// Panics above [`CANON_MAX_VERTICES`] vertices.
pub fn canonical_form(g: &Graph) -> (u64, Graph) {
    let n = g.vertex_count();
    assert!(n <= CANON_MAX_VERTICES, "canonical_form supports at most {CANON_MAX_VERTICES} vertices");
    let colour = refine(g);
    let mut classes: Vec<Vec<Vertex>> = Vec::new();
    let mut ids: Vec<usize> = colour.clone();
    ids.sort_unstable();
    ids.dedup();
    for id in ids {
        classes.push((0..n).filter(|&v| colour[v] == id).collect());
    }

    let mut best: Option<(u64, Vec<Vertex>)> = None;
    let mut perm = Vec::with_capacity(n);
    permute_classes(g, &classes, 0, &mut perm, &mut best);
    let (code, perm) = best.unwrap_or((0, Vec::new()));
    let mut inverse = vec![0; n];
    for (pos, &v) in perm.iter().enumerate() {
        inverse[v] = pos;
    }
    let canon = g.clone().without_lists().relabel(&inverse).expect("permutation");
    (code, canon)
}

fn permute_classes(
    g: &Graph,
    classes: &[Vec<Vertex>],
    class: usize,
    perm: &mut Vec<Vertex>,
    best: &mut Option<(u64, Vec<Vertex>)>,
) {
    if class == classes.len() {
        let code = code_under(g, perm);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, perm.clone()));
        }
        return;
    }
    let mut members = classes[class].clone();
    permute_within(g, classes, class, &mut members, 0, perm, best);
}

fn permute_within(
    g: &Graph,
    classes: &[Vec<Vertex>],
    class: usize,
    members: &mut [Vertex],
    k: usize,
    perm: &mut Vec<Vertex>,
    best: &mut Option<(u64, Vec<Vertex>)>,
) {
    if k == members.len() {
        let before = perm.len();
        perm.extend_from_slice(members);
        permute_classes(g, classes, class + 1, perm, best);
        perm.truncate(before);
        return;
    }
    for i in k..members.len() {
        members.swap(k, i);
        permute_within(g, classes, class, members, k + 1, perm, best);
        members.swap(k, i);
    }
}

/// All graphs on exactly `n` vertices up to isomorphism, in canonical form,
/// sorted by canonical code.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= CANON_MAX_VERTICES);
    let mut level: Vec<Graph> = vec![Graph::empty(0)];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for base in &level {
            for mask in 0u32..(1 << (size - 1)) {
                let edges = base
                    .edges()
                    .iter()
                    .copied()
                    .chain((0..size - 1).filter(|&u| mask >> u & 1 == 1).map(|u| (u, size - 1)));
                let g = Graph::new(size, edges).expect("extension of a valid graph");
                let (code, canon) = canonical_form(&g);
                if seen.insert(code) {
                    next.push((code, canon));
                }
            }
        }
        next.sort_by_key(|(code, _)| *code);
        level = next.into_iter().map(|(_, g)| g).collect();
    }
    level
}

/// Connected graphs on exactly `n` vertices up to isomorphism.
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    all_graphs(n).into_iter().filter(Graph::is_connected).collect()
}

/// All graphs with `1..=max_n` vertices up to isomorphism.
pub fn all_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(all_graphs).collect()
}

pub fn connected_graphs_up_to(max_n: usize) -> Vec<Graph> {
    (1..=max_n).flat_map(connected_graphs).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{claw, clique, cycle, path};

    #[test]
    fn containment_examples() {
        assert!(contains_subgraph(&clique(4), &claw()));
        assert!(!contains_subgraph(&cycle(15), &clique(3)));
        assert!(contains_subgraph(&path(5), &path(3)));
        assert!(!contains_subgraph(&path(3), &path(5)));
        assert!(contains_subgraph(&cycle(5), &path(5)));
        assert!(!contains_subgraph(&cycle(5), &cycle(4)));
        // Isolated vertices in h still need distinct images.
        assert!(!contains_subgraph(&path(2), &Graph::empty(3)));
        assert!(contains_subgraph(&path(3), &Graph::empty(3)));
    }

    #[test]
    fn embedding_is_valid() {
        let g = clique(5);
        let h = cycle(4);
        let f = find_subgraph(&g, &h).unwrap();
        for &(u, v) in h.edges() {
            assert!(g.has_edge(f[u], f[v]));
        }
        let mut images = f.clone();
        images.sort_unstable();
        images.dedup();
        assert_eq!(images.len(), f.len());
    }

    #[test]
    fn isomorphism() {
        let relabelled = cycle(6).relabel(&[3, 5, 0, 2, 1, 4]).unwrap();
        assert!(is_isomorphic(&cycle(6), &relabelled));
        let two_triangles = clique(3).disjoint_union(&clique(3));
        assert!(!is_isomorphic(&cycle(6), &two_triangles));
    }

    #[test]
    fn canonical_codes_agree_on_relabellings() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]).unwrap();
        let h = g.relabel(&[4, 2, 0, 1, 3]).unwrap();
        assert_eq!(canonical_form(&g).0, canonical_form(&h).0);
        assert_ne!(canonical_form(&g).0, canonical_form(&cycle(5)).0);
    }

    #[test]
    fn graph_counts_match_known_sequence() {
        let all: Vec<usize> = (1..=6).map(|n| all_graphs(n).len()).collect();
        assert_eq!(all, vec![1, 2, 4, 11, 34, 156]);
        let connected: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(connected, vec![1, 1, 2, 6, 21, 112]);
    }
}
