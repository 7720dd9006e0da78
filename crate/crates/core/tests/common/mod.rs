//! Brute-force oracles shared by the integration tests. None of them call
//! into the engines they check.

#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use c123::hom::HomMode;
use c123::quantified::{QbfInstance, QcspInstance, QnaeInstance, Quantifier, Term};
use c123::Graph;

pub fn qbf_brute(f: &QbfInstance) -> bool {
    fn go(f: &QbfInstance, i: usize, a: &mut Vec<bool>) -> bool {
        if i == f.prefix.entries().len() {
            return f.clauses.iter().all(|c| c.iter().any(|l| a[l.var] != l.negated));
        }
        let (q, v) = f.prefix.entries()[i];
        let mut branch = |b| {
            a[v] = b;
            go(f, i + 1, a)
        };
        match q {
            Quantifier::Exists => branch(false) || branch(true),
            Quantifier::Forall => branch(false) && branch(true),
        }
    }
    go(f, 0, &mut vec![false; f.prefix.entries().len()])
}

pub fn qnae_brute(inst: &QnaeInstance) -> bool {
    fn value(t: &Term, a: &[bool]) -> bool {
        match t {
            Term::Lit(l) => a[l.var] != l.negated,
            Term::False => false,
        }
    }
    fn go(inst: &QnaeInstance, i: usize, a: &mut Vec<bool>) -> bool {
        if i == inst.prefix.entries().len() {
            return inst.triples.iter().all(|t| {
                let vals: Vec<bool> = t.iter().map(|x| value(x, a)).collect();
                vals.contains(&true) && vals.contains(&false)
            });
        }
        let (q, v) = inst.prefix.entries()[i];
        let mut branch = |b| {
            a[v] = b;
            go(inst, i + 1, a)
        };
        match q {
            Quantifier::Exists => branch(false) || branch(true),
            Quantifier::Forall => branch(false) && branch(true),
        }
    }
    go(inst, 0, &mut vec![false; inst.prefix.entries().len()])
}

/// Quantified 3-colouring by plain recursion over the prefix. Universal
/// variables range over all of `{1,2,3}`; a violated atom falsifies the
/// sentence whoever made the last move.
pub fn qcsp_brute(inst: &QcspInstance) -> bool {
    let n = inst.prefix.entries().len();
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in &inst.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut allowed = vec![0b1110u8; n];
    for &(v, list) in &inst.lists {
        allowed[v] &= list.iter().fold(0, |m, c| m | 1 << c);
    }
    fn go(inst: &QcspInstance, adj: &[Vec<usize>], allowed: &[u8], i: usize, a: &mut Vec<u8>) -> bool {
        if i == a.len() {
            return true;
        }
        let (q, v) = inst.prefix.entries()[i];
        let mut branch = |c: u8| {
            if allowed[v] >> c & 1 == 0 || adj[v].iter().any(|&w| a[w] == c) {
                return false;
            }
            a[v] = c;
            let r = go(inst, adj, allowed, i + 1, a);
            a[v] = 0;
            r
        };
        match q {
            Quantifier::Exists => (1..=3).any(&mut branch),
            Quantifier::Forall => (1..=3).all(&mut branch),
        }
    }
    go(inst, &adj, &allowed, 0, &mut vec![0; n])
}

/// Vertices in breadth-first order from each component's smallest vertex.
fn bfs_order(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    let mut out = Vec::with_capacity(n);
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            out.push(v);
            for &w in g.neighbours(v) {
                if !std::mem::replace(&mut seen[w], true) {
                    queue.push_back(w);
                }
            }
        }
    }
    out
}

/// Is there `f: V(g) -> 0..domain` with `rel(f(u), f(v))` on every edge?
pub fn relation_csp(g: &Graph, domain: usize, rel: impl Fn(usize, usize) -> bool) -> bool {
    let order = bfs_order(g);
    let mut value = vec![usize::MAX; g.vertex_count()];
    fn go(
        g: &Graph,
        order: &[usize],
        i: usize,
        domain: usize,
        rel: &dyn Fn(usize, usize) -> bool,
        value: &mut Vec<usize>,
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for c in 0..domain {
            let ok = g
                .neighbours(v)
                .iter()
                .all(|&w| value[w] == usize::MAX || rel(c, value[w]) && rel(value[w], c));
            if ok {
                value[v] = c;
                if go(g, order, i + 1, domain, rel, value) {
                    return true;
                }
            }
        }
        value[v] = usize::MAX;
        false
    }
    go(g, &order, 0, domain, &rel, &mut value)
}

pub fn colourable(g: &Graph, k: usize) -> bool {
    relation_csp(g, k, |a, b| a != b)
}

/// `g -> h` under `mode`, by backtracking with the local condition checked
/// at every vertex whose neighbourhood is fully assigned.
pub fn local_hom_brute(g: &Graph, h: &Graph, mode: HomMode) -> bool {
    let order = bfs_order(g);
    let mut value = vec![usize::MAX; g.vertex_count()];
    let injective = matches!(mode, HomMode::LocallyInjective | HomMode::LocallyBijective);
    let surjective = matches!(mode, HomMode::LocallySurjective | HomMode::LocallyBijective);

    let local_ok = |value: &[usize], u: usize| -> bool {
        if value[u] == usize::MAX {
            return true;
        }
        let images: Vec<usize> = g.neighbours(u).iter().map(|&w| value[w]).filter(|&x| x != usize::MAX).collect();
        if injective {
            let distinct: HashSet<usize> = images.iter().copied().collect();
            if distinct.len() != images.len() {
                return false;
            }
        }
        if surjective && images.len() == g.degree(u) {
            let covered: HashSet<usize> = images.iter().copied().collect();
            if !h.neighbours(value[u]).iter().all(|x| covered.contains(x)) {
                return false;
            }
        }
        true
    };

    fn go(
        g: &Graph,
        h: &Graph,
        order: &[usize],
        i: usize,
        value: &mut Vec<usize>,
        local_ok: &dyn Fn(&[usize], usize) -> bool,
    ) -> bool {
        let Some(&v) = order.get(i) else { return true };
        for c in 0..h.vertex_count() {
            if g.neighbours(v).iter().any(|&w| value[w] != usize::MAX && !h.has_edge(c, value[w])) {
                continue;
            }
            value[v] = c;
            let ok = local_ok(value, v) && g.neighbours(v).iter().all(|&w| local_ok(value, w));
            if ok && go(g, h, order, i + 1, value, local_ok) {
                return true;
            }
        }
        value[v] = usize::MAX;
        false
    }
    go(g, h, &order, 0, &mut value, &local_ok)
}

/// All simple paths from `s` to `t`, as vertex sequences.
pub fn simple_paths(g: &Graph, s: usize, t: usize) -> Vec<Vec<usize>> {
    fn go(g: &Graph, t: usize, path: &mut Vec<usize>, on: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        let v = *path.last().unwrap();
        if v == t {
            out.push(path.clone());
            return;
        }
        for &w in g.neighbours(v) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                go(g, t, path, on, out);
                path.pop();
                on[w] = false;
            }
        }
    }
    let mut on = vec![false; g.vertex_count()];
    on[s] = true;
    let mut out = Vec::new();
    go(g, t, &mut vec![s], &mut on, &mut out);
    out
}

fn edge_key(u: usize, v: usize) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Edge-disjoint paths by trying every combination of simple paths.
pub fn edp_brute(g: &Graph, pairs: &[(usize, usize)], min_length: usize) -> bool {
    let options: Vec<Vec<Vec<usize>>> = pairs
        .iter()
        .map(|&(s, t)| simple_paths(g, s, t).into_iter().filter(|p| p.len() > min_length).collect())
        .collect();
    fn go(options: &[Vec<Vec<usize>>], i: usize, used: &mut HashSet<(usize, usize)>) -> bool {
        let Some(choices) = options.get(i) else { return true };
        for p in choices {
            let edges: Vec<_> = p.windows(2).map(|w| edge_key(w[0], w[1])).collect();
            if edges.iter().any(|e| used.contains(e)) {
                continue;
            }
            used.extend(edges.iter().copied());
            if go(options, i + 1, used) {
                return true;
            }
            for e in &edges {
                used.remove(e);
            }
        }
        false
    }
    go(&options, 0, &mut HashSet::new())
}

/// Checks a claimed solution: one simple path per pair, pairwise edge-disjoint,
/// each long enough, along edges of `g`.
pub fn paths_valid(g: &Graph, pairs: &[(usize, usize)], min_length: usize, paths: &[Vec<usize>]) -> bool {
    if paths.len() != pairs.len() {
        return false;
    }
    let mut used = HashSet::new();
    for (p, &(s, t)) in paths.iter().zip(pairs) {
        if p.first() != Some(&s) || p.last() != Some(&t) || p.len() <= min_length {
            return false;
        }
        let distinct: HashSet<usize> = p.iter().copied().collect();
        if distinct.len() != p.len() {
            return false;
        }
        for w in p.windows(2) {
            if !g.has_edge(w[0], w[1]) || !used.insert(edge_key(w[0], w[1])) {
                return false;
            }
        }
    }
    true
}

/// Vertex count of a longest simple path.
pub fn longest_path_vertices(g: &Graph) -> usize {
    fn go(g: &Graph, v: usize, on: &mut Vec<bool>, len: usize, best: &mut usize) {
        *best = (*best).max(len);
        for &w in g.neighbours(v) {
            if !on[w] {
                on[w] = true;
                go(g, w, on, len + 1, best);
                on[w] = false;
            }
        }
    }
    let mut best = 0;
    for s in 0..g.vertex_count() {
        let mut on = vec![false; g.vertex_count()];
        on[s] = true;
        go(g, s, &mut on, 1, &mut best);
    }
    best
}

fn for_each_permutation(n: usize, mut f: impl FnMut(&[usize])) {
    // Heap's algorithm.
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    f(&a);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            f(&a);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

fn neighbour_masks(g: &Graph) -> Vec<u32> {
    (0..g.vertex_count())
        .map(|v| g.neighbours(v).iter().fold(0, |m, &w| m | 1 << w))
        .collect()
}

/// Minimum over orders of the largest number of placed vertices with a
/// neighbour still to come.
pub fn vertex_separation_brute(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let nb = neighbour_masks(g);
    let mut best = usize::MAX;
    for_each_permutation(n, |order| {
        let mut placed = 0u32;
        let mut worst = 0;
        for &v in order {
            placed |= 1 << v;
            let open = (0..n).filter(|&u| placed >> u & 1 == 1 && nb[u] & !placed != 0).count();
            worst = worst.max(open);
        }
        best = best.min(worst);
    });
    best
}

/// Minimum over elimination orders of the largest later-neighbourhood in the
/// fill-in graph.
pub fn treewidth_brute(g: &Graph) -> usize {
    let n = g.vertex_count();
    if n == 0 {
        return 0;
    }
    let base = neighbour_masks(g);
    let mut best = usize::MAX;
    for_each_permutation(n, |order| {
        let mut adj = base.clone();
        let mut gone = 0u32;
        let mut worst = 0;
        for &v in order {
            let nb = adj[v] & !gone;
            worst = worst.max(nb.count_ones() as usize);
            for a in 0..n {
                if nb >> a & 1 == 1 {
                    adj[a] |= nb & !(1 << a);
                }
            }
            gone |= 1 << v;
        }
        best = best.min(worst);
    });
    best
}

/// Vertex and edge coverage plus contiguity of every vertex's bags.
pub fn path_decomposition_valid(g: &Graph, bags: &[Vec<usize>]) -> bool {
    let n = g.vertex_count();
    let mut first = vec![usize::MAX; n];
    let mut last = vec![0; n];
    let mut count = vec![0; n];
    for (i, bag) in bags.iter().enumerate() {
        let distinct: HashSet<usize> = bag.iter().copied().collect();
        if distinct.len() != bag.len() || bag.iter().any(|&v| v >= n) {
            return false;
        }
        for &v in bag {
            first[v] = first[v].min(i);
            last[v] = i;
            count[v] += 1;
        }
    }
    if (0..n).any(|v| count[v] == 0 || last[v] - first[v] + 1 != count[v]) {
        return false;
    }
    g.edges()
        .iter()
        .all(|&(u, v)| bags.iter().any(|b| b.contains(&u) && b.contains(&v)))
}
