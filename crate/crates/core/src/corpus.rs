//! Deterministic instance streams: exhaustive small corpora and seeded random
//! generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::edp::EdpInstance;
use crate::graph::{ColourSet, Graph, Vertex};
use crate::quantified::{Clause, Literal, Prefix, QbfInstance, QcspInstance, QnaeInstance, Quantifier, Term, Var};
use crate::subgraph::all_graphs_up_to;

/// All `2^n` quantifier strings, `∀` before `∃` at each position.
pub fn quantifier_strings(n: usize) -> Vec<Vec<Quantifier>> {
    (0..1usize << n)
        .map(|mask| {
            (0..n)
                .map(|i| if mask >> (n - 1 - i) & 1 == 0 { Quantifier::Forall } else { Quantifier::Exists })
                .collect()
        })
        .collect()
}

/// All `2^n · n!` prefixes over variables `0..n`.
pub fn prefixes(n: usize) -> Vec<Prefix> {
    let mut out = Vec::new();
    for perm in permutations(n) {
        for qs in quantifier_strings(n) {
            let entries = qs.into_iter().zip(perm.iter().copied()).collect();
            out.push(Prefix::new(entries).expect("permutation"));
        }
    }
    out
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for i in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(i, n - 1);
            out.push(p);
        }
    }
    out.sort();
    out
}

/// Clauses over distinct variables of `0..n` with `1..=max_width` literals,
/// variables ascending, every sign pattern.
pub fn clauses(n: usize, max_width: usize) -> Vec<Clause> {
    let mut out = Vec::new();
    for mask in 1..1usize << n {
        let vars: Vec<Var> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if vars.len() > max_width {
            continue;
        }
        for signs in 0..1usize << vars.len() {
            out.push(
                vars.iter()
                    .enumerate()
                    .map(|(i, &v)| Literal {
                        var: v,
                        negated: signs >> i & 1 == 1,
                    })
                    .collect(),
            );
        }
    }
    out
}

/// Sets of at most `max` distinct items, as index-ascending selections.
fn subsets_up_to<T: Clone>(items: &[T], max: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    let mut frontier: Vec<(usize, Vec<T>)> = vec![(0, Vec::new())];
    for _ in 0..max {
        let mut next = Vec::new();
        for (start, chosen) in &frontier {
            for (i, item) in items.iter().enumerate().skip(*start) {
                let mut c = chosen.clone();
                c.push(item.clone());
                out.push(c.clone());
                next.push((i + 1, c));
            }
        }
        frontier = next;
    }
    out
}

/// Every QBF with `0..=max_vars` variables quantified in id order, and a set of
/// at most `max_clauses` distinct clauses from [`clauses`].
pub fn qbf_corpus(max_vars: usize, max_clauses: usize, max_width: usize) -> Vec<QbfInstance> {
    let mut out = Vec::new();
    for n in 0..=max_vars {
        let sets = subsets_up_to(&clauses(n, max_width), max_clauses);
        for qs in quantifier_strings(n) {
            let prefix = Prefix::from_quantifiers(qs);
            for set in &sets {
                out.push(QbfInstance::new(prefix.clone(), set.clone()).expect("corpus clauses are in range"));
            }
        }
    }
    out
}

/// Ordered triples of variables of `0..n`, repetitions allowed.
pub fn positive_triples(n: usize) -> Vec<[Var; 3]> {
    let mut out = Vec::new();
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                out.push([a, b, c]);
            }
        }
    }
    out
}

/// Every quantified NAE instance with `1..=max_vars` variables in id order and
/// a set of at most `max_triples` distinct positive triples.
pub fn positive_qnae_corpus(max_vars: usize, max_triples: usize) -> Vec<QnaeInstance> {
    let mut out = Vec::new();
    for n in 1..=max_vars {
        let sets = subsets_up_to(&positive_triples(n), max_triples);
        for qs in quantifier_strings(n) {
            let prefix = Prefix::from_quantifiers(qs);
            for set in &sets {
                let triples = set
                    .iter()
                    .map(|t| t.map(|v| Term::Lit(Literal::pos(v))))
                    .collect();
                out.push(QnaeInstance::new(prefix.clone(), triples).expect("corpus triples are in range"));
            }
        }
    }
    out
}

/// All labelled edge sets on `n` vertices, in mask order.
pub fn labelled_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1usize << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
            Graph::new(n, edges).expect("distinct pairs")
        })
        .collect()
}

/// Every QCSP instance on `0..=max_vars` variables in id order: each labelled
/// edge set, each quantifier string, each choice of no list, `{1,2}` or
/// `{1,3}` per variable.
pub fn qcsp_corpus(max_vars: usize) -> impl Iterator<Item = QcspInstance> {
    let one_two = ColourSet::from_colours([1, 2]);
    let one_three = ColourSet::from_colours([1, 3]);
    (0..=max_vars).flat_map(move |n| {
        let graphs = labelled_graphs(n);
        let strings = quantifier_strings(n);
        let list_choices = 3usize.pow(n as u32);
        graphs.into_iter().flat_map(move |g| {
            let strings = strings.clone();
            strings.into_iter().flat_map(move |qs| {
                let g = g.clone();
                (0..list_choices).map(move |mut code| {
                    let mut lists = Vec::new();
                    for v in 0..n {
                        match code % 3 {
                            1 => lists.push((v, one_two)),
                            2 => lists.push((v, one_three)),
                            _ => {}
                        }
                        code /= 3;
                    }
                    QcspInstance::new(Prefix::from_quantifiers(qs.clone()), g.edges().to_vec(), lists)
                        .expect("corpus atoms are in range")
                })
            })
        })
    })
}

/// Every classic EDP instance on a non-isomorphic graph with at most `max_n`
/// vertices and a multiset of `1..=max_pairs` pairs `s < t`.
pub fn edp_corpus(max_n: usize, max_pairs: usize) -> Vec<EdpInstance> {
    let mut out = Vec::new();
    for g in all_graphs_up_to(max_n) {
        let n = g.vertex_count();
        let pairs: Vec<(Vertex, Vertex)> = (0..n).flat_map(|s| (s + 1..n).map(move |t| (s, t))).collect();
        let mut sequences: Vec<Vec<(Vertex, Vertex)>> = pairs.iter().map(|&p| vec![p]).collect();
        let mut last = sequences.clone();
        for _ in 1..max_pairs {
            let mut next = Vec::new();
            for seq in &last {
                let from = pairs.iter().position(|p| p == seq.last().expect("non-empty")).expect("known pair");
                for &p in &pairs[from..] {
                    let mut s = seq.clone();
                    s.push(p);
                    next.push(s);
                }
            }
            sequences.extend(next.iter().cloned());
            last = next;
        }
        for seq in sequences {
            out.push(EdpInstance::new(g.clone(), seq, 0).expect("valid terminals"));
        }
    }
    out
}

/// Seeded random instances; the same seed always yields the same stream.
pub struct RandomCorpus {
    rng: ChaCha8Rng,
}

impl RandomCorpus {
    pub fn new(seed: u64) -> Self {
        RandomCorpus {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// `G(n, p)`.
    pub fn graph(&mut self, n: usize, p: f64) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if self.rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, edges).expect("distinct pairs")
    }

    pub fn permutation(&mut self, n: usize) -> Vec<usize> {
        let mut p: Vec<usize> = (0..n).collect();
        p.shuffle(&mut self.rng);
        p
    }

    pub fn quantifiers(&mut self, n: usize) -> Vec<Quantifier> {
        (0..n)
            .map(|_| if self.rng.gen_bool(0.5) { Quantifier::Forall } else { Quantifier::Exists })
            .collect()
    }

    /// QCSP instance on a random graph with a random prefix and random
    /// `{1,2}`/`{1,3}` atoms.
    pub fn qcsp(&mut self, n: usize, edge_probability: f64) -> QcspInstance {
        let g = self.graph(n, edge_probability);
        let order = self.permutation(n);
        let entries = order.iter().zip(self.quantifiers(n)).map(|(&v, q)| (q, v)).collect();
        let mut lists = Vec::new();
        for v in 0..n {
            match self.rng.gen_range(0..4) {
                0 => lists.push((v, ColourSet::from_colours([1, 2]))),
                1 => lists.push((v, ColourSet::from_colours([1, 3]))),
                _ => {}
            }
        }
        QcspInstance::new(Prefix::new(entries).expect("permutation"), g.edges().to_vec(), lists)
            .expect("random atoms are in range")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgraph::connected_graphs_up_to;

    #[test]
    fn counts() {
        assert_eq!(prefixes(2).len(), 8);
        assert_eq!(prefixes(3).len(), 48);
        assert_eq!(clauses(3, 3).len(), 26);
        assert_eq!(positive_triples(3).len(), 27);
        assert_eq!(labelled_graphs(4).len(), 64);
        assert_eq!(qcsp_corpus(1).count(), 1 + 2 * 3);
        assert_eq!(connected_graphs_up_to(5).len(), 31);
    }

    #[test]
    fn qbf_corpus_shape() {
        let c = qbf_corpus(1, 2, 3);
        // n = 0: one empty instance; n = 1: 2 prefixes × (1 + 2 + 1) clause sets.
        assert_eq!(c.len(), 1 + 2 * 4);
    }

    #[test]
    fn edp_corpus_pairs() {
        let c = edp_corpus(2, 2);
        // Graphs on 2 vertices: empty and an edge; pair sequences (0,1) and (0,1),(0,1).
        assert_eq!(c.len(), 4);
    }

    #[test]
    fn random_stream_is_deterministic() {
        let a: Vec<QcspInstance> = {
            let mut r = RandomCorpus::new(7);
            (0..5).map(|_| r.qcsp(6, 0.4)).collect()
        };
        let mut r = RandomCorpus::new(7);
        let b: Vec<QcspInstance> = (0..5).map(|_| r.qcsp(6, 0.4)).collect();
        assert_eq!(a, b);
    }
}
