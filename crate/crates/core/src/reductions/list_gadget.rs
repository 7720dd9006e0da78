//! Bounded-alternation list QCSP gadget: positive NAE triples to
//! `QCSP(K3, {1,2}, {1,3})` on even subdivisions of subcubic graphs.

use std::collections::BTreeSet;

use crate::error::{param, Error, Result};
use crate::graph::{subdivide_with_lists, ColourSet, Graph, Vertex, LIST_UNIVERSE};
use crate::quantified::{Prefix, QcspInstance, QnaeInstance, Quantifier, Term, Var};
use crate::width::VertexOrder;

pub fn one_two() -> ColourSet {
    ColourSet::from_colours([1, 2])
}

pub fn one_three() -> ColourSet {
    ColourSet::from_colours([1, 3])
}

/// Endpoint colour pairs `(a, b)` of `{1,2,3}²` that extend to a proper
/// colouring of a path with `2p + 1` edges whose inner vertices all use
/// `inner`.
pub fn odd_path_gadget_check(p: usize, inner: ColourSet) -> Result<BTreeSet<(u8, u8)>> {
    if inner != one_two() && inner != one_three() {
        return Err(param("inner", format!("must be {{1,2}} or {{1,3}}, got {{{inner}}}")));
    }
    let mut out = BTreeSet::new();
    for a in 1..=3u8 {
        // Colours reachable by the vertex at each distance from `a`.
        let mut frontier = ColourSet::from_colours([a]);
        for _ in 0..2 * p {
            frontier = step(frontier, inner);
        }
        for b in step(frontier, LIST_UNIVERSE).iter() {
            out.insert((a, b));
        }
    }
    Ok(out)
}

fn step(from: ColourSet, allowed: ColourSet) -> ColourSet {
    allowed
        .iter()
        .filter(|&c| from.iter().any(|f| f != c))
        .fold(ColourSet::EMPTY, |s, c| s.union(ColourSet::from_colours([c])))
}

/// Where each base vertex of the gadget graph sits.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListLayout {
    pub z: Vec<Vertex>,
    /// Copies of each variable vertex `x`; the first is joined to `z`.
    pub x: Vec<Vec<Vertex>>,
    /// `C_p, C'_p, C''_p` per triple.
    pub clause: Vec<[Vertex; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListImage {
    pub instance: QcspInstance,
    pub graph: Graph,
    pub order: VertexOrder,
    /// Subcubic graph before subdividing each edge `2p` times.
    pub base: Graph,
    pub layout: ListLayout,
}

/// Builds the gadget graph for a quantified NAE instance whose triples are
/// positive literals.
///
/// Per variable: `z` (any colour, inherits the quantifier) and `x` (list
/// `{1,2}`), joined by an odd path. Per triple `(x_h, x_i, x_j)`: `C` (list
/// `{1,2}`), `C'`, `C''`, with odd paths `x_h–C`, `x_i–C'`, `x_j–C''`, `C–C'`,
/// `C–C''` over inner list `{1,2}` and `C'–C''` over `{1,3}`. A variable used
/// more than twice gets one copy of `x` per use, consecutive copies joined by
/// an even path (two odd paths through a `{1,2}` middle vertex). Every odd
/// path has `2p + 1` edges, so the graph is the `2p`-subdivision of a
/// subcubic base graph.
///
/// Order: the `z` vertices in prefix order, each existential `z` followed by
/// its first `x`, then every other vertex by id. All vertices but the `z`s
/// are existential.
pub fn reduce_pik_qnae_to_list_qcsp(inst: &QnaeInstance, p: usize) -> Result<ListImage> {
    inst.validate()?;
    if p == 0 {
        return Err(param("p", "must be positive; paths have 2p + 1 edges"));
    }
    let mut positive = Vec::with_capacity(inst.triples.len());
    for (i, triple) in inst.triples.iter().enumerate() {
        let mut vars = [0; 3];
        for (j, term) in triple.iter().enumerate() {
            match term {
                Term::Lit(l) if !l.negated => vars[j] = l.var,
                _ => {
                    return Err(Error::Precondition(format!(
                        "triple {i} has a term other than a positive literal"
                    )))
                }
            }
        }
        positive.push(vars);
    }

    let n = inst.prefix.len();
    let mut lists: Vec<ColourSet> = Vec::new();
    let mut add = |list: ColourSet| {
        lists.push(list);
        lists.len() - 1
    };
    let z: Vec<Vertex> = (0..n).map(|_| add(LIST_UNIVERSE)).collect();
    let first_x: Vec<Vertex> = (0..n).map(|_| add(one_two())).collect();
    let clause: Vec<[Vertex; 3]> = positive
        .iter()
        .map(|_| [add(one_two()), add(LIST_UNIVERSE), add(LIST_UNIVERSE)])
        .collect();

    let mut uses: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (t, vars) in positive.iter().enumerate() {
        for (slot, &v) in vars.iter().enumerate() {
            uses[v].push((t, slot));
        }
    }
    let mut edges: Vec<(Vertex, Vertex)> = (0..n).map(|v| (z[v], first_x[v])).collect();
    let mut x: Vec<Vec<Vertex>> = first_x.iter().map(|&v| vec![v]).collect();
    let mut attach: Vec<[Vertex; 3]> = vec![[0; 3]; positive.len()];
    for v in 0..n {
        let split = uses[v].len() > 2;
        for (k, &(t, slot)) in uses[v].iter().enumerate() {
            let copy = if split && k > 0 {
                let middle = add(one_two());
                let copy = add(one_two());
                edges.push((*x[v].last().expect("first copy"), middle));
                edges.push((middle, copy));
                x[v].push(copy);
                copy
            } else {
                x[v][0]
            };
            attach[t][slot] = copy;
        }
    }
    let mut odd13 = Vec::new();
    for (t, &[c, c1, c2]) in clause.iter().enumerate() {
        edges.extend([(attach[t][0], c), (attach[t][1], c1), (attach[t][2], c2), (c, c1), (c, c2), (c1, c2)]);
        odd13.push((c1.min(c2), c1.max(c2)));
    }
    let base = Graph::new(lists.len(), edges)?.with_lists(lists)?;
    let graph = subdivide_with_lists(&base, 2 * p, |e| {
        if odd13.contains(&base.edges()[e]) {
            one_three()
        } else {
            one_two()
        }
    });

    let mut quantifiers = vec![Quantifier::Exists; graph.vertex_count()];
    let mut order = Vec::with_capacity(graph.vertex_count());
    let mut placed = vec![false; graph.vertex_count()];
    for &(q, v) in inst.prefix.entries() {
        quantifiers[z[v]] = q;
        order.push(z[v]);
        placed[z[v]] = true;
        if q == Quantifier::Exists {
            order.push(first_x[v]);
            placed[first_x[v]] = true;
        }
    }
    order.extend(graph.vertices().filter(|&v| !placed[v]));
    let order = VertexOrder::new(order)?;

    let prefix = Prefix::new(order.as_slice().iter().map(|&v| (quantifiers[v], v)).collect())?;
    let list_atoms: Vec<(Var, ColourSet)> = graph
        .lists()
        .expect("gadget graph has lists")
        .iter()
        .enumerate()
        .filter(|&(_, &l)| l != LIST_UNIVERSE)
        .map(|(v, &l)| (v, l))
        .collect();
    let instance = QcspInstance::new(prefix, graph.edges().to_vec(), list_atoms)?;
    Ok(ListImage {
        instance,
        graph,
        order,
        base,
        layout: ListLayout { z, x, clause },
    })
}
