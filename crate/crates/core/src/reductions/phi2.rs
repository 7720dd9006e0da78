//! Quantified NAE to QCSP(K3), and the path decomposition lift for its image.

use crate::error::{Error, Result};
use crate::graph::{Graph, Vertex};
use crate::quantified::{Prefix, QbfInstance, QcspInstance, QnaeInstance, Quantifier, Term, Var};
use crate::reductions::qbf_qnae::{reduce_qbf_to_qnae, QnaeImage};
use crate::width::{path_decomposition_error, primal_graph, PathDecomposition, VertexOrder};

/// Vertex numbering of the image: `W = 0`, `F = 1`, then `x, y, z` for each
/// variable, then three triangle corners per triple.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Phi2Layout {
    pub vars: usize,
    pub triples: usize,
}

impl Phi2Layout {
    pub const W: Vertex = 0;
    pub const F: Vertex = 1;

    pub fn x(&self, v: Var) -> Vertex {
        2 + 3 * v
    }

    pub fn y(&self, v: Var) -> Vertex {
        3 + 3 * v
    }

    pub fn z(&self, v: Var) -> Vertex {
        4 + 3 * v
    }

    pub fn corner(&self, triple: usize, j: usize) -> Vertex {
        2 + 3 * self.vars + 3 * triple + j
    }

    pub fn vertex_count(&self) -> usize {
        2 + 3 * self.vars + 3 * self.triples
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi2Image {
    /// Variables are the graph's vertices; the prefix follows `order`.
    pub instance: QcspInstance,
    pub graph: Graph,
    pub order: VertexOrder,
    /// Quantifier of each vertex.
    pub quantifiers: Vec<Quantifier>,
    pub layout: Phi2Layout,
}

/// Builds the K3 image: a hub edge `W–F`, a path `x–y–z` per variable with
/// `W` adjacent to every `x` and `y`, and a triangle per triple whose corners
/// attach to `x` (positive literal), `y` (negative literal) or `F`.
///
/// Every vertex is existential except `z`, which inherits its variable's
/// quantifier. The order is `W, F`, then the `z` vertices in prefix order,
/// each existential `z` immediately followed by its `x` and `y`, then the
/// remaining `x, y` and the triangles. Keeping an existential variable's `x`
/// ahead of later universal variables is needed for soundness: otherwise
/// Existential may colour `z` with 3 and fix the value only after seeing
/// later universal choices.
pub fn reduce_qnae_to_qcsp(inst: &QnaeInstance) -> Result<Phi2Image> {
    inst.validate()?;
    let layout = Phi2Layout {
        vars: inst.prefix.len(),
        triples: inst.triples.len(),
    };
    let (w, f) = (Phi2Layout::W, Phi2Layout::F);
    let mut edges = vec![(w, f)];
    for v in 0..layout.vars {
        let (x, y, z) = (layout.x(v), layout.y(v), layout.z(v));
        edges.extend([(w, x), (w, y), (x, y), (y, z)]);
    }
    for (p, triple) in inst.triples.iter().enumerate() {
        let c = |j| layout.corner(p, j);
        edges.extend([(c(0), c(1)), (c(0), c(2)), (c(1), c(2))]);
        for (j, term) in triple.iter().enumerate() {
            let attach = match term {
                Term::Lit(l) if l.negated => layout.y(l.var),
                Term::Lit(l) => layout.x(l.var),
                Term::False => f,
            };
            edges.push((attach, c(j)));
        }
    }
    let graph = Graph::new(layout.vertex_count(), edges)?;

    let mut quantifiers = vec![Quantifier::Exists; layout.vertex_count()];
    let mut order = vec![w, f];
    let mut deferred = Vec::new();
    for &(q, v) in inst.prefix.entries() {
        quantifiers[layout.z(v)] = q;
        order.push(layout.z(v));
        let xy = [layout.x(v), layout.y(v)];
        match q {
            Quantifier::Exists => order.extend(xy),
            Quantifier::Forall => deferred.extend(xy),
        }
    }
    order.extend(deferred);
    order.extend((0..3 * layout.triples).map(|i| layout.corner(0, 0) + i));
    let order = VertexOrder::new(order)?;

    let prefix = Prefix::new(order.as_slice().iter().map(|&v| (quantifiers[v], v)).collect())?;
    let instance = QcspInstance::new(prefix, graph.edges().to_vec(), Vec::new())?;
    Ok(Phi2Image {
        instance,
        graph,
        order,
        quantifiers,
        layout,
    })
}

/// Both steps from a QBF to its K3 image.
pub fn reduce_qbf_to_qcsp(inst: &QbfInstance) -> Result<(QnaeImage, Phi2Image)> {
    let qnae = reduce_qbf_to_qnae(inst)?;
    let image = reduce_qnae_to_qcsp(&qnae.instance)?;
    Ok((qnae, image))
}

/// One bag of a lifted decomposition and where it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LiftedBag {
    /// Index of the source bag in the input decomposition.
    pub source: usize,
    pub source_size: usize,
    /// Clause associated with this copy of the source bag, with its width.
    pub clause: Option<(usize, usize)>,
    /// Vertices added for the clause: its fresh variables and triangles.
    pub clause_vertices: usize,
    pub size: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Phi2Lift {
    pub decomposition: PathDecomposition,
    pub image: Phi2Image,
    pub bags: Vec<LiftedBag>,
    /// Width of the input decomposition.
    pub source_width: usize,
}

impl Phi2Lift {
    pub fn width(&self) -> usize {
        self.decomposition.width()
    }

    /// `9w + 2` for the input width `w`.
    pub fn bound(&self) -> usize {
        9 * self.source_width + 2
    }
}

/// Lifts a path decomposition of the primal graph of `f` to one of the graph
/// of `reduce_qbf_to_qcsp(f)`.
///
/// Each clause is associated with the first bag holding all its variables; a
/// bag with several associated clauses is first replaced by one copy per
/// clause. A bag `b` becomes `{W, F} ∪ {x_v, y_v, z_v : v ∈ b}` plus, if a
/// clause is associated with it, the clause's fresh variables and triangles.
pub fn lift_decomposition_phi2(f: &QbfInstance, d: &PathDecomposition) -> Result<Phi2Lift> {
    f.validate()?;
    let primal = primal_graph(f.var_count(), &f.clauses);
    if let Some(why) = path_decomposition_error(&primal, d) {
        return Err(Error::InvalidDecomposition(why));
    }
    let (qnae, image) = reduce_qbf_to_qcsp(f)?;
    let layout = image.layout;

    let source_bags: Vec<Vec<Vertex>> = if d.bags.is_empty() {
        vec![Vec::new()]
    } else {
        d.bags.clone()
    };
    let mut associated: Vec<Vec<usize>> = vec![Vec::new(); source_bags.len()];
    for (i, clause) in f.clauses.iter().enumerate() {
        let first = source_bags
            .iter()
            .position(|b| clause.iter().all(|l| b.contains(&l.var)))
            .expect("clause variables form a clique of the primal graph");
        associated[first].push(i);
    }

    let mut bags = Vec::new();
    let mut report = Vec::new();
    for (s, bag) in source_bags.iter().enumerate() {
        let mut base = vec![Phi2Layout::W, Phi2Layout::F];
        for &v in bag {
            base.extend([layout.x(v), layout.y(v), layout.z(v)]);
        }
        let copies: Vec<Option<usize>> = if associated[s].is_empty() {
            vec![None]
        } else {
            associated[s].iter().copied().map(Some).collect()
        };
        for clause in copies {
            let mut lifted = base.clone();
            if let Some(i) = clause {
                for &q in &qnae.clause_fresh[i] {
                    lifted.extend([layout.x(q), layout.y(q), layout.z(q)]);
                }
                for p in qnae.clause_triples[i].clone() {
                    lifted.extend((0..3).map(|j| layout.corner(p, j)));
                }
            }
            report.push(LiftedBag {
                source: s,
                source_size: bag.len(),
                clause: clause.map(|i| (i, f.clauses[i].len())),
                clause_vertices: lifted.len() - base.len(),
                size: lifted.len(),
            });
            bags.push(lifted);
        }
    }
    Ok(Phi2Lift {
        decomposition: PathDecomposition::new(bags),
        image,
        bags: report,
        source_width: d.width(),
    })
}
