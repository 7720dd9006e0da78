use crate::error::{param, Error, Result};
use crate::graph::{clique, cycle, every_edge_in_triangle, subdivide, triangle_augment, Graph};

/// Largest `r` accepted; `C_{3·5^r}` grows quickly.
pub const MAX_SUBDIVISION_EXPONENT: u32 = 4;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeColSubdivision {
    /// The input, triangle-augmented if it needed to be.
    pub source: Graph,
    pub augmented: bool,
    /// `source` with every edge subdivided `5^r - 1` times.
    pub graph: Graph,
    /// `C_{3·5^r}`.
    pub target: Graph,
}

/// `G → K3` iff `G^{5^r-1} → C_{3·5^r}` for connected `G` with every edge in
/// a triangle. Edges outside triangles get a fresh apex first.
pub fn reduce_3col_by_subdivision(g: &Graph, r: u32) -> Result<ThreeColSubdivision> {
    if r == 0 || r > MAX_SUBDIVISION_EXPONENT {
        return Err(param("r", format!("must be in 1..={MAX_SUBDIVISION_EXPONENT}, got {r}")));
    }
    if !g.is_connected() {
        return Err(Error::Precondition("graph must be connected".into()));
    }
    let augmented = !every_edge_in_triangle(g);
    let source = if augmented { triangle_augment(g) } else { g.clone() };
    let scale = 5usize.pow(r);
    Ok(ThreeColSubdivision {
        graph: subdivide(&source, scale - 1),
        target: cycle(3 * scale),
        source,
        augmented,
    })
}

/// `(G^r, K4^r)` for subcubic `G`.
pub fn local_hom_subdivision_pair(g: &Graph, r: usize) -> Result<(Graph, Graph)> {
    if r == 0 {
        return Err(param("r", "must be positive"));
    }
    if !g.is_subcubic() {
        return Err(Error::Precondition(format!(
            "graph must be subcubic, has maximum degree {}",
            g.max_degree()
        )));
    }
    Ok((subdivide(g, r), subdivide(&clique(4), r)))
}
