use crate::graph::{Graph, Vertex};

/// Gadgets per incident edge: each edge is treated as three parallel edges.
pub const SLOTS_PER_EDGE: usize = 3;

/// Subcubic graph `G'` with `G → C5` iff `G' → C5`.
///
/// A vertex of degree `d` becomes a chain of `3d` five-cycles `c0..c4`
/// (edge `i` joins `c_{i-1}` and `c_i`), consecutive cycles sharing an edge:
/// `c3, c4` of one cycle are `c1, c0` of the next. The top `c2` of the `s`-th
/// cycle is the `s`-th occurrence of the vertex. With neighbours taken in
/// ascending order, the `j`-th edge of `v` uses occurrences `3j..3j+2`, and the
/// matching occurrences of both endpoints are joined. An isolated vertex
/// stays a single vertex.
pub fn c5_chain_reduce(g: &Graph) -> Graph {
    let mut next = 0;
    let mut edges = Vec::new();
    let mut tops: Vec<Vec<Vertex>> = Vec::with_capacity(g.vertex_count());
    for v in g.vertices() {
        let gadgets = SLOTS_PER_EDGE * g.degree(v);
        if gadgets == 0 {
            tops.push(Vec::new());
            next += 1;
            continue;
        }
        let mut fresh = || {
            next += 1;
            next - 1
        };
        let mut vertex_tops = Vec::with_capacity(gadgets);
        let (mut c0, mut c1) = (fresh(), fresh());
        edges.push((c0, c1));
        for _ in 0..gadgets {
            let (c2, c3, c4) = (fresh(), fresh(), fresh());
            edges.extend([(c1, c2), (c2, c3), (c3, c4), (c4, c0)]);
            vertex_tops.push(c2);
            (c0, c1) = (c4, c3);
        }
        tops.push(vertex_tops);
    }
    for &(u, v) in g.edges() {
        let iu = g.neighbours(u).binary_search(&v).expect("adjacent");
        let iv = g.neighbours(v).binary_search(&u).expect("adjacent");
        for s in 0..SLOTS_PER_EDGE {
            edges.push((tops[u][SLOTS_PER_EDGE * iu + s], tops[v][SLOTS_PER_EDGE * iv + s]));
        }
    }
    Graph::new(next, edges).expect("gadget construction is simple")
}
