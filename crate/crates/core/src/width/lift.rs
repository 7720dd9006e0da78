use crate::error::{Error, Result};
use crate::graph::{subdivision_vertex, Graph};
use crate::quantified::formula::Clause;
use crate::width::decomposition::{path_decomposition_error, PathDecomposition};

/// One vertex per variable `0..var_count`, a clique per clause.
pub fn primal_graph(var_count: usize, clauses: &[Clause]) -> Graph {
    let mut edges = Vec::new();
    for clause in clauses {
        let mut vars: Vec<usize> = clause.iter().map(|l| l.var).collect();
        vars.sort_unstable();
        vars.dedup();
        for (i, &a) in vars.iter().enumerate() {
            for &b in &vars[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::new(var_count, edges).expect("clause variables are in range")
}

/// Turns a path decomposition of `g` into one of `subdivide(g, k)` whose width
/// is at most two more.
///
/// The first bag `b` covering an edge is followed by a run of bags
/// `b ∪ {p_i, p_{i+1}}` over the edge's subdivision vertices (a single bag
/// `b ∪ {p_1}` when `k = 1`). Edges whose first bag coincides are processed
/// in sorted edge order.
pub fn lift_decomposition_subdivision(
    g: &Graph,
    d: &PathDecomposition,
    k: usize,
) -> Result<PathDecomposition> {
    if let Some(why) = path_decomposition_error(g, d) {
        return Err(Error::InvalidDecomposition(why));
    }
    if k == 0 {
        return Ok(d.clone());
    }
    let mut first_edges: Vec<Vec<usize>> = vec![Vec::new(); d.bags.len()];
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let first = d
            .bags
            .iter()
            .position(|b| b.contains(&u) && b.contains(&v))
            .expect("validated decomposition covers every edge");
        first_edges[first].push(e);
    }
    let mut bags = Vec::new();
    for (bag, edges) in d.bags.iter().zip(&first_edges) {
        bags.push(bag.clone());
        for &e in edges {
            let p = |j: usize| subdivision_vertex(g, k, e, j);
            if k == 1 {
                bags.push(with(bag, &[p(0)]));
            } else {
                for j in 0..k - 1 {
                    bags.push(with(bag, &[p(j), p(j + 1)]));
                }
            }
        }
    }
    Ok(PathDecomposition::new(bags))
}

fn with(bag: &[usize], extra: &[usize]) -> Vec<usize> {
    bag.iter().chain(extra).copied().collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{clique, path, subdivide};
    use crate::quantified::formula::Literal;
    use crate::width::decomposition::check_path_decomposition;

    #[test]
    fn primal_examples() {
        let one = vec![vec![Literal::pos(0), Literal::neg(1), Literal::pos(2)]];
        assert_eq!(primal_graph(3, &one), clique(3));
        let two = vec![
            vec![Literal::pos(0), Literal::pos(1)],
            vec![Literal::pos(1), Literal::pos(2)],
        ];
        assert_eq!(primal_graph(3, &two), path(3));
        assert_eq!(primal_graph(3, &[]), Graph::empty(3));
    }

    #[test]
    fn triangle_to_c15() {
        let d = PathDecomposition::new(vec![vec![0, 1, 2]]);
        let lifted = lift_decomposition_subdivision(&clique(3), &d, 5).unwrap();
        let c = subdivide(&clique(3), 5);
        assert!(check_path_decomposition(&c, &lifted));
        assert!(lifted.width() <= 4);
    }

    #[test]
    fn small_subdivisions() {
        let d = PathDecomposition::new(vec![vec![0, 1]]);
        for k in 1..=4 {
            let lifted = lift_decomposition_subdivision(&path(2), &d, k).unwrap();
            assert!(check_path_decomposition(&subdivide(&path(2), k), &lifted));
            assert!(lifted.width() <= 3);
        }
    }

    #[test]
    fn rejects_invalid_input() {
        let d = PathDecomposition::new(vec![vec![0], vec![1]]);
        assert!(matches!(
            lift_decomposition_subdivision(&path(2), &d, 2),
            Err(Error::InvalidDecomposition(_))
        ));
    }
}
