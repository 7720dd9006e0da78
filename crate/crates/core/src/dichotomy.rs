//! Membership in the class of disjoint unions of paths and subdivided claws,
//! and the resulting classification of finite forbidden-subgraph sets.

use serde::{Deserialize, Serialize};

use crate::error::{param, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    EfficientlySolvable,
    ComputationallyHard,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyVerdict {
    pub verdict: Verdict,
    /// Index into the input set of the first member of the class.
    pub witness: Option<usize>,
}

/// True iff every component of `h` is a path or a tree with exactly one
/// vertex of degree 3 and all others of degree at most 2.
pub fn in_class_s(h: &Graph) -> bool {
    h.components().iter().all(|comp| {
        let edges: usize = comp.iter().map(|&v| h.degree(v)).sum::<usize>() / 2;
        if edges + 1 != comp.len() {
            return false;
        }
        let mut branch = 0;
        for &v in comp {
            match h.degree(v) {
                0..=2 => {}
                3 => branch += 1,
                _ => return false,
            }
        }
        branch <= 1
    })
}

/// Classifies the class of graphs excluding every member of `hs` as a
/// subgraph: efficiently solvable iff some member lies in the class.
pub fn theorem1_classify(hs: &[Graph]) -> Result<DichotomyVerdict> {
    if hs.is_empty() {
        return Err(param("hs", "the forbidden set must be non-empty"));
    }
    Ok(match hs.iter().position(in_class_s) {
        Some(i) => DichotomyVerdict {
            verdict: Verdict::EfficientlySolvable,
            witness: Some(i),
        },
        None => DichotomyVerdict {
            verdict: Verdict::ComputationallyHard,
            witness: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{claw, clique, cycle, make_named, path, NamedGraph};

    #[test]
    fn membership() {
        assert!(in_class_s(&claw()));
        assert!(in_class_s(&path(1)));
        assert!(!in_class_s(&cycle(4)));
        assert!(!in_class_s(&make_named(NamedGraph::Star(4)).unwrap()));
        let sc = make_named(NamedGraph::SubdividedClaw(1, 2, 3)).unwrap();
        assert!(in_class_s(&path(4).disjoint_union(&sc)));
        // Two branch vertices in one tree.
        let h = Graph::new(6, [(0, 1), (0, 2), (0, 3), (3, 4), (3, 5)]).unwrap();
        assert!(!in_class_s(&h));
    }

    #[test]
    fn classification() {
        let v = theorem1_classify(&[path(3)]).unwrap();
        assert_eq!(v.verdict, Verdict::EfficientlySolvable);
        let v = theorem1_classify(&[clique(3)]).unwrap();
        assert_eq!(v.verdict, Verdict::ComputationallyHard);
        assert_eq!(v.witness, None);
        let v = theorem1_classify(&[cycle(4), claw()]).unwrap();
        assert_eq!(v.witness, Some(1));
        assert!(theorem1_classify(&[]).is_err());
    }
}
