use crate::edp::EdpInstance;
use crate::error::{param, Result};
use crate::graph::subdivide;

/// Subdivides every edge `k` times, `k` the number of pairs, and asks for
/// paths with at least `k` edges. Terminals keep their ids.
pub fn reduce_edp_to_long_edp(inst: &EdpInstance) -> Result<EdpInstance> {
    inst.validate()?;
    if inst.min_length != 0 {
        return Err(param("min_length", "the source must be a classic instance (0)"));
    }
    let k = inst.pairs.len();
    EdpInstance::new(subdivide(&inst.graph, k), inst.pairs.clone(), k)
}
