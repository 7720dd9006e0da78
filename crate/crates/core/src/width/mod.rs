//! Decomposition certificates, exact width parameters and the constructive
//! decomposition lifts for subdivisions and the QCSP(K3) image.

mod decomposition;
mod exact;
mod lift;

pub use decomposition::{
    check_elimination_forest, check_path_decomposition, check_tree_decomposition,
    path_decomposition_error, vertex_separation, EliminationForest, PathDecomposition,
    TreeDecomposition, VertexOrder,
};
pub use exact::{
    min_vertex_separation, min_vertex_separation_with_cap, pathwidth, pathwidth_with_cap,
    treedepth, treedepth_with_cap, treewidth, treewidth_with_cap, Certified,
    DEFAULT_VERTEX_CAP, HARD_VERTEX_CAP,
};
pub use lift::{lift_decomposition_subdivision, primal_graph};

pub use crate::reductions::phi2::{lift_decomposition_phi2, Phi2Lift};
