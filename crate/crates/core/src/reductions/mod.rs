//! Instance transformations between the problems, each paired with an
//! oracle-backed check in [`verify`].

mod c5chain;
mod edp;
mod list_gadget;
pub(crate) mod phi2;
mod qbf_qnae;
mod subdivision;
pub mod verify;

pub use c5chain::{c5_chain_reduce, SLOTS_PER_EDGE};
pub use edp::reduce_edp_to_long_edp;
pub use list_gadget::{odd_path_gadget_check, one_three, one_two, reduce_pik_qnae_to_list_qcsp, ListImage, ListLayout};
pub use phi2::{reduce_qbf_to_qcsp, reduce_qnae_to_qcsp, LiftedBag, Phi2Image, Phi2Layout};
pub use qbf_qnae::{reduce_qbf_to_qnae, QnaeImage};
pub use subdivision::{
    local_hom_subdivision_pair, reduce_3col_by_subdivision, ThreeColSubdivision, MAX_SUBDIVISION_EXPONENT,
};
pub use verify::{verify_reduction, ReductionReport, SizeStats, Suite};
