//! Quantified instances and their exact evaluators.

mod arena;
pub mod eval;
pub mod formula;
pub mod game;
pub mod qcsp;

pub use arena::Player;
pub use eval::{
    alternation_blocks, is_pi2k, pad_to_strict_alternation, qbf_eval, qbf_eval_with_cap, qnae_eval,
    qnae_eval_with_cap, DEFAULT_BOOLEAN_CAP,
};
pub use formula::{Clause, Literal, Prefix, QbfInstance, QcspInstance, QnaeInstance, Quantifier, Term, Var};
pub use game::{
    alternating_roles, game_qcsp_equivalent, game_winner, qcsp_of_game, Analysis, GameState, GameStatus,
    MoveError, DEFAULT_GAME_CAP, MAX_COLOURS,
};
pub use qcsp::{qcsp_best_moves, qcsp_eval, qcsp_eval_with, QcspOptions, DEFAULT_QCSP_CAP};
