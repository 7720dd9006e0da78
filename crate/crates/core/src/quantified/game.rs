//! Sequential colouring construction game.
//!
//! Vertices are coloured in a fixed order, each by the player owning its
//! position. A colour must lie in `1..=k`, in the vertex's list if it has one,
//! and differ from every coloured neighbour. Existential wins iff every vertex
//! gets coloured; a mover with no legal colour ends the game and Existential
//! loses.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{ColourSet, Graph, Vertex, LIST_UNIVERSE};
use crate::quantified::arena::{Arena, Player, UniversalRule};
use crate::quantified::formula::{Prefix, QcspInstance, Quantifier};
use crate::width::VertexOrder;

/// Largest colour count a game may use.
pub const MAX_COLOURS: u8 = 16;
/// Largest graph the game solver accepts by default.
pub const DEFAULT_GAME_CAP: usize = 256;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GameStatus {
    InProgress,
    ExistentialWon,
    UniversalWon,
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum MoveError {
    #[error("the game is already over")]
    GameOver,
    #[error("colour {colour} is outside 1..={k}")]
    OutOfRange { colour: u8, k: u8 },
    #[error("colour {colour} is not in the list {{{list}}} of vertex {vertex}")]
    NotInList {
        vertex: Vertex,
        colour: u8,
        list: ColourSet,
    },
    #[error("vertex {vertex} has neighbour {neighbour} already coloured {colour}")]
    MonochromeNeighbour {
        vertex: Vertex,
        neighbour: Vertex,
        colour: u8,
    },
}

struct Game {
    graph: Graph,
    order: VertexOrder,
    position: Vec<usize>,
    k: u8,
    roles: Vec<Player>,
    arena: Arena,
}

/// An immutable game position. Cloning is cheap; the rules are shared.
#[derive(Clone)]
pub struct GameState {
    game: Arc<Game>,
    played: Vec<u8>,
}

/// Outcome under optimal play from a position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Analysis {
    pub winner: Player,
    /// Legal colours for the mover after which the mover still wins.
    pub non_losing: ColourSet,
}

/// Strict alternation starting with Existential.
pub fn alternating_roles(n: usize) -> Vec<Player> {
    (0..n)
        .map(|i| if i % 2 == 0 { Player::Existential } else { Player::Universal })
        .collect()
}

impl GameState {
    /// `roles[i]` owns the `i`-th vertex of `order`; `None` means strict
    /// alternation starting with Existential.
    pub fn new(graph: Graph, order: VertexOrder, k: u8, roles: Option<Vec<Player>>) -> Result<Self> {
        GameState::with_cap(graph, order, k, roles, DEFAULT_GAME_CAP)
    }

    pub fn with_cap(
        graph: Graph,
        order: VertexOrder,
        k: u8,
        roles: Option<Vec<Player>>,
        cap: usize,
    ) -> Result<Self> {
        let n = graph.vertex_count();
        if order.len() != n {
            return Err(crate::error::param(
                "order",
                format!("covers {} vertices, graph has {n}", order.len()),
            ));
        }
        if k == 0 || k > MAX_COLOURS {
            return Err(crate::error::param("k", format!("must be in 1..={MAX_COLOURS}, got {k}")));
        }
        if n > cap {
            return Err(Error::TooLarge {
                what: "vertex count",
                actual: n,
                cap,
            });
        }
        let roles = roles.unwrap_or_else(|| alternating_roles(n));
        if roles.len() != n {
            return Err(crate::error::param(
                "roles",
                format!("has {} entries, graph has {n} vertices", roles.len()),
            ));
        }
        let position = order.positions();
        let allowed = order
            .as_slice()
            .iter()
            .map(|&v| graph.list(v).unwrap_or(ColourSet::full(k)))
            .collect();
        let pairs: Vec<(usize, usize)> = graph
            .edges()
            .iter()
            .map(|&(u, v)| (position[u], position[v]))
            .collect();
        let arena = Arena::new(k, roles.clone(), allowed, pairs, UniversalRule::LegalOnly);
        Ok(GameState {
            game: Arc::new(Game {
                graph,
                order,
                position,
                k,
                roles,
                arena,
            }),
            played: Vec::new(),
        })
    }

    /// Replays `moves` from the start of the game.
    pub fn replay(&self, moves: &[u8]) -> Result<GameState> {
        let mut state = self.initial();
        for &c in moves {
            state = state.apply_move(c)?;
        }
        Ok(state)
    }

    pub fn initial(&self) -> GameState {
        GameState {
            game: Arc::clone(&self.game),
            played: Vec::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.game.graph
    }

    pub fn order(&self) -> &VertexOrder {
        &self.game.order
    }

    pub fn k(&self) -> u8 {
        self.game.k
    }

    pub fn roles(&self) -> &[Player] {
        &self.game.roles
    }

    /// Colours played so far, in order.
    pub fn moves(&self) -> &[u8] {
        &self.played
    }

    pub fn colour_of(&self, v: Vertex) -> Option<u8> {
        self.played.get(self.game.position[v]).copied()
    }

    /// Colour per vertex id.
    pub fn colouring(&self) -> Vec<Option<u8>> {
        self.game.graph.vertices().map(|v| self.colour_of(v)).collect()
    }

    pub fn next_vertex(&self) -> Option<Vertex> {
        self.game.order.as_slice().get(self.played.len()).copied()
    }

    /// The player to move, or `None` once the game is over.
    pub fn turn(&self) -> Option<Player> {
        match self.status() {
            GameStatus::InProgress => Some(self.game.roles[self.played.len()]),
            _ => None,
        }
    }

    pub fn legal_moves(&self) -> ColourSet {
        if self.played.len() >= self.game.order.len() {
            return ColourSet::EMPTY;
        }
        self.game.arena.legal(&self.played)
    }

    pub fn status(&self) -> GameStatus {
        if self.played.len() == self.game.order.len() {
            GameStatus::ExistentialWon
        } else if self.legal_moves().is_empty() {
            GameStatus::UniversalWon
        } else {
            GameStatus::InProgress
        }
    }

    pub fn apply_move(&self, colour: u8) -> Result<GameState, MoveError> {
        if self.status() != GameStatus::InProgress {
            return Err(MoveError::GameOver);
        }
        let k = self.game.k;
        if colour == 0 || colour > k {
            return Err(MoveError::OutOfRange { colour, k });
        }
        let v = self.next_vertex().expect("game in progress");
        if let Some(list) = self.game.graph.list(v) {
            if !list.contains(colour) {
                return Err(MoveError::NotInList { vertex: v, colour, list });
            }
        }
        if let Some(&u) = self
            .game
            .graph
            .neighbours(v)
            .iter()
            .find(|&&u| self.colour_of(u) == Some(colour))
        {
            return Err(MoveError::MonochromeNeighbour {
                vertex: v,
                neighbour: u,
                colour,
            });
        }
        let mut played = self.played.clone();
        played.push(colour);
        Ok(GameState {
            game: Arc::clone(&self.game),
            played,
        })
    }

    /// Winner under optimal play and the mover's non-losing colours.
    pub fn analyse(&self) -> Analysis {
        match self.status() {
            GameStatus::ExistentialWon => Analysis {
                winner: Player::Existential,
                non_losing: ColourSet::EMPTY,
            },
            GameStatus::UniversalWon => Analysis {
                winner: Player::Universal,
                non_losing: ColourSet::EMPTY,
            },
            GameStatus::InProgress => {
                let non_losing = self.game.arena.winning_moves(&self.played);
                let mover = self.game.roles[self.played.len()];
                let winner = if non_losing.is_empty() { mover.other() } else { mover };
                Analysis { winner, non_losing }
            }
        }
    }

    pub fn winner(&self) -> Player {
        if self.game.arena.existential_wins(&self.played) {
            Player::Existential
        } else {
            Player::Universal
        }
    }
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GameState")
            .field("order", &self.game.order.as_slice())
            .field("k", &self.game.k)
            .field("played", &self.played)
            .finish()
    }
}

impl PartialEq for GameState {
    fn eq(&self, other: &Self) -> bool {
        self.played == other.played
            && self.game.k == other.game.k
            && self.game.graph == other.game.graph
            && self.game.order == other.game.order
            && self.game.roles == other.game.roles
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Game").field("k", &self.k).finish_non_exhaustive()
    }
}

impl fmt::Debug for Arena {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Arena").field("positions", &self.len()).finish_non_exhaustive()
    }
}

/// Winner of the game from the start under optimal play.
pub fn game_winner(g: &Graph, order: &VertexOrder, k: u8, roles: Option<&[Player]>) -> Result<Player> {
    let state = GameState::new(g.clone(), order.clone(), k, roles.map(<[Player]>::to_vec))?;
    Ok(state.winner())
}

/// True iff no universal position has an earlier neighbour and every universal
/// vertex may use all three colours, so Universal is never constrained and
/// the 3-colour game coincides with QCSP semantics.
pub fn game_qcsp_equivalent(g: &Graph, order: &VertexOrder, roles: Option<&[Player]>) -> bool {
    let default_roles;
    let roles = match roles {
        Some(r) => r,
        None => {
            default_roles = alternating_roles(order.len());
            &default_roles
        }
    };
    let position = order.positions();
    order.as_slice().iter().zip(roles).all(|(&v, &role)| {
        role == Player::Existential
            || (g.neighbours(v).iter().all(|&u| position[u] > position[v])
                && g.list(v).is_none_or(|l| l == LIST_UNIVERSE))
    })
}

/// The sentence whose variables are the vertices, quantified in play order.
pub fn qcsp_of_game(g: &Graph, order: &VertexOrder, roles: Option<&[Player]>) -> Result<QcspInstance> {
    let n = g.vertex_count();
    if order.len() != n {
        return Err(crate::error::param("order", "does not cover the graph"));
    }
    let roles = roles.map(<[Player]>::to_vec).unwrap_or_else(|| alternating_roles(n));
    let entries = order
        .as_slice()
        .iter()
        .zip(&roles)
        .map(|(&v, role)| {
            let q = match role {
                Player::Existential => Quantifier::Exists,
                Player::Universal => Quantifier::Forall,
            };
            (q, v)
        })
        .collect();
    let lists = g
        .lists()
        .map(|ls| {
            ls.iter()
                .enumerate()
                .filter(|&(_, &l)| l != LIST_UNIVERSE)
                .map(|(v, &l)| (v, l))
                .collect()
        })
        .unwrap_or_default();
    QcspInstance::new_with_any_lists(Prefix::new(entries)?, g.edges().to_vec(), lists)
}
