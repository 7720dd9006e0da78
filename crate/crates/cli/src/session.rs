//! Game sessions: a human plays one side of the colouring game, the engine
//! the other. Every transition goes through `GameState::apply_move`.

use std::collections::HashMap;
use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::Path;
use std::sync::{Arc, Mutex, RwLock};

use c123::format::parse_graph;
use c123::graph::ColourSet;
use c123::quantified::{alternating_roles, GameState, GameStatus, MoveError, Player};
use c123::width::VertexOrder;
use c123::{Graph, Vertex};
use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;
use uuid::Uuid;

#[derive(Debug, Error)]
pub enum SessionError {
    #[error("no session with id {0}")]
    NotFound(String),
    #[error("{0}")]
    BadRequest(String),
    #[error("it is {0}")]
    OutOfTurn(String),
    #[error("the game is over")]
    GameOver,
    #[error("illegal move: {0}")]
    IllegalMove(MoveError),
    #[error("no human move to undo")]
    NothingToUndo,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateSession {
    /// Either `graph` (structured) or `graph_text` (line format).
    #[serde(default)]
    pub graph: Option<Graph>,
    #[serde(default)]
    pub graph_text: Option<String>,
    /// Play order; defaults to `0..n`.
    #[serde(default)]
    pub order: Option<Vec<Vertex>>,
    pub k: u8,
    /// Per-vertex lists, replacing any carried by the graph.
    #[serde(default)]
    pub lists: Option<Vec<ColourSet>>,
    pub human: Player,
    /// Player of each order position; defaults to strict alternation from
    /// Existential.
    #[serde(default)]
    pub roles: Option<Vec<Player>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: Uuid,
    pub graph: Graph,
    pub order: Vec<Vertex>,
    pub k: u8,
    pub roles: Vec<Player>,
    pub human: Player,
    pub engine: Player,
    /// Colour of each vertex, `null` while uncoloured.
    pub colouring: Vec<Option<u8>>,
    /// Colours played so far, in order.
    pub history: Vec<u8>,
    pub next_vertex: Option<Vertex>,
    pub turn: Option<Player>,
    pub legal: ColourSet,
    pub status: GameStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MoveOutcome {
    pub state: SessionView,
    pub engine_moves: Vec<u8>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisView {
    pub status: GameStatus,
    pub mover: Option<Player>,
    /// Winner under optimal play from the current position.
    pub winner: Player,
    pub non_losing: ColourSet,
}

pub struct Session {
    id: Uuid,
    initial: GameState,
    state: GameState,
    human: Player,
}

impl Session {
    pub fn view(&self) -> SessionView {
        let s = &self.state;
        SessionView {
            id: self.id,
            graph: s.graph().clone(),
            order: s.order().as_slice().to_vec(),
            k: s.k(),
            roles: s.roles().to_vec(),
            human: self.human,
            engine: self.human.other(),
            colouring: s.colouring(),
            history: s.moves().to_vec(),
            next_vertex: s.next_vertex(),
            turn: s.turn(),
            legal: s.legal_moves(),
            status: s.status(),
        }
    }

    pub fn analysis(&self) -> AnalysisView {
        let a = self.state.analyse();
        AnalysisView {
            status: self.state.status(),
            mover: self.state.turn(),
            winner: a.winner,
            non_losing: a.non_losing,
        }
    }

    /// Lets the engine move until it is the human's turn or the game ends.
    fn engine_reply(&mut self) -> Vec<u8> {
        let mut played = Vec::new();
        while self.state.status() == GameStatus::InProgress && self.state.turn() == Some(self.human.other()) {
            let analysis = self.state.analyse();
            let colour = analysis
                .non_losing
                .iter()
                .next()
                .or_else(|| self.state.legal_moves().iter().next())
                .expect("a mover without legal colours has already lost");
            self.state = self.state.apply_move(colour).expect("engine plays legal colours");
            played.push(colour);
        }
        played
    }

    /// Plays the human's colour for the next vertex, then the engine's
    /// replies. A client may name the vertex it means to colour; a stale
    /// name is rejected as out of turn.
    pub fn play(&mut self, colour: u8, vertex: Option<Vertex>) -> Result<Vec<u8>, SessionError> {
        if self.state.status() != GameStatus::InProgress {
            return Err(SessionError::GameOver);
        }
        let next = self.state.next_vertex().expect("in progress");
        match self.state.turn() {
            Some(p) if p != self.human => return Err(SessionError::OutOfTurn(format!("{p:?}'s turn"))),
            _ => {}
        }
        if let Some(v) = vertex.filter(|&v| v != next) {
            return Err(SessionError::OutOfTurn(format!("vertex {next}'s turn, not vertex {v}'s")));
        }
        self.state = self.state.apply_move(colour).map_err(SessionError::IllegalMove)?;
        Ok(self.engine_reply())
    }

    /// Pops the last human move together with the engine replies after it.
    pub fn undo(&mut self) -> Result<(), SessionError> {
        let moves = self.state.moves();
        let roles = self.state.roles();
        let last = (0..moves.len())
            .rev()
            .find(|&i| roles[i] == self.human)
            .ok_or(SessionError::NothingToUndo)?;
        self.state = self.initial.replay(&moves[..last]).expect("prefix of a legal history");
        Ok(())
    }

    /// Replays the history from the initial position.
    pub fn replayed(&self) -> GameState {
        self.initial.replay(self.state.moves()).expect("history is legal")
    }

    pub fn state(&self) -> &GameState {
        &self.state
    }
}

fn build_game(req: &CreateSession) -> Result<GameState, SessionError> {
    let bad = |e: c123::Error| SessionError::BadRequest(e.to_string());
    let graph = match (&req.graph, &req.graph_text) {
        (Some(g), None) => g.clone(),
        (None, Some(text)) => parse_graph(text).map_err(bad)?,
        _ => return Err(SessionError::BadRequest("give exactly one of `graph` and `graph_text`".into())),
    };
    let graph = match &req.lists {
        Some(lists) => graph.with_lists(lists.clone()).map_err(bad)?,
        None => graph,
    };
    let n = graph.vertex_count();
    let order = match &req.order {
        Some(o) => VertexOrder::new(o.clone()).map_err(bad)?,
        None => VertexOrder::identity(n),
    };
    if let Some(roles) = &req.roles {
        if roles.len() != n {
            return Err(SessionError::BadRequest(format!("`roles` has {} entries for {n} vertices", roles.len())));
        }
    }
    let roles = req.roles.clone().unwrap_or_else(|| alternating_roles(n));
    GameState::new(graph, order, req.k, Some(roles)).map_err(bad)
}

#[derive(Default)]
pub struct Store {
    sessions: RwLock<HashMap<Uuid, Arc<Mutex<Session>>>>,
    log: Option<Mutex<File>>,
}

impl Store {
    pub fn new() -> Self {
        Store::default()
    }

    /// Appends one JSON line per create, move and undo to `path`.
    pub fn with_log(path: &Path) -> std::io::Result<Self> {
        let file = OpenOptions::new().create(true).append(true).open(path)?;
        Ok(Store {
            sessions: RwLock::default(),
            log: Some(Mutex::new(file)),
        })
    }

    fn record(&self, entry: serde_json::Value) {
        if let Some(log) = &self.log {
            let mut file = log.lock().expect("log lock");
            // The log is best effort; a failed write must not fail the move.
            let _ = writeln!(file, "{entry}");
        }
    }

    pub fn create(&self, req: &CreateSession) -> Result<SessionView, SessionError> {
        let initial = build_game(req)?;
        let mut session = Session {
            id: Uuid::new_v4(),
            state: initial.clone(),
            initial,
            human: req.human,
        };
        let engine_moves = session.engine_reply();
        let view = session.view();
        self.record(json!({
            "session": view.id,
            "event": "create",
            "graph": view.graph,
            "order": view.order,
            "k": view.k,
            "roles": view.roles,
            "human": view.human,
            "engine_moves": engine_moves,
        }));
        self.sessions
            .write()
            .expect("session table lock")
            .insert(view.id, Arc::new(Mutex::new(session)));
        Ok(view)
    }

    pub fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, SessionError> {
        let uuid = Uuid::parse_str(id).map_err(|_| SessionError::NotFound(id.to_string()))?;
        self.sessions
            .read()
            .expect("session table lock")
            .get(&uuid)
            .cloned()
            .ok_or_else(|| SessionError::NotFound(id.to_string()))
    }

    pub fn view(&self, id: &str) -> Result<SessionView, SessionError> {
        Ok(self.get(id)?.lock().expect("session lock").view())
    }

    pub fn analysis(&self, id: &str) -> Result<AnalysisView, SessionError> {
        Ok(self.get(id)?.lock().expect("session lock").analysis())
    }

    pub fn play(&self, id: &str, colour: u8, vertex: Option<Vertex>) -> Result<MoveOutcome, SessionError> {
        let session = self.get(id)?;
        let mut session = session.lock().expect("session lock");
        let engine_moves = session.play(colour, vertex)?;
        self.record(json!({"session": session.id, "event": "move", "colour": colour, "engine_moves": engine_moves}));
        Ok(MoveOutcome {
            state: session.view(),
            engine_moves,
        })
    }

    pub fn undo(&self, id: &str) -> Result<SessionView, SessionError> {
        let session = self.get(id)?;
        let mut session = session.lock().expect("session lock");
        session.undo()?;
        self.record(json!({"session": session.id, "event": "undo"}));
        Ok(session.view())
    }
}
