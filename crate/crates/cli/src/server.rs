//! HTTP routes over [`Store`]. Bodies are JSON.
//!
//! | method | path                     | body                 | reply            |
//! |--------|--------------------------|----------------------|------------------|
//! | POST   | `/sessions`              | [`CreateSession`]    | 201 [`SessionView`] |
//! | GET    | `/sessions/{id}`         |                      | [`SessionView`]  |
//! | POST   | `/sessions/{id}/moves`   | `{"colour": c, "vertex"?: v}` | [`MoveOutcome`] |
//! | GET    | `/sessions/{id}/analysis`|                      | [`AnalysisView`] |
//! | POST   | `/sessions/{id}/undo`    |                      | [`SessionView`]  |
//!
//! Errors reply `{"error": kind, "message": text}` with 404 (`not_found`),
//! 400 (`bad_request`), 409 (`out_of_turn`, `game_over`, `nothing_to_undo`)
//! or 422 (`illegal_move`, with the violated constraint under `violation`).

use std::sync::Arc;

use axum::extract::rejection::JsonRejection;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::Deserialize;
use serde_json::json;
use tower_http::cors::CorsLayer;

use crate::session::{CreateSession, SessionError, Store};

impl IntoResponse for SessionError {
    fn into_response(self) -> Response {
        let (status, kind) = match &self {
            SessionError::NotFound(_) => (StatusCode::NOT_FOUND, "not_found"),
            SessionError::BadRequest(_) => (StatusCode::BAD_REQUEST, "bad_request"),
            SessionError::OutOfTurn(_) => (StatusCode::CONFLICT, "out_of_turn"),
            SessionError::GameOver => (StatusCode::CONFLICT, "game_over"),
            SessionError::NothingToUndo => (StatusCode::CONFLICT, "nothing_to_undo"),
            SessionError::IllegalMove(_) => (StatusCode::UNPROCESSABLE_ENTITY, "illegal_move"),
        };
        let mut body = json!({"error": kind, "message": self.to_string()});
        if let SessionError::IllegalMove(violation) = &self {
            body["violation"] = json!(violation);
        }
        (status, Json(body)).into_response()
    }
}

fn body<T>(payload: Result<Json<T>, JsonRejection>) -> Result<T, SessionError> {
    payload.map(|Json(t)| t).map_err(|e| SessionError::BadRequest(e.body_text()))
}

/// Runs a solver-backed call off the async workers.
async fn blocking<T, F>(f: F) -> Result<T, SessionError>
where
    F: FnOnce() -> Result<T, SessionError> + Send + 'static,
    T: Send + 'static,
{
    tokio::task::spawn_blocking(f).await.expect("session task panicked")
}

async fn create(
    State(store): State<Arc<Store>>,
    payload: Result<Json<CreateSession>, JsonRejection>,
) -> Result<Response, SessionError> {
    let req = body(payload)?;
    let view = blocking(move || store.create(&req)).await?;
    Ok((StatusCode::CREATED, Json(view)).into_response())
}

async fn state(State(store): State<Arc<Store>>, Path(id): Path<String>) -> Result<Response, SessionError> {
    Ok(Json(store.view(&id)?).into_response())
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct MoveRequest {
    colour: u8,
    #[serde(default)]
    vertex: Option<c123::Vertex>,
}

async fn play(
    State(store): State<Arc<Store>>,
    Path(id): Path<String>,
    payload: Result<Json<MoveRequest>, JsonRejection>,
) -> Result<Response, SessionError> {
    let req = body(payload)?;
    let outcome = blocking(move || store.play(&id, req.colour, req.vertex)).await?;
    Ok(Json(outcome).into_response())
}

async fn analysis(State(store): State<Arc<Store>>, Path(id): Path<String>) -> Result<Response, SessionError> {
    let view = blocking(move || store.analysis(&id)).await?;
    Ok(Json(view).into_response())
}

async fn undo(State(store): State<Arc<Store>>, Path(id): Path<String>) -> Result<Response, SessionError> {
    let view = blocking(move || store.undo(&id)).await?;
    Ok(Json(view).into_response())
}

pub fn router(store: Arc<Store>) -> Router {
    Router::new()
        .route("/health", get(|| async { "ok" }))
        .route("/sessions", post(create))
        .route("/sessions/{id}", get(state))
        .route("/sessions/{id}/moves", post(play))
        .route("/sessions/{id}/analysis", get(analysis))
        .route("/sessions/{id}/undo", post(undo))
        .layer(CorsLayer::permissive())
        .with_state(store)
}

pub async fn serve(store: Arc<Store>, addr: std::net::SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(store))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
