use std::sync::Arc;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use axum::Router;
use c123_cli::server::router;
use c123_cli::session::Store;
use http_body_util::BodyExt;
use serde_json::{json, Value};
use tower::ServiceExt;

async fn call(app: &Router, method: &str, uri: &str, body: Option<Value>) -> (StatusCode, Value) {
    let req = Request::builder().method(method).uri(uri);
    let req = match body {
        Some(b) => req
            .header("content-type", "application/json")
            .body(Body::from(b.to_string())),
        None => req.body(Body::empty()),
    }
    .unwrap();
    let resp = app.clone().oneshot(req).await.unwrap();
    let status = resp.status();
    let bytes = resp.into_body().collect().await.unwrap().to_bytes();
    let value = if bytes.is_empty() {
        Value::Null
    } else {
        serde_json::from_slice(&bytes).unwrap_or_else(|_| Value::String(String::from_utf8_lossy(&bytes).into()))
    };
    (status, value)
}

fn app() -> Router {
    router(Arc::new(Store::new()))
}

// Path 0-1-2 played ends first, so the middle vertex comes last.
fn p3(human: &str) -> Value {
    json!({"graph": {"n": 3, "edges": [[0, 1], [1, 2]]}, "order": [0, 2, 1], "k": 2, "human": human})
}

async fn create(app: &Router, body: Value) -> Value {
    let (status, view) = call(app, "POST", "/sessions", Some(body)).await;
    assert_eq!(status, StatusCode::CREATED, "{view}");
    view
}

#[tokio::test]
async fn health() {
    let (status, body) = call(&app(), "GET", "/health", None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(body, json!("ok"));
}

#[tokio::test]
async fn universal_human_blocks_the_middle() {
    let app = app();
    let view = create(&app, p3("Universal")).await;
    let id = view["id"].as_str().unwrap();
    // The engine opened on vertex 0.
    assert_eq!(view["history"], json!([1]));
    assert_eq!(view["turn"], json!("Universal"));
    assert_eq!(view["next_vertex"], json!(2));

    let (status, analysis) = call(&app, "GET", &format!("/sessions/{id}/analysis"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(analysis["winner"], json!("Universal"));
    assert_eq!(analysis["mover"], json!("Universal"));
    assert_eq!(analysis["non_losing"], json!([2]));

    let (status, outcome) = call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": 2}))).await;
    assert_eq!(status, StatusCode::OK, "{outcome}");
    assert_eq!(outcome["engine_moves"], json!([]));
    assert_eq!(outcome["state"]["status"], json!("UniversalWon"));
    assert_eq!(outcome["state"]["colouring"], json!([1, null, 2]));
}

#[tokio::test]
async fn existential_human_loses_p3_at_two_colours() {
    let app = app();
    let view = create(&app, p3("Existential")).await;
    let id = view["id"].as_str().unwrap();
    assert_eq!(view["history"], json!([]));
    let (_, analysis) = call(&app, "GET", &format!("/sessions/{id}/analysis"), None).await;
    assert_eq!(analysis["winner"], json!("Universal"));
    assert_eq!(analysis["non_losing"], json!([]));

    let (status, outcome) = call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": 1}))).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(outcome["engine_moves"], json!([2]));
    assert_eq!(outcome["state"]["status"], json!("UniversalWon"));

    let (status, err) = call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": 1}))).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(err["error"], json!("game_over"));
}

#[tokio::test]
async fn single_vertex_is_an_existential_win() {
    let app = app();
    let view = create(&app, json!({"graph_text": "n 1\n", "k": 3, "human": "Existential"})).await;
    let id = view["id"].as_str().unwrap();
    assert_eq!(view["legal"], json!([1, 2, 3]));
    let (_, outcome) = call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": 3}))).await;
    assert_eq!(outcome["state"]["status"], json!("ExistentialWon"));
    assert_eq!(outcome["state"]["next_vertex"], Value::Null);
}

#[tokio::test]
async fn stale_vertex_is_out_of_turn() {
    let app = app();
    let view = create(&app, p3("Universal")).await;
    let id = view["id"].as_str().unwrap();
    let (status, err) = call(
        &app,
        "POST",
        &format!("/sessions/{id}/moves"),
        Some(json!({"colour": 2, "vertex": 0})),
    )
    .await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(err["error"], json!("out_of_turn"));
    let (_, after) = call(&app, "GET", &format!("/sessions/{id}"), None).await;
    assert_eq!(after, view);
}

#[tokio::test]
async fn illegal_moves_name_the_violation() {
    let app = app();
    let body = json!({
        "graph": {"n": 2, "edges": [[0, 1]]},
        "k": 3,
        "lists": [[1, 2], [1, 2, 3]],
        "human": "Existential",
        "roles": ["Existential", "Existential"],
    });
    let view = create(&app, body).await;
    let id = view["id"].as_str().unwrap();
    let moves = format!("/sessions/{id}/moves");

    let (status, err) = call(&app, "POST", &moves, Some(json!({"colour": 3}))).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(err["violation"]["kind"], json!("not_in_list"));

    let (status, err) = call(&app, "POST", &moves, Some(json!({"colour": 4}))).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(err["violation"]["kind"], json!("out_of_range"));

    call(&app, "POST", &moves, Some(json!({"colour": 2}))).await;
    let (status, err) = call(&app, "POST", &moves, Some(json!({"colour": 2}))).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(
        err["violation"],
        json!({"kind": "monochrome_neighbour", "vertex": 1, "neighbour": 0, "colour": 2})
    );
}

#[tokio::test]
async fn bad_requests_and_unknown_sessions() {
    let app = app();
    let (status, err) = call(&app, "GET", "/sessions/not-a-uuid", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);
    assert_eq!(err["error"], json!("not_found"));
    let (status, _) = call(&app, "GET", "/sessions/6f1c2d1e-0000-4000-8000-000000000000/analysis", None).await;
    assert_eq!(status, StatusCode::NOT_FOUND);

    let (status, err) = call(&app, "POST", "/sessions", Some(json!({"graph_text": "n 2\ne 0 0\n", "k": 2, "human": "Existential"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert!(err["message"].as_str().unwrap().contains("self-loop"), "{err}");

    let (status, _) = call(&app, "POST", "/sessions", Some(json!({"k": 2, "human": "Existential"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    let (status, _) = call(&app, "POST", "/sessions", Some(json!({"graph_text": "n 1\n", "k": 2, "human": "Nobody"}))).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}

#[tokio::test]
async fn undo_restores_the_previous_position() {
    let app = app();
    let view = create(&app, p3("Existential")).await;
    let id = view["id"].as_str().unwrap();
    let (status, err) = call(&app, "POST", &format!("/sessions/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::CONFLICT);
    assert_eq!(err["error"], json!("nothing_to_undo"));

    call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": 1}))).await;
    let (status, undone) = call(&app, "POST", &format!("/sessions/{id}/undo"), None).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(undone, view);
}

#[tokio::test]
async fn replaying_a_transcript_reproduces_every_state() {
    let body = json!({
        "graph": {"n": 5, "edges": [[0, 1], [1, 2], [2, 3], [3, 4], [4, 0]]},
        "k": 3,
        "human": "Existential",
    });
    let colours = [1, 2, 3];

    async fn transcript(body: &Value, colours: &[u8]) -> Vec<Value> {
        let app = app();
        let mut view = create(&app, body.clone()).await;
        let id = view["id"].as_str().unwrap().to_string();
        view["id"] = Value::Null;
        let mut states = vec![view];
        for &c in colours {
            let (_, mut outcome) = call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": c}))).await;
            if outcome.get("state").is_some() {
                outcome["state"]["id"] = Value::Null;
            }
            states.push(outcome);
        }
        states
    }

    let first = transcript(&body, &colours).await;
    let second = transcript(&body, &colours).await;
    assert_eq!(first, second);
    assert!(first.len() > 1);
}

#[tokio::test]
async fn session_log_gets_one_line_per_event() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sessions.jsonl");
    let app = router(Arc::new(Store::with_log(&path).unwrap()));
    let view = create(&app, p3("Existential")).await;
    let id = view["id"].as_str().unwrap();
    call(&app, "POST", &format!("/sessions/{id}/moves"), Some(json!({"colour": 1}))).await;
    call(&app, "POST", &format!("/sessions/{id}/undo"), None).await;

    let text = std::fs::read_to_string(&path).unwrap();
    let events: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let kinds: Vec<&str> = events.iter().map(|e| e["event"].as_str().unwrap()).collect();
    assert_eq!(kinds, ["create", "move", "undo"]);
    assert!(events.iter().all(|e| e["session"] == json!(id)));
    assert_eq!(events[1]["engine_moves"], json!([2]));
}
