//! JSON routes over a [`SessionStore`].

use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::Arc;

use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use kayles::Player;
use log::{info, warn};
use serde::Deserialize;
use serde_json::json;

use crate::board::{BoardError, Placement};
use crate::store::{ServiceError, SessionStore};

#[derive(Clone)]
pub struct AppState {
    pub store: Arc<SessionStore>,
    pub snapshot: Option<PathBuf>,
}

impl IntoResponse for ServiceError {
    fn into_response(self) -> Response {
        let status = match &self {
            ServiceError::UnknownSession(_) => StatusCode::NOT_FOUND,
            ServiceError::Board(BoardError::InvalidDimensions) => StatusCode::BAD_REQUEST,
            ServiceError::Board(_) | ServiceError::EngineTurn | ServiceError::HumanTurn => {
                StatusCode::CONFLICT
            }
            ServiceError::Io(_) | ServiceError::Json(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        (status, Json(json!({ "error": self.to_string() }))).into_response()
    }
}

#[derive(Debug, Deserialize)]
struct CreateGame {
    rows: Vec<u32>,
    human: Player,
    first: Player,
}

async fn create_game(
    State(app): State<AppState>,
    Json(req): Json<CreateGame>,
) -> Result<impl IntoResponse, ServiceError> {
    let view = app.store.create_game(&req.rows, req.human, req.first)?;
    Ok((StatusCode::CREATED, Json(view)))
}

async fn get_game(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<impl IntoResponse, ServiceError> {
    Ok(Json(app.store.get_state(&id)?))
}

async fn place(
    State(app): State<AppState>,
    Path(id): Path<String>,
    Json(pl): Json<Placement>,
) -> Result<impl IntoResponse, ServiceError> {
    Ok(Json(app.store.apply_placement(&id, pl)?))
}

async fn engine_move(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<impl IntoResponse, ServiceError> {
    Ok(Json(app.store.engine_move(&id)?))
}

async fn analysis(
    State(app): State<AppState>,
    Path(id): Path<String>,
) -> Result<impl IntoResponse, ServiceError> {
    Ok(Json(app.store.analysis(&id)?))
}

async fn snapshot(State(app): State<AppState>) -> Result<impl IntoResponse, ServiceError> {
    match &app.snapshot {
        Some(path) => {
            app.store.snapshot(path)?;
            Ok(StatusCode::NO_CONTENT)
        }
        None => Ok(StatusCode::NOT_FOUND),
    }
}

pub fn router(app: AppState) -> Router {
    Router::new()
        .route("/games", post(create_game))
        .route("/games/{id}", get(get_game))
        .route("/games/{id}/placements", post(place))
        .route("/games/{id}/analysis", get(analysis))
        .route("/games/{id}/engine-move", post(engine_move))
        .route("/snapshot", post(snapshot))
        .with_state(app)
}

/// Serves until Ctrl-C, restoring from and saving to `snapshot` when given.
pub async fn serve(addr: SocketAddr, snapshot: Option<PathBuf>) -> std::io::Result<()> {
    let store = Arc::new(match &snapshot {
        Some(path) => SessionStore::restore(path),
        None => SessionStore::new(),
    });
    info!("{} session(s) restored", store.len());
    let app = AppState {
        store: store.clone(),
        snapshot: snapshot.clone(),
    };
    let listener = tokio::net::TcpListener::bind(addr).await?;
    info!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router(app))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await?;
    if let Some(path) = snapshot {
        if let Err(e) = store.snapshot(&path) {
            warn!("final snapshot failed: {e}");
        }
    }
    Ok(())
}
