//! HTTP/JSON service under `/api/v1`.

use std::path::PathBuf;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::{Deserialize, Serialize};
use tower_http::services::ServeDir;

use mhrg_core::engine::mhr_move;
use mhrg_core::{Board, Cell, MhrgError, MoveRecord, Partition};

use crate::cache::{BoardCache, Solved};
use crate::records::{BoardSummary, GraphDocument, PositionView};

#[derive(Debug, Serialize)]
struct ErrorBody {
    error: String,
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    message: String,
}

impl ApiError {
    fn new(status: StatusCode, message: impl Into<String>) -> Self {
        ApiError {
            status,
            message: message.into(),
        }
    }

    fn bad_request(message: impl Into<String>) -> Self {
        Self::new(StatusCode::BAD_REQUEST, message)
    }
}

impl From<MhrgError> for ApiError {
    fn from(e: MhrgError) -> Self {
        let status = match e {
            MhrgError::GuardrailExceeded { .. } => StatusCode::UNPROCESSABLE_ENTITY,
            MhrgError::InvalidBoard { .. } | MhrgError::UnknownPosition(_) => StatusCode::NOT_FOUND,
            MhrgError::InvalidPartition(_)
            | MhrgError::NotInDiagram(_)
            | MhrgError::OutsideBoard(_)
            | MhrgError::EndingPosition => StatusCode::BAD_REQUEST,
            _ => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError::new(status, e.to_string())
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.status, Json(ErrorBody { error: self.message })).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

#[derive(Clone, Debug)]
pub struct AppState {
    cache: Arc<BoardCache>,
}

impl AppState {
    pub fn new(max_positions: u128) -> Self {
        AppState {
            cache: Arc::new(BoardCache::new(max_positions)),
        }
    }
}

fn parse_board(m: &str, n: &str) -> Result<Board, ApiError> {
    let parse = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| ApiError::bad_request(format!("board dimension {s:?} is not a number")))
    };
    Ok(Board::new(parse(m)?, parse(n)?)?)
}

/// Comma-separated parts, exactly `m` of them; zeros are kept.
fn parse_lambda(board: &Board, text: &str) -> Result<Partition, ApiError> {
    let parts = text
        .split(',')
        .map(|s| s.trim().parse::<usize>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| ApiError::bad_request(format!("malformed lambda {text:?}")))?;
    checked_partition(board, parts)
}

fn checked_partition(board: &Board, parts: Vec<usize>) -> Result<Partition, ApiError> {
    if parts.len() != board.m() {
        return Err(ApiError::bad_request(format!(
            "lambda must have exactly {} parts, got {}",
            board.m(),
            parts.len()
        )));
    }
    let p = Partition::new(parts)?;
    board.check(&p)?;
    Ok(p)
}

async fn solve(state: &AppState, board: Board) -> Result<Arc<Solved>, ApiError> {
    let cache = state.cache.clone();
    tokio::task::spawn_blocking(move || cache.get(&board))
        .await
        .map_err(|e| ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?
        .map_err(ApiError::from)
}

fn require_member(solved: &Solved, p: &Partition) -> Result<(), ApiError> {
    if solved.graph.contains(p) {
        Ok(())
    } else {
        Err(MhrgError::UnknownPosition(p.to_string()).into())
    }
}

async fn board_summary(State(state): State<AppState>, Path((m, n)): Path<(String, String)>) -> ApiResult<BoardSummary> {
    let board = parse_board(&m, &n)?;
    let solved = solve(&state, board).await?;
    Ok(Json(BoardSummary::new(&solved.graph, &solved.table)))
}

async fn position(
    State(state): State<AppState>,
    Path((m, n, lambda)): Path<(String, String, String)>,
) -> ApiResult<PositionView> {
    let board = parse_board(&m, &n)?;
    let p = parse_lambda(&board, &lambda)?;
    let solved = solve(&state, board).await?;
    require_member(&solved, &p)?;
    Ok(Json(PositionView::new(&solved.graph, &solved.table, &p)?))
}

#[derive(Debug, Deserialize)]
struct MoveRequest {
    from: Vec<usize>,
    #[serde(rename = "box")]
    cell: Cell,
}

async fn play_move(
    State(state): State<AppState>,
    Path((m, n)): Path<(String, String)>,
    body: Bytes,
) -> ApiResult<MoveRecord> {
    let board = parse_board(&m, &n)?;
    let req: MoveRequest = serde_json::from_slice(&body)
        .map_err(|e| ApiError::bad_request(format!("malformed move request: {e}")))?;
    let from = checked_partition(&board, req.from)?;
    let solved = solve(&state, board).await?;
    require_member(&solved, &from)?;
    Ok(Json(mhr_move(&board, &from, req.cell)?))
}

async fn graph(State(state): State<AppState>, Path((m, n)): Path<(String, String)>) -> ApiResult<GraphDocument> {
    let board = parse_board(&m, &n)?;
    let solved = solve(&state, board).await?;
    Ok(Json(GraphDocument::new(&solved.graph, &solved.table)))
}

async fn not_found() -> ApiError {
    ApiError::new(StatusCode::NOT_FOUND, "no such endpoint")
}

pub fn router(state: AppState) -> Router {
    let api = Router::new()
        .route("/board/{m}/{n}", get(board_summary))
        .route("/board/{m}/{n}/position/{lambda}", get(position))
        .route("/board/{m}/{n}/move", post(play_move))
        .route("/board/{m}/{n}/graph", get(graph))
        .fallback(not_found)
        .with_state(state);
    Router::new().nest("/api/v1", api)
}

/// The API plus static files from `static_dir` for every other path.
pub fn app(state: AppState, static_dir: Option<PathBuf>) -> Router {
    let api = router(state);
    match static_dir {
        Some(dir) => api.fallback_service(ServeDir::new(dir)),
        None => api,
    }
}

pub async fn serve(addr: std::net::SocketAddr, state: AppState, static_dir: Option<PathBuf>) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, app(state, static_dir)).await
}
