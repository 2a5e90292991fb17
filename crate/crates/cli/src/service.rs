//! Session service under `/v1/`.
//!
//! A session holds a root seed, the current seed and the clicked vertices.
//! Replaying the history from the root always reproduces the current seed.

use std::collections::HashMap;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, Mutex};

use axum::body::Bytes;
use axum::extract::{Path, State};
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use rootloop_core::{seeds_equal, EqualityMode, MutationWord, Seed, Sign, Symmetry, ValuedQuiver};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;
use crate::input::{parse_quiver, parse_word};

#[derive(Debug, Clone)]
pub struct Session {
    pub root: Seed,
    pub current: Seed,
    pub history: Vec<usize>,
    pub mode: EqualityMode,
}

impl Session {
    pub fn new(q: &ValuedQuiver, mode: EqualityMode) -> Self {
        let root = Seed::initial(q);
        Self {
            current: root.clone(),
            root,
            history: Vec::new(),
            mode,
        }
    }

    pub fn mutate(&mut self, k: usize) -> Result<(), CliError> {
        let w = parse_word(&(k + 1).to_string(), &self.root.quiver)?;
        self.current = self.current.mutate(w.steps()[0])?;
        self.history.push(k);
        Ok(())
    }

    /// Mutates at the last vertex again, which undoes it, and drops it from
    /// the history. No-op on an empty history.
    pub fn undo(&mut self) -> Result<(), CliError> {
        if let Some(k) = self.history.pop() {
            self.current = self.current.mutate(k)?;
        }
        Ok(())
    }

    /// Restarts from the root and applies `word`.
    pub fn replay(&mut self, word: &MutationWord) -> Result<(), CliError> {
        let current = self.root.apply(word)?;
        self.current = current;
        self.history = word.steps().to_vec();
        Ok(())
    }

    pub fn loop_status(&self) -> SessionLoop {
        if self.history.is_empty() {
            return SessionLoop {
                strict: false,
                witness: None,
                banner: None,
            };
        }
        let strict = seeds_equal(&self.root, &self.current, EqualityMode::Strict).is_some();
        let witness = seeds_equal(&self.root, &self.current, self.mode);
        let banner = match (&witness, strict) {
            (_, true) => Some("rooted loop (strict)".to_string()),
            (Some(w), false) => Some(banner(w)),
            (None, false) => None,
        };
        SessionLoop {
            strict,
            witness,
            banner,
        }
    }

    pub fn view(&self, id: &str) -> SessionView {
        SessionView {
            id: id.to_string(),
            mode: self.mode,
            history: MutationWord::new(self.history.clone()),
            cluster: self.current.display_cluster(),
            quiver: self.current.quiver.clone(),
            root: self.root.quiver.clone(),
            loop_status: self.loop_status(),
        }
    }
}

fn banner(w: &Symmetry) -> String {
    match w.sign {
        Sign::Plus => format!("rooted loop (symmetric, σ={})", w.permutation),
        Sign::Minus => format!(
            "rooted loop (symmetric, σ={}, opposite quiver)",
            w.permutation
        ),
    }
}

/// Loop status of the current seed against the root. An empty history is
/// not reported as a loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionLoop {
    pub strict: bool,
    pub witness: Option<Symmetry>,
    pub banner: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SessionView {
    pub id: String,
    pub mode: EqualityMode,
    /// 1-based clicked vertices.
    pub history: MutationWord,
    pub cluster: Vec<String>,
    pub quiver: ValuedQuiver,
    pub root: ValuedQuiver,
    pub loop_status: SessionLoop,
}

#[derive(Default)]
pub struct AppState {
    next: AtomicU64,
    sessions: Mutex<HashMap<String, Arc<Mutex<Session>>>>,
}

impl AppState {
    fn insert(&self, s: Session) -> String {
        let id = format!("s{}", self.next.fetch_add(1, Ordering::Relaxed) + 1);
        self.sessions
            .lock()
            .expect("session table lock")
            .insert(id.clone(), Arc::new(Mutex::new(s)));
        id
    }

    fn get(&self, id: &str) -> Result<Arc<Mutex<Session>>, ApiError> {
        self.sessions
            .lock()
            .expect("session table lock")
            .get(id)
            .cloned()
            .ok_or_else(|| ApiError::not_found(id))
    }
}

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    kind: &'static str,
    message: String,
}

impl ApiError {
    fn not_found(id: &str) -> Self {
        Self {
            status: StatusCode::NOT_FOUND,
            kind: "not_found",
            message: format!("no session {id:?}"),
        }
    }

    fn parse(message: impl Into<String>) -> Self {
        Self {
            status: StatusCode::BAD_REQUEST,
            kind: "parse",
            message: message.into(),
        }
    }
}

impl From<CliError> for ApiError {
    fn from(e: CliError) -> Self {
        let (status, kind) = match e {
            CliError::Parse(_) => (StatusCode::BAD_REQUEST, "parse"),
            CliError::Invariant(_) => (StatusCode::UNPROCESSABLE_ENTITY, "invariant"),
            CliError::Infinite(_) => (StatusCode::UNPROCESSABLE_ENTITY, "infinite"),
            CliError::Unknown(_) => (StatusCode::UNPROCESSABLE_ENTITY, "unknown"),
            CliError::Io(_) => (StatusCode::INTERNAL_SERVER_ERROR, "io"),
        };
        Self {
            status,
            kind,
            message: e.to_string(),
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = serde_json::json!({ "error": { "kind": self.kind, "message": self.message } });
        (self.status, Json(body)).into_response()
    }
}

type ApiResult = Result<Json<SessionView>, ApiError>;

fn body<T: for<'de> Deserialize<'de>>(bytes: &Bytes) -> Result<T, ApiError> {
    serde_json::from_slice(bytes)
        .map_err(|e| ApiError::parse(format!("malformed request body: {e}")))
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct CreateBody {
    /// A quiver file object or a builtin name.
    quiver: Value,
    #[serde(default)]
    mode: Option<String>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct VertexBody {
    /// 1-based.
    vertex: usize,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum WordField {
    Labels(Vec<usize>),
    Text(String),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ReplayBody {
    word: WordField,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ModeBody {
    mode: String,
}

fn parse_mode(m: &str) -> Result<EqualityMode, ApiError> {
    m.parse()
        .map_err(|e: rootloop_core::ModeParseError| ApiError::parse(e.to_string()))
}

async fn create(
    State(app): State<Arc<AppState>>,
    bytes: Bytes,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let b: CreateBody = body(&bytes)?;
    let q = match &b.quiver {
        Value::String(name) => load_builtin(name)?,
        v => parse_quiver(&v.to_string())?,
    };
    let mode = b
        .mode
        .as_deref()
        .map(parse_mode)
        .transpose()?
        .unwrap_or_default();
    let s = Session::new(&q, mode);
    let view = s.view("");
    let id = app.insert(s);
    Ok((StatusCode::CREATED, Json(SessionView { id, ..view })))
}

/// Only builtins by name; the service never reads files.
fn load_builtin(name: &str) -> Result<ValuedQuiver, ApiError> {
    rootloop_core::fixtures::builtin(name)
        .ok_or_else(|| ApiError::parse(format!("unknown builtin quiver {name:?}")))
}

fn with_session(
    app: &AppState,
    id: &str,
    f: impl FnOnce(&mut Session) -> Result<(), CliError>,
) -> ApiResult {
    let s = app.get(id)?;
    let mut s = s.lock().expect("session lock");
    f(&mut s)?;
    Ok(Json(s.view(id)))
}

async fn state(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult {
    with_session(&app, &id, |_| Ok(()))
}

async fn mutate(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> ApiResult {
    let b: VertexBody = body(&bytes)?;
    let k = b
        .vertex
        .checked_sub(1)
        .ok_or_else(|| ApiError::parse("vertices are 1-based"))?;
    with_session(&app, &id, |s| s.mutate(k))
}

async fn undo(State(app): State<Arc<AppState>>, Path(id): Path<String>) -> ApiResult {
    with_session(&app, &id, Session::undo)
}

async fn replay(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> ApiResult {
    let b: ReplayBody = body(&bytes)?;
    let text = match b.word {
        WordField::Labels(l) => l
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(","),
        WordField::Text(t) => t,
    };
    with_session(&app, &id, |s| {
        let w = parse_word(&text, &s.root.quiver)?;
        s.replay(&w)
    })
}

async fn set_mode(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
    bytes: Bytes,
) -> ApiResult {
    let b: ModeBody = body(&bytes)?;
    let mode = parse_mode(&b.mode)?;
    with_session(&app, &id, |s| {
        s.mode = mode;
        Ok(())
    })
}

async fn loop_status(
    State(app): State<Arc<AppState>>,
    Path(id): Path<String>,
) -> Result<Json<SessionLoop>, ApiError> {
    let s = app.get(&id)?;
    let s = s.lock().expect("session lock");
    Ok(Json(s.loop_status()))
}

async fn fallback() -> ApiError {
    ApiError {
        status: StatusCode::NOT_FOUND,
        kind: "not_found",
        message: "no such endpoint".into(),
    }
}

pub fn router() -> Router {
    Router::new()
        .route("/v1/sessions", post(create))
        .route("/v1/sessions/{id}", get(state))
        .route("/v1/sessions/{id}/mutate", post(mutate))
        .route("/v1/sessions/{id}/undo", post(undo))
        .route("/v1/sessions/{id}/replay", post(replay))
        .route("/v1/sessions/{id}/mode", post(set_mode))
        .route("/v1/sessions/{id}/loop", get(loop_status))
        .fallback(fallback)
        .with_state(Arc::new(AppState::default()))
}

pub async fn serve(addr: std::net::SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router()).await
}
