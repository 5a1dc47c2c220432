//! Stateless JSON service over the core library.

use axum::body::Bytes;
use axum::http::StatusCode;
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::json;

use qutrit_bloch::{evaluate, Execution, ParamVector, SampleMethod, SamplerConfig};

use crate::api::{self, schema_version, ScanRequest};

/// Largest `count` accepted by `POST /sample`.
pub const MAX_SAMPLE_COUNT: usize = 10_000;
/// Largest grid accepted by `POST /scan`.
pub const MAX_SCAN_CELLS: usize = 250_000;

#[derive(Debug)]
pub struct ApiError {
    status: StatusCode,
    code: &'static str,
    message: String,
}

impl ApiError {
    fn bad_request(code: &'static str, message: impl ToString) -> Self {
        Self {
            status: StatusCode::BAD_REQUEST,
            code,
            message: message.to_string(),
        }
    }
}

impl From<qutrit_bloch::Error> for ApiError {
    fn from(e: qutrit_bloch::Error) -> Self {
        let code = match e {
            qutrit_bloch::Error::UnknownCase(_) => "unknown_case",
            qutrit_bloch::Error::InvalidRange(_) => "invalid_range",
            qutrit_bloch::Error::ArityMismatch { .. } => "arity_mismatch",
            qutrit_bloch::Error::InvalidConfig(_) => "invalid_config",
            qutrit_bloch::Error::InvalidParameter { .. } => "invalid_parameter",
            _ => "invalid_input",
        };
        Self::bad_request(code, e)
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let body = json!({
            "schema_version": schema_version(),
            "error": { "code": self.code, "message": self.message },
        });
        (self.status, Json(body)).into_response()
    }
}

type ApiResult<T> = Result<Json<T>, ApiError>;

/// Bodies must be JSON objects; serde would otherwise accept arrays for structs.
fn parse_body<T: DeserializeOwned>(body: &Bytes) -> Result<T, ApiError> {
    let malformed = |e: serde_json::Error| ApiError::bad_request("malformed_body", e);
    let value: serde_json::Value = serde_json::from_slice(body).map_err(malformed)?;
    if !value.is_object() {
        return Err(ApiError::bad_request(
            "malformed_body",
            "request body must be a JSON object",
        ));
    }
    serde_json::from_value(value).map_err(malformed)
}

#[derive(Debug, Serialize)]
struct Health {
    status: &'static str,
    schema_version: String,
}

async fn health() -> Json<Health> {
    Json(Health {
        status: "ok",
        schema_version: schema_version(),
    })
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct EvalRequest {
    #[serde(default)]
    params: ParamVector,
}

async fn eval(body: Bytes) -> ApiResult<qutrit_bloch::SceneDocument> {
    let req: EvalRequest = parse_body(&body)?;
    Ok(Json(evaluate(&req.params)?))
}

async fn scan(body: Bytes) -> ApiResult<api::ScanResponse> {
    let req: ScanRequest = parse_body(&body)?;
    let (case, spec) = req.resolve()?;
    let cells = spec.s.count().saturating_mul(spec.t.count());
    if cells > MAX_SCAN_CELLS {
        return Err(ApiError::bad_request(
            "too_large",
            format!("{cells} cells requested, at most {MAX_SCAN_CELLS} allowed"),
        ));
    }
    let response =
        tokio::task::spawn_blocking(move || api::scan_response(&case, &spec, Execution::default()))
            .await
            .map_err(|e| ApiError {
                status: StatusCode::INTERNAL_SERVER_ERROR,
                code: "internal",
                message: e.to_string(),
            })??;
    Ok(Json(response))
}

async fn clusters() -> Json<api::ClustersResponse> {
    Json(api::clusters_response())
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct SampleRequest {
    method: String,
    #[serde(default)]
    seed: u64,
    count: usize,
}

async fn sample(body: Bytes) -> ApiResult<api::SampleResponse> {
    let req: SampleRequest = parse_body(&body)?;
    let method: SampleMethod = req.method.parse()?;
    if req.count > MAX_SAMPLE_COUNT {
        return Err(ApiError::bad_request(
            "too_large",
            format!("count {} exceeds {MAX_SAMPLE_COUNT}", req.count),
        ));
    }
    let config = SamplerConfig {
        method,
        seed: req.seed,
        count: req.count,
    };
    let response = tokio::task::spawn_blocking(move || api::sample_response(&config))
        .await
        .map_err(|e| ApiError {
            status: StatusCode::INTERNAL_SERVER_ERROR,
            code: "internal",
            message: e.to_string(),
        })??;
    Ok(Json(response))
}

async fn errata() -> Json<api::ErrataResponse> {
    Json(api::errata_response())
}

async fn not_found() -> ApiError {
    ApiError {
        status: StatusCode::NOT_FOUND,
        code: "not_found",
        message: "no such route".into(),
    }
}

async fn method_not_allowed() -> ApiError {
    ApiError {
        status: StatusCode::METHOD_NOT_ALLOWED,
        code: "method_not_allowed",
        message: "method not allowed on this route".into(),
    }
}

pub fn router() -> Router {
    Router::new()
        .route("/health", get(health))
        .route("/eval", post(eval))
        .route("/scan", post(scan))
        .route("/clusters", get(clusters))
        .route("/sample", post(sample))
        .route("/errata", get(errata))
        .fallback(not_found)
        .method_not_allowed_fallback(method_not_allowed)
}

pub async fn serve(host: &str, port: u16) -> anyhow::Result<()> {
    let listener = tokio::net::TcpListener::bind((host, port)).await?;
    eprintln!("listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router()).await?;
    Ok(())
}
