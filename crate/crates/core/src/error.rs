use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown solid `{0}`")]
    UnknownSolid(String),
    #[error("invalid map: {0}")]
    InvalidMap(String),
    #[error("census is not that of a pentagonal tiling: sum of k*v_k = {degree_sum}, 5f = {five_f}")]
    InconsistentCensus { degree_sum: u64, five_f: u64 },
    #[error("tile count f = {0} must be an even integer >= 12")]
    InvalidTileCount(u64),
    #[error("angle assignment is not fully determined (missing {0})")]
    Underdetermined(String),
    #[error("cannot parse `{input}`: {reason}")]
    Syntax { input: String, reason: String },
    #[error("word is inconsistent with the prototile: {0}")]
    InconsistentWord(String),
    #[error("subdivision kind does not match the labeling request: {0}")]
    MismatchedKind(String),
    #[error("root not bracketed in [{lo}, {hi}]")]
    RootNotBracketed { lo: f64, hi: f64 },
    #[error("degenerate realization: {0}")]
    Degenerate(String),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
