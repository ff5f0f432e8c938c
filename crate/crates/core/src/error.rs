use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("universe must contain at least one word")]
    EmptyUniverse,
    #[error("duplicate word {0:?} in universe")]
    DuplicateWord(String),
    #[error("unknown word {0:?}")]
    UnknownWord(String),
    #[error("relations are defined over different universes")]
    UniverseMismatch,
    #[error("unknown relation {0:?}")]
    UnknownRelation(String),
    #[error("relation {0:?} is empty")]
    EmptyRelation(String),
    #[error("closure exceeded the cap of {cap} elements ({count} generated so far)")]
    ClosureTooLarge { cap: usize, count: usize },
    #[error("homomorphism map covers {got} elements but the closure has {expected}")]
    PartialMap { expected: usize, got: usize },
    #[error("closure is not a group")]
    NotAGroup,
    #[error("closure is not cyclic")]
    NotCyclic,
    #[error("dimension must be at least 1")]
    ZeroDimension,
    #[error("relation {name:?} is not represented (max deviation {max_deviation:e})")]
    NotRepresented { name: String, max_deviation: f64 },
    #[error("invalid smoothing parameter {0}")]
    InvalidAlpha(f64),
    #[error("zero count for word {word:?}, context {context:?} with no smoothing")]
    ZeroCount { word: String, context: String },
    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("format error on line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("invalid relation spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
