use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    /// Input does not describe a valid group, word or matrix.
    #[error("malformed input: {0}")]
    Malformed(String),

    /// A ball or support would exceed the configured element cap.
    #[error("resource cap exceeded: {what} needs {requested} elements, cap is {cap}")]
    ResourceCap { what: String, requested: u128, cap: u64 },

    /// Operation called outside its domain (unsupported group, bad precondition).
    #[error("domain error: {0}")]
    Domain(String),

    #[error("element {element} is not hyperbolic: {reason}")]
    NotHyperbolic { element: String, reason: String },

    /// A bounded search ran out before finding what it needed.
    #[error("construction failed at search bound {bound}: {reason}")]
    ConstructionFailed { bound: usize, reason: String },

    #[error("ambiguous classification: {0}")]
    AmbiguousClassification(String),

    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Toml(#[from] toml::de::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn malformed(msg: impl Into<String>) -> Self {
        Error::Malformed(msg.into())
    }

    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }
}
