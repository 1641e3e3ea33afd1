use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("nodes {0}, {1} and {2} are collinear (relative cross product {3:e})")]
    Collinear(usize, usize, usize, f64),

    #[error("nodes {0} and {1} coincide")]
    CoincidentNodes(usize, usize),

    #[error("vanishing denominator for chord ({s}, {t})")]
    VanishingDenominator { s: usize, t: usize },

    #[error("missing derivative D^({0}, {1}) for field `{2}`")]
    MissingDerivative(usize, usize, String),

    #[error("block index {index} out of range: section has {blocks} blocks")]
    BlockOutOfRange { index: usize, blocks: usize },

    #[error("unknown test function `{0}`")]
    UnknownFunction(String),

    #[error("malformed section file: {0}")]
    MalformedSection(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
