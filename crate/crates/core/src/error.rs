use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid geometry: {0}")]
    InvalidGeometry(String),

    #[error("polygon is not simple")]
    NotSimple,

    #[error("polygon is not convex, use max_kcenter_arbitrary")]
    NotConvex,

    #[error("empty input: {0}")]
    EmptyInput(&'static str),

    #[error("no centers")]
    NoCenters,

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("infeasible instance: atom {0} is not covered by any set")]
    Infeasible(usize),

    #[error("element {element} out of range 1..={universe}")]
    ElementOutOfRange { element: usize, universe: usize },

    #[error("constant-color limit exceeded: {0} colors (max {1})")]
    ColorLimit(usize, usize),

    #[error("search space too large: {size} exceeds limit {limit}")]
    SearchSpace { size: u128, limit: u128 },

    #[error("sample budget exceeded: {0} grid samples (max {1})")]
    SampleBudget(usize, usize),

    #[error("unknown algorithm: {0}")]
    UnknownAlgorithm(String),

    #[error("no valid records in {0}")]
    NoRecords(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
