use thiserror::Error;

#[derive(Debug, Error)]
pub enum SpechtError {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("variable count mismatch: {0} vs {1}")]
    NvarsMismatch(usize, usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("inadmissible Garnir pattern: {0}")]
    InadmissibleGarnir(String),
    #[error("singular system: {0}")]
    SingularSystem(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("serialization error: {0}")]
    Json(#[from] serde_json::Error),
}
