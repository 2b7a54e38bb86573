use thiserror::Error;

/// Errors raised by the decomposition, model and sweep routines.
#[derive(Debug, Error)]
pub enum Error {
    #[error("matrix is not Hermitian (max deviation {0:.3e})")]
    NonHermitianInput(f64),
    #[error("matrix is not symmetric (max deviation {0:.3e})")]
    NotSymmetric(f64),
    #[error("matrix is not unitary (max deviation {0:.3e})")]
    NotUnitary(f64),
    #[error("state is not normalized (norm² = {0})")]
    NotNormalized(f64),
    #[error("invalid model: {0}")]
    InvalidModel(String),
    #[error("operation requires a z-aligned model (n = m = ẑ)")]
    WrongModelClass,
    #[error("decomposition round trip failed (residual {0:.3e})")]
    ReconstructionFailure(f64),
    #[error("lambdas do not sum to a multiple of 2π (deviation {0:.3e})")]
    InconsistentLambdas(f64),
    #[error("coupling combination vanishes for the requested branch")]
    DegenerateCoupling,
    #[error("invalid configuration: {0}")]
    ConfigInvalid(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("sweep table is empty")]
    EmptyTable,
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
