use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("closed form not available for {family} at k = {k}")]
    NoClosedForm { family: String, k: u32 },

    #[error("index {k} lies below rho(1,1) = {pivot}")]
    BelowPivot { k: usize, pivot: usize },

    #[error("chain explosion: span {span} exceeds the configured limit {limit}")]
    ChainExplosion { span: usize, limit: usize },

    #[error("index pair ({k}, {m}) is not strictly below the diagonal")]
    NotBelowDiagonal { k: usize, m: usize },

    #[error("truncation caps differ: {left:?} vs {right:?}")]
    CapMismatch { left: [u32; 3], right: [u32; 3] },

    #[error("ansatz inconsistent at ({family}, {k}): singular interpolation system")]
    SingularAnsatz { family: String, k: u32 },

    #[error("conjecture fails at n = {n} for ({family}, {k})")]
    HeldOutMismatch { family: String, k: u32, n: u64 },

    #[error("entry ({row}, {col}) breaks the unit-superdiagonal lower-Hessenberg shape")]
    NotHessenberg { row: usize, col: usize },

    #[error("{0}")]
    Unsupported(String),

    #[error("malformed walk table record on line {line}: {reason}")]
    BadRecord { line: usize, reason: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
