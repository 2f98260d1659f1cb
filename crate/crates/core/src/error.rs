use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("gram matrix is not symmetric")]
    NotSymmetric,
    #[error("quadratic form has rank {0}, at least 2 is required")]
    RankTooSmall(usize),
    #[error("subspace is not isotropic: b(w{0}, w{1}) = {2}")]
    NotIsotropic(usize, usize, String),
    #[error("isotropic subspace must be nonzero")]
    ZeroSubspace,
    #[error("basis vectors are linearly dependent")]
    Dependent,
    #[error("subspace is not contained in the radical")]
    NotInRadical,
    #[error("isotropic subspace is not maximal in V/K: {0}")]
    NotMaximal(String),
    #[error("standardization unavailable over the rationals: {0}")]
    StandardizationUnavailable(String),
    #[error("vector is not anisotropic (q = 0)")]
    NotAnisotropic,
    #[error("image leaves the target span, witness {0}")]
    NotInSpan(String),
    #[error("point is not on the quadric (q = {0})")]
    NotOnQuadric(String),
    #[error("zero vector is not a point")]
    ZeroVector,
    #[error("subspace is not transverse to W: {0}")]
    NotTransverse(String),
    #[error("invalid flag: {0}")]
    InvalidFlag(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("twist {0} outside the configured window [{1}, {2}]")]
    OutOfWindow(i64, i64, i64),
    #[error("Clifford elements over different spaces")]
    SpaceMismatch,
    #[error("fixture error: {0}")]
    Fixture(String),
    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
}
