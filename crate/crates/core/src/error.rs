use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// The Poisson tail could not be pushed below the tolerance within the
    /// truncation cap.
    #[error(
        "Fock truncation failed: alpha = {alpha}, k = {k} needs more than {cap} levels \
         to reach tail < {tail_tol:e}"
    )]
    Truncation { alpha: f64, k: usize, tail_tol: f64, cap: usize },

    /// Normalization of a cat superposition vanishes (e.g. odd cat of vacuum).
    #[error("degenerate field state: normalization A = {norm:e} for r = {r}, alpha = {alpha}")]
    DegenerateState { r: f64, alpha: f64, norm: f64 },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },

    #[error("matrix is not Hermitian (deviation {deviation:e})")]
    NotHermitian { deviation: f64 },

    #[error("Jacobi eigensolver did not converge after {sweeps} sweeps (off-norm {off_norm:e})")]
    Eigensolver { sweeps: usize, off_norm: f64 },

    #[error("density matrix is not positive: {0}")]
    Positivity(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("could not parse configuration: {0}")]
    Parse(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Process exit code used by the `jc-sweep` binary.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Parse(_) => 2,
            Error::Io(_) => 1,
            _ => 3,
        }
    }
}
