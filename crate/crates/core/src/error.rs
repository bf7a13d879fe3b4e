//! Error type shared by all modules.

use thiserror::Error;

/// Coarse classification used by callers that map errors to exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed or inconsistent input.
    Validation,
    /// A numerical identity the implementation guarantees failed to hold.
    Contract,
    /// A size or cost cap was exceeded.
    ResourceCap,
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("modulus must be >= 1, got {0}")]
    InvalidModulus(i64),
    #[error("group order {order} exceeds cap {cap}")]
    OrderCap { order: u128, cap: u64 },
    #[error("expected {expected} coordinates, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error("expected {expected} values for the group, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("operands live on different groups ({left} vs {right})")]
    GroupMismatch { left: String, right: String },
    #[error("diffraction support is empty at the stored tolerance")]
    EmptySupport,
    #[error("support is not centrally symmetric: {0} is in, its negative is not")]
    AsymmetricSupport(String),
    #[error("negative diffraction weight {value:e} at {point}")]
    NegativeWeight { point: String, value: f64 },
    #[error("{0} is outside the spectrum")]
    OutsideSpectrum(String),
    #[error("phase data does not fit the spectrum basis: {0}")]
    BasisMismatch(String),
    #[error("density is not real: largest imaginary part {0:e}")]
    NotReal(f64),
    #[error("group is not cyclic (rank {0})")]
    NotCyclic(usize),
    #[error("enumeration cap exceeded: {0}")]
    EnumerationCap(String),
    #[error("cost guard tripped: {0}")]
    CostGuard(String),
    #[error("numerical contract violated: {0}")]
    Contract(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    /// Which exit-code class the error belongs to.
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OrderCap { .. } | Error::EnumerationCap(_) | Error::CostGuard(_) => {
                ErrorKind::ResourceCap
            }
            Error::Contract(_) => ErrorKind::Contract,
            _ => ErrorKind::Validation,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
