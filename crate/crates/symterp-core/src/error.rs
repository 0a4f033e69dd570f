use alloc::string::String;
use core::fmt;

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Operand shapes or dimensions do not match.
    DimensionMismatch { expected: String, found: String },
    /// A symmetrizer was applied to a non-square image.
    NonSquareImage { height: usize, width: usize },
    /// A symmetry spec is invalid for the image it was applied to.
    InvalidSpec(String),
    /// Sector index is outside `0..n_fold`.
    SectorOutOfRange { index: u32, n_fold: u32 },
    /// An operation required a nonzero vector.
    ZeroNorm,
    /// Timestep lies outside the noise schedule.
    TimestepOutOfRange { t: usize, max: usize },
    /// DDIM step ordering violated (`t_prev` must be below `t`).
    StepOrdering { t: usize, t_prev: usize },
    /// Not enough data for the requested statistic.
    InsufficientData { needed: usize, got: usize },
    /// A covariance eigenvalue fell below the PSD tolerance.
    NotPositiveSemidefinite { min_eigenvalue: f64 },
    /// A non-finite value was produced or supplied.
    NonFinite(&'static str),
    /// Invalid parameter value.
    InvalidParams(String),
    /// Configuration does not permit the requested operation.
    InvalidConfig(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NonSquareImage { height, width } => {
                write!(f, "image must be square, got {height}x{width}")
            }
            Error::InvalidSpec(msg) => write!(f, "invalid symmetry spec: {msg}"),
            Error::SectorOutOfRange { index, n_fold } => {
                write!(f, "sector index {index} out of range for n_fold {n_fold}")
            }
            Error::ZeroNorm => write!(f, "operation undefined for zero-norm vector"),
            Error::TimestepOutOfRange { t, max } => {
                write!(f, "timestep {t} outside schedule 0..={max}")
            }
            Error::StepOrdering { t, t_prev } => {
                write!(f, "step ordering violated: t_prev {t_prev} must be < t {t}")
            }
            Error::InsufficientData { needed, got } => {
                write!(f, "insufficient data: need at least {needed}, got {got}")
            }
            Error::NotPositiveSemidefinite { min_eigenvalue } => {
                write!(f, "matrix not PSD: eigenvalue {min_eigenvalue} below tolerance")
            }
            Error::NonFinite(what) => write!(f, "non-finite value in {what}"),
            Error::InvalidParams(msg) => write!(f, "invalid parameters: {msg}"),
            Error::InvalidConfig(msg) => write!(f, "invalid configuration: {msg}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
