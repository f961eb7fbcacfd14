use thiserror::Error;

/// Errors raised by the library. Refusals (calls the mathematics makes
/// ill-posed) are errors too; the property engines turn them into
/// `Outcome::Refused`.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("exact arithmetic is not available for {0}")]
    ExactUnsupported(String),

    #[error("inexact (floating-point) input supplied to an exact-arithmetic space")]
    InexactInput,

    #[error("invalid space: {0}")]
    InvalidSpace(String),

    #[error("invalid point: {0}")]
    InvalidPoint(String),

    #[error("invalid breakpoints: {0}")]
    InvalidBreakpoints(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("the two points coincide")]
    CoincidentPoints,

    #[error("parameter t = {0} is outside (0, 1)")]
    ParameterOutOfRange(String),

    #[error("empty ball intersection for t = {t}: the carrier is not Menger convex at this configuration")]
    EmptyIntersection { t: String },

    #[error("operation `{op}` is not supported for metric {metric}")]
    UnsupportedMetric { op: &'static str, metric: String },

    #[error("metric {metric} lacks unique midpoints (property (A) fails there); refusing `{op}`")]
    NoUniqueMidpoint { op: &'static str, metric: String },

    #[error("empty set representation")]
    EmptySet,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration too large: {0}")]
    TooLarge(String),

    #[error("mapping does not send {point} into its domain")]
    NonSelfMap { point: String },

    #[error("orbit left the domain at step {step}")]
    DomainEscape { step: usize },

    #[error("orbit unbounded: excursion {excursion} exceeds R_max = {rmax} at step {step}")]
    Unbounded { excursion: f64, rmax: f64, step: usize },

    #[error("orbit window W = {window} exceeds orbit length N = {len}")]
    WindowTooLong { window: usize, len: usize },

    #[error("mapping is not ({alpha}, {beta})-generalized hybrid: {detail}")]
    NotHybrid { alpha: f64, beta: f64, detail: String },

    #[error("solver budget exhausted: residual {residual} above tolerance {tol}")]
    BudgetExhausted { residual: f64, tol: f64 },

    #[error("nesting violated between sets {index} and {next}")]
    NestingViolated { index: usize, next: usize },

    #[error("no feasible point found: max violation {max_violation} after {iterations} sweeps")]
    NoProgress { max_violation: f64, iterations: usize },

    #[error("set diameters do not fall below {tol}")]
    DiametersNotVanishing { tol: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
