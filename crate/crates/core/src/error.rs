use thiserror::Error;

/// Errors reported by the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum HupError {
    #[error("argument out of domain: {0}")]
    Domain(&'static str),
    #[error("{name} = {value} is outside its admissible range")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("order {0} is not an integer or half-integer")]
    BesselOrder(f64),
    #[error("index (k = {k}, l = {l}) violates |l| <= k")]
    Index { k: usize, l: i64 },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("dimension n = {0} is not supported here")]
    UnsupportedDimension(usize),
    #[error("density cannot be evaluated off its sample grid")]
    NotEvaluable,
    #[error("rule exactness {have} is below the required degree {need}")]
    Exactness { have: usize, need: usize },
    #[error("under-sampled cone: {rows} directions for {cols} harmonic basis functions")]
    UnderSampled { rows: usize, cols: usize },
    #[error("coefficient table is not in the symmetric class (tolerance {tol})")]
    NotSymmetric { tol: f64 },
    #[error("sample r = {r} lies within {within} of a zero of {what}")]
    DegenerateSample { r: f64, within: f64, what: &'static str },
    #[error("plane-wave calibration residual {residual:e} exceeds {limit:e}")]
    Calibration { residual: f64, limit: f64 },
    #[error("linear algebra failure: {0}")]
    Linalg(&'static str),
}

pub type Result<T, E = HupError> = core::result::Result<T, E>;
