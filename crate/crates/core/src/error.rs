use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Crate-wide error type. Variants map onto the CLI exit-code classes:
/// validation failures, usage errors and numeric guards.
#[derive(Debug, Error)]
pub enum Error {
    #[error("singular basis: |det| = {det:.3e} below tolerance {tol:.3e}")]
    SingularBasis { det: f64, tol: f64 },

    #[error("unsupported number field: D = {d} ({reason})")]
    UnsupportedField { d: i64, reason: String },

    #[error("sublattice transform must have positive determinant, got {det}")]
    NonPositiveIndex { det: i64 },

    #[error("enumeration bound {estimate:.3e} exceeds cap {cap:.3e}")]
    BoxTooLarge { estimate: f64, cap: f64 },

    #[error("internal split does not match lattice: {0}")]
    SplitMismatch(String),

    #[error("lattice meets the section V = R^d x A0 in rank {found}, expected {expected}")]
    NoLatticeInV { found: usize, expected: usize },

    #[error("window gamma components must sum to 1/2 mod 1 (got {sum})")]
    NotHalfSum { sum: f64 },

    #[error("gamma is not regular: {0}")]
    NonRegularGamma(String),

    #[error("no points found in probe region")]
    EmptyRegion,

    #[error("initial position is inside the scatterer centered at {center:?} (dist {dist:.3e} < rho {rho:.3e})")]
    InsideScatterer {
        center: Vec<f64>,
        dist: f64,
        rho: f64,
    },

    #[error("no collision within cap {cap:.3e}")]
    NoHitWithinCap { cap: f64 },

    #[error("resampling exhausted after {retries} retries")]
    RetryExhausted { retries: usize },

    #[error("coefficient vector does not designate a scatterer point: {0}")]
    NotAScattererPoint(String),

    #[error("censoring cap {cap:.3e} (scaled) must exceed the largest xi grid point {xi_max:.3e}")]
    CapTooSmall { cap: f64, xi_max: f64 },

    #[error("direction too close to the singular point of K(v)")]
    NearSingularDirection,

    #[error("flow parameter overflow: |t| = {t} exceeds 500")]
    Overflow { t: f64 },

    #[error("disc parameter too large: cap volume {vol:.3e} exceeds a hemisphere")]
    DiscTooLarge { vol: f64 },

    #[error("xi grids do not match: {0}")]
    GridMismatch(String),

    #[error("invalid beta map: {0}")]
    BadBeta(String),

    #[error("invalid sampler spec: {0}")]
    BadSampler(String),

    #[error("{file}:{line}: parse error: {msg}")]
    Parse {
        file: String,
        line: usize,
        msg: String,
    },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("{0}")]
    Invalid(String),
}

impl Error {
    /// Numeric guard errors get their own CLI exit code.
    pub fn is_numeric_guard(&self) -> bool {
        matches!(self, Error::BoxTooLarge { .. } | Error::Overflow { .. })
    }
}
