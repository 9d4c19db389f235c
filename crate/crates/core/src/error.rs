use thiserror::Error;

/// Everything that can go wrong inside the engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("no colength certificate found up to degree {0}")]
    DegreeCapExceeded(u32),
    #[error("truncation precision exhausted at {0}")]
    PrecisionExhausted(usize),
    #[error("generators share a common component through the origin: {0}")]
    CommonComponent(String),
    #[error("curve is not reduced at the origin")]
    NotReduced,
    #[error("singularity is not isolated")]
    NonIsolated,
    #[error("foliation coefficients are not coprime at the origin")]
    NotSaturated,
    #[error("curve is not invariant: {0}")]
    NotInvariant(String),
    #[error("input has a nonzero constant term")]
    UnitInput,
    #[error("bundle order {0} is not divisible by the bundle size {1}")]
    NotDivisible(i64, usize),
    #[error("operation needs an explicit parametrization, got a conjugate bundle")]
    BundleUnsupported,
    #[error("degree window {0} too small for value set stabilization")]
    WindowTooSmall(u32),
    #[error("Euler relation xA+yB+zC=0 fails")]
    EulerViolation,
    #[error("point lies outside the requested chart")]
    PointOutsideChart,
    #[error("point {0} is not a singular point of the foliation")]
    NonsingularPoint(String),
    #[error("delta invariant (mu + r - 1)/2 is not an integer at {0}")]
    NonIntegerDelta(String),
    #[error("genus formula gives a negative value ({0}); singular point list is incomplete")]
    NegativeGenus(i64),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("internal cross-check failed: {0}")]
    Inconsistent(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    /// True for failures caused by a computation limit rather than by the input.
    pub fn is_limit(&self) -> bool {
        matches!(
            self,
            Error::DegreeCapExceeded(_) | Error::PrecisionExhausted(_) | Error::WindowTooSmall(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
