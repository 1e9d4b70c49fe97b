use thiserror::Error;

/// Errors raised by the counting routines.
///
/// Precondition violations (`ZeroPoly`, `BadInterval`, `RootAtEndpoint`,
/// `ZeroDirection`) are the caller's fault. `InternalNegative` and
/// `InternalParity` mean a quantity that must be a nonnegative even integer
/// was not, which can only happen through a bug.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZeroPoly,
    #[error("gcd of two zero polynomials is undefined")]
    BothZero,
    #[error("operation requires a nonzero polynomial (ZeroPoly)")]
    ZeroPoly,
    #[error("interval lower endpoint must be strictly below the upper endpoint (BadInterval)")]
    BadInterval,
    #[error("polynomial vanishes at interval endpoint {0} (RootAtEndpoint)")]
    RootAtEndpoint(String),
    #[error("half-plane direction must be nonzero (ZeroDirection)")]
    ZeroDirection,
    #[error("internal invariant breached: negative count {0}")]
    InternalNegative(i64),
    #[error("internal invariant breached: odd value {0} where an even one is required")]
    InternalParity(i64),
    #[error("root specification has non-real roots; no real polynomial exists (NonRealSpec)")]
    NonRealSpec,
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for violations of documented input preconditions.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::DivisionByZeroPoly
                | Error::BothZero
                | Error::ZeroPoly
                | Error::BadInterval
                | Error::RootAtEndpoint(_)
                | Error::ZeroDirection
                | Error::NonRealSpec
        )
    }

    pub fn is_internal(&self) -> bool {
        matches!(self, Error::InternalNegative(_) | Error::InternalParity(_))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
