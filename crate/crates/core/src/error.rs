use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Argument outside the domain of a special function.
    #[error("domain error: {0}")]
    Domain(String),

    /// Polynomial family parameter out of range.
    #[error("invalid polynomial parameter: {0}")]
    InvalidParameter(String),

    /// Quantum numbers violate the hydrogenic constraints.
    #[error("invalid state: {0}")]
    InvalidState(String),

    /// Angle outside its closed/half-open range.
    #[error("invalid angle: {0}")]
    InvalidAngle(String),

    #[error("quadrature did not converge for {what}: value {value:e}, error estimate {error:e}")]
    NotConverged {
        what: String,
        value: f64,
        error: f64,
    },

    #[error("no closed form is available for {0}")]
    ClosedFormUnavailable(String),

    #[error("invalid asymptotic request: {0}")]
    InvalidRequest(String),
}

pub type Result<T> = std::result::Result<T, Error>;
