use thiserror::Error;

/// Errors raised by q-series evaluation, exact arithmetic, sampling and quadrature.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum QError {
    #[error("series or product failed to converge: {0}")]
    NonConvergent(String),
    #[error("denominator factor within the pole margin: {0}")]
    Pole(String),
    #[error("parameter outside the domain: {0}")]
    Domain(String),
    #[error("series orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("series has zero constant term and cannot be inverted")]
    NotInvertible,
    #[error("coefficient index {index} is not below the truncation order {order}")]
    OrderExceeded { index: usize, order: usize },
    #[error("no admissible point after {draws} draws for {identity}")]
    SamplingExhausted { identity: String, draws: usize },
    #[error("adaptive quadrature exceeded {0} panels")]
    MaxPanelsExceeded(usize),
    #[error("{0} is not available in exact mode")]
    Unsupported(String),
}

pub type Result<T, E = QError> = std::result::Result<T, E>;
