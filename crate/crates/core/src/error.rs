use num_complex::Complex64;
use thiserror::Error;

/// Which idempotent component an error refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Component {
    /// The `e1` component.
    First,
    /// The `e2` component.
    Second,
    /// A plain complex argument.
    Scalar,
}

impl std::fmt::Display for Component {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Component::First => "e1",
            Component::Second => "e2",
            Component::Scalar => "scalar",
        })
    }
}

#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("division by a zero divisor (a vanishing idempotent component)")]
    ZeroDivisorDivision,
    #[error("logarithm of a zero divisor or of zero")]
    ZeroDivisorLog,
    #[error("non-integer power of a zero divisor or of zero")]
    ZeroDivisorPower,
    #[error("gamma pole at {at} in component {component}")]
    GammaPole { component: Component, at: Complex64 },
    #[error("series did not meet the stopping rule within {terms} terms")]
    MaxTermsExceeded { terms: usize },
    #[error(
        "series diverges or lost all significance after {terms} terms (last ratio {ratio:.3e})"
    )]
    SeriesDivergence { terms: usize, ratio: f64 },
    #[error("quadrature error estimate {estimate:.3e} above tolerance {tol:.3e}")]
    QuadratureNonConvergence { estimate: f64, tol: f64 },
    #[error("contour truncation tail {tail:.3e} above tolerance {tol:.3e}")]
    PathTruncationError { tail: f64, tol: f64 },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

impl Error {
    /// Stable name of the variant, used for diagnostics.
    pub fn name(&self) -> &'static str {
        match self {
            Error::ZeroDivisorDivision => "ZeroDivisorDivision",
            Error::ZeroDivisorLog => "ZeroDivisorLog",
            Error::ZeroDivisorPower => "ZeroDivisorPower",
            Error::GammaPole { .. } => "GammaPole",
            Error::MaxTermsExceeded { .. } => "MaxTermsExceeded",
            Error::SeriesDivergence { .. } => "SeriesDivergence",
            Error::QuadratureNonConvergence { .. } => "QuadratureNonConvergence",
            Error::PathTruncationError { .. } => "PathTruncationError",
            Error::Precondition(_) => "Precondition",
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
