use thiserror::Error;

use crate::rational::Rational;

/// Failures raised by the series, residue and invariant machinery.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by a series with zero constant term")]
    DivByNonUnit,
    #[error("bad constant term {0}")]
    BadConstantTerm(Rational),
    #[error("requested order {requested} exceeds available truncation {available}")]
    TruncationMismatch { requested: usize, available: usize },
    #[error("coefficient of degree {degree} lies beyond truncation {truncation}")]
    OutOfRange { degree: usize, truncation: usize },
    #[error("expression is not t-free: t^{t_power} has coefficient {value} at q^{q_degree}")]
    NotTFree {
        t_power: usize,
        q_degree: usize,
        value: Rational,
    },
    #[error("mirror map must vanish at q = 0, found constant term {0}")]
    BadMirrorMap(Rational),
    #[error("Laurent window too small: need exponent {needed}, window is [{low}, {high}]")]
    WindowTooSmall { needed: i64, low: i64, high: i64 },
    #[error("u-series has a nonzero degree-zero term")]
    NonzeroConstant,
    #[error(
        "series is not regularizable: u^{degree} coefficient has a pole of order {order} at 0"
    )]
    NotRegularizable { degree: usize, order: usize },
    #[error("function {index} has a pole of order {order} at 0 (at most 1 allowed)")]
    PoleTooHigh { index: usize, order: usize },
    #[error("q^{degree} coefficient has a pole of order {order} at hbar = 0")]
    RegularityViolation { degree: usize, order: usize },
    #[error("rational function has a pole at {0}")]
    PoleAt(Rational),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("missing column {0}")]
    MissingColumn(&'static str),
    #[error("identity check failed: {0}")]
    IdentityFailed(String),
    #[error("invalid parameters: {0}")]
    InvalidSpec(String),
}

pub type Result<T> = std::result::Result<T, Error>;
