use thiserror::Error;

/// Failures of the numerical routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no-double-well: {params} has fewer than two minima in [{lo}, {hi}]")]
    NoDoubleWell { params: String, lo: f64, hi: f64 },

    #[error("non-finite value while evaluating {0}")]
    NonFinite(String),

    #[error("eos-singular: 2X F_X - F vanishes at X = {x_val}")]
    EosSingular { x_val: f64 },

    #[error("cs2-singular: F_X + 2X F_XX vanishes at X = {x_val}")]
    Cs2Singular { x_val: f64 },

    #[error("degenerate-kinetic: coefficient of the second derivative crosses zero at t = {t}")]
    DegenerateKinetic { t: f64 },

    #[error("unphysical box limit: steepness {b} exceeds {max}")]
    UnphysicalBoxLimit { b: f64, max: f64 },

    #[error("shape error: {0}")]
    Shape(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn finite(value: f64, context: &str) -> Result<f64> {
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::NonFinite(context.to_string()))
    }
}
