use thiserror::Error;

/// Rejected shape parameters.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ShapeError {
    #[error("{family} has no implicit field (parametric-only)")]
    ParametricOnly { family: &'static str },
    #[error("parameter {name} = {value} is outside {range}")]
    OutOfRange {
        name: &'static str,
        value: f64,
        range: &'static str,
    },
}

impl ShapeError {
    pub(crate) fn check(
        name: &'static str,
        value: f64,
        range: &'static str,
        ok: bool,
    ) -> Result<(), ShapeError> {
        if ok && !value.is_nan() {
            Ok(())
        } else {
            Err(ShapeError::OutOfRange { name, value, range })
        }
    }
}

/// Invalid sampling domains and non-finite samples.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GridError {
    #[error("axis {axis} needs at least 2 cells, got {cells}")]
    TooFewCells { axis: char, cells: usize },
    #[error("axis {axis} bounds are empty or not finite: [{min}, {max}]")]
    EmptyAxis { axis: char, min: f64, max: f64 },
    #[error("field is not finite at ({x}, {y}, {z}): {value}")]
    NonFinite { x: f64, y: f64, z: f64, value: f64 },
    #[error("sample buffer has {got} values, expected {expected}")]
    SampleCount { expected: usize, got: usize },
}

/// Failures of the numerical checks.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("no sign change along the probe (origin value {inner}, far value {outer})")]
    NoSignChange { inner: f64, outer: f64 },
    #[error("inverse cosine argument {argument} outside [-1, 1] at omega = {omega}, y = {y}")]
    Domain { omega: f64, y: f64, argument: f64 },
    #[error("omega sequence must be positive, strictly halving and at most 0.5")]
    BadOmegas,
}
