use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree {n} exceeds the cap {cap}")]
    DegreeCap { n: usize, cap: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("element {elem} outside the valid range [1, {max}]")]
    OutOfRange { elem: usize, max: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("invalid {kind}: {reason}")]
    Invalid { kind: &'static str, reason: String },
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
