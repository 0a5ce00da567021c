use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("module is not finitely generated projective: {0}")]
    NotProjective(String),
    #[error("element is not grouplike: {0}")]
    NotGrouplike(String),
    #[error("not a unital subalgebra: {0}")]
    NotSubalgebra(String),
    #[error("module is not unital over the idempotent ring: {0}")]
    NonUnital(String),
    #[error("grading violation: {0}")]
    GradingViolation(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("invalid structure: {0}")]
    InvalidStructure(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
}

pub type Result<T> = std::result::Result<T, Error>;
