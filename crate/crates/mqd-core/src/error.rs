//! Error type shared by the whole crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate mode label `{0}`")]
    DuplicateMode(String),
    #[error("unknown mode label `{0}`")]
    UnknownMode(String),
    #[error("register has no Cooper-pair counter")]
    NoCooperRegister,
    #[error("empty Cooper range [{0}, {1}]")]
    EmptyCooperRange(i32, i32),
    #[error("operator not Hermitian: max |A - A†| entry = {defect:e}")]
    NotHermitian { defect: f64 },
    #[error("operands live on different bases")]
    BasisMismatch,
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("basis state {0} not in operator basis")]
    UnknownBasisState(String),
    #[error("state norm deviates from 1 by {0:e}")]
    NotNormalized(f64),
    #[error("invalid time grid: {0}")]
    InvalidGrid(String),
    #[error("{given} control assignments for {expected} scheme controls")]
    FieldCountMismatch { given: usize, expected: usize },
    #[error("control index {0} out of range")]
    UnknownControl(usize),
    #[error("forced parity outcome has probability {0:e}")]
    ImpossibleOutcome(f64),
    #[error("operator is not a diagonal ±1 parity operator")]
    NotParityOperator,
    #[error("unknown target label `{0}`")]
    UnknownTarget(String),
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("eigensolver did not converge after {0} sweeps")]
    NoConvergence(usize),
}
