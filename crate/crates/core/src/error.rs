use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at (h1, h2) = ({h1}, {h2}): denominator {den} vanishes")]
    Pole { h1: String, h2: String, den: String },
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
    #[error("pole of order {order} at u = {pole}")]
    HigherOrderPole { pole: String, order: usize },
    #[error("rational function is not regular at u = infinity")]
    NotRegularAtInfinity,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error("invalid plane partition: {0}")]
    InvalidPartition(String),
    #[error("box {bx} cannot be added to {partition}")]
    NotAddable { partition: String, bx: String },
    #[error("box {bx} cannot be removed from {partition}")]
    NotRemovable { partition: String, bx: String },
    #[error("addable boxes {a} and {b} of {partition} have equal content")]
    ContentCollision { partition: String, a: String, b: String },
    #[error("linear system at level {level} is inconsistent")]
    Inconsistent { level: usize },
    #[error("linear system at level {level} is rank deficient (kernel dimension {kernel})")]
    RankDeficient { level: usize, kernel: usize },
    #[error("vector is outside the span at level {level}: {residual}")]
    NotInSpan { level: usize, residual: String },
    #[error("consistency check failed: {0}")]
    Consistency(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
