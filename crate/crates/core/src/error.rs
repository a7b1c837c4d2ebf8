use thiserror::Error;

use crate::poly::MultiPoly;
use crate::poly::Rationals;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("{d} is not an admissible discriminant: {reason}")]
    NotAdmissible { d: i64, reason: String },

    #[error("degenerate lattice: {0}")]
    Degenerate(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("ring mismatch: {0}")]
    RingMismatch(String),

    #[error("closed form and oracle disagree at d = {d} ({kind}): closed = {closed}, oracle = {oracle}")]
    OracleMismatch {
        d: i64,
        kind: &'static str,
        closed: bool,
        oracle: bool,
    },

    #[error("flag condition sigma(W1, W6, V10) = 0 fails")]
    FlagViolated,

    #[error("all restricted quartics vanish identically")]
    AllRestrictionsZero,

    #[error("gcd of restricted quartics has degree {degree}, expected a cubic: {gcd}")]
    NotACubic { degree: u32, gcd: Box<MultiPoly<Rationals>> },

    #[error("restricted quartic #{index} is not divisible by the extracted cubic")]
    NotDivisible { index: usize },

    #[error("self-check failed: {0}")]
    SelfCheck(String),

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}
