use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a partition: {0}")]
    BadPartition(String),
    #[error("(λ,n) not dominant: need 2λ₁ ≤ εn, got λ₁={lambda1}, n={n}, ε={eps}")]
    NotDominant { lambda1: usize, n: u32, eps: u32 },
    #[error("shape {0} is not in P_x (parts must be divisible by ε)")]
    NotInPx(String),
    #[error("epsilon must be 1 (type b) or 2 (type c), got {0}")]
    BadEpsilon(u32),
    #[error("weight vectors of different types cannot be combined")]
    EpsilonMismatch,
    #[error("letter {0} is outside the alphabet")]
    LetterOutOfRange(u32),
    #[error("invalid tableau: {0}")]
    BadTableau(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("rank error: {0}")]
    BadRank(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not highest weight: {0}")]
    NotHighestWeight(String),
}

pub type Result<T> = std::result::Result<T, Error>;
