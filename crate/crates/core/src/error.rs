//! Error type shared by all modules.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("degenerate equation: {0}")]
    DegenerateEquation(String),
    #[error("equation is not squarefree")]
    NotSquarefree,
    #[error("equation is probably reducible: {0}")]
    ProbablyReducible(String),
    #[error("denominator is not invertible modulo the equation")]
    NonInvertibleDenominator,
    #[error("unsupported local form: {0}")]
    UnsupportedLocalForm(String),
    #[error("unsupported branch locus: {0}")]
    UnsupportedBranchLocus(String),
    #[error("hyperelliptic reduction requires a degree-2 presentation in S or T")]
    NotHyperellipticSupported,
    #[error("genus too small for hyperelliptic reduction")]
    GenusTooSmall,
    #[error("no rational branch point available over Q(z)")]
    NoRationalPoint,
    #[error("chosen element does not generate the function field")]
    NotAGenerator,
    #[error("non-rational support: {0}")]
    NonRationalSupport(String),
    #[error("degenerate point tuple")]
    DegenerateTuple,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),
}

pub type Result<T> = std::result::Result<T, Error>;
