use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("polynomial is not divisible by the given divisor")]
    NotDivisible,

    #[error("polynomial is not invariant under the parabolic subgroup")]
    NotInvariant,

    #[error("polynomial is not anti-invariant under the parabolic subgroup")]
    NotAntiInvariant,

    #[error("repeated block index {0}")]
    RepeatedIndex(i64),

    #[error("not a key situation: {0}")]
    NotKeySituation(String),

    #[error("dominance fails: the algebra is zero and its top degree is undefined")]
    ZeroAlgebra,

    #[error("quotient does not vanish above degree {top}: dimension {dim} in degree {degree}")]
    NonTerminating { top: usize, degree: usize, dim: usize },

    #[error("no decomposition over the power basis exists")]
    NoSolution,

    #[error("operator index {index} leaves the window [{lo}, {hi}]")]
    WindowOverflow { index: i64, lo: i64, hi: i64 },
}
