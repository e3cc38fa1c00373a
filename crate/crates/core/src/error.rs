use thiserror::Error;

use crate::scalar::Symbol;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("no value assigned to symbol {0}")]
    MissingSymbol(Symbol),

    #[error("division by zero")]
    DivisionByZero,

    #[error("division by a non-constant scalar")]
    NonConstantDivisor,

    #[error("index {index} out of range 0..={max}")]
    IndexOutOfRange { index: i64, max: i64 },

    #[error("shift m = {0} outside -2..=2")]
    BadShift(i64),

    #[error("V_{{{target}}} does not occur in V_{l} (x) V_4")]
    UndefinedComponent { l: i64, target: i64 },

    #[error("shape mismatch: expected {expected}, found {found}")]
    ShapeMismatch { expected: String, found: String },

    #[error("matrix is not in k_C (not antisymmetric)")]
    NotInKC,

    #[error("matrix is not in p_C (not symmetric)")]
    NotInPC,

    #[error("weight {p} has the wrong parity for this principal series")]
    ParityViolation { p: i64 },

    #[error("chi_{p} is not a vector of D_{k}")]
    NotInModule { k: i64, p: i64 },

    #[error("empty block: d(sigma; {l}) = 0")]
    EmptyBlock { l: i64 },

    #[error("no case of the contiguous-relation tables applies to l = {l}, m = {m}")]
    CaseMismatch { l: i64, m: i64 },

    #[error("top {rows} rows of the stacked assembly for (l, m) = ({l}, {m}) are not zero")]
    NonZeroOffsetRows { l: i64, m: i64, rows: usize },

    #[error("output term at K-type level {level} exceeds truncation l_max = {l_max}")]
    TruncationLeak { level: i64, l_max: i64 },

    #[error("invalid series parameters: {0}")]
    InvalidParams(String),

    #[error("parse error: {0}")]
    Parse(String),
}
