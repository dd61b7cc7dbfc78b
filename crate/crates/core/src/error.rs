use thiserror::Error;

/// Failures raised by the exact engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degenerate equation: all coefficients are zero")]
    DegenerateEquation,

    #[error("divisor class must be nonzero")]
    ZeroClass,

    #[error("intersection product needs 2 or 3 divisor factors, got {0}")]
    ProductArity(usize),

    #[error("invalid ruled threefold: {0}")]
    InvalidThreefold(String),

    #[error("operation needs the split type (e1, e2) of the bundle")]
    MissingSplit,

    #[error("polarizations are not separated by the wall: {0}")]
    NoSeparation(String),

    #[error("complete-intersection factors multiply to {product}, but the wall has [Z] = {expected}")]
    FactorMismatch { product: String, expected: String },

    #[error("class {0} is not in the open positive cone")]
    OutsideCone(String),

    #[error("class {0} does not define a wall")]
    NotAWall(String),

    #[error("invalid family: {0}")]
    InvalidFamily(String),

    #[error("enumeration truncated at row a = {row}: {detail}")]
    Truncation { row: i64, detail: String },

    #[error("no such sector: {0}")]
    NoSuchSector(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
