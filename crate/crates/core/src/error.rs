use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoreError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("specialization pole: a denominator vanishes at v = {0}")]
    SpecializationPole(String),
    #[error("cannot specialize at v = 0")]
    ZeroSpecialization,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown root datum `{0}` (expected A1 or A2)")]
    UnknownRootDatum(String),
    #[error("weight has {got} coordinates, root datum has rank {rank}")]
    RankMismatch { got: usize, rank: usize },
    #[error("weight {0} is not dominant")]
    NotDominant(String),
    #[error("filtration degree of zero is undefined")]
    ZeroDegree,
    #[error("vector leaves the truncation: height {height} exceeds depth {depth}")]
    DepthOverflow { height: u32, depth: u32 },
    #[error("depth {depth} too small to exhibit the simple quotient")]
    DepthTooSmall { depth: u32 },
    #[error("operation requires root datum {expected}")]
    UnsupportedType { expected: String },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("module carries no equivariant structure")]
    NotEquivariant,
    #[error("argument outside the Borel subalgebra")]
    NotBorel,
    #[error("config error at line {line}: {msg}")]
    Config { line: usize, msg: String },
    #[error("{0}")]
    Invalid(String),
}
