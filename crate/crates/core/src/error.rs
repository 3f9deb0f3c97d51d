use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: expected {expected}, got {got}")]
    VarCountMismatch { expected: usize, got: usize },
    #[error("at most {max} variables are supported, got {got}")]
    TooManyVariables { max: usize, got: usize },
    #[error("variable names must be pairwise distinct and non-empty")]
    BadVariableNames,
    #[error("operation requires a squarefree ideal")]
    NotSquarefree,
    #[error("operation is undefined for the zero ideal")]
    ZeroIdeal,
    #[error("operation is undefined for the unit ideal")]
    UnitIdeal,
    #[error("ideal is not generated in degree {expected}")]
    WrongDegree { expected: u32 },
    #[error("variable index {0} is out of range")]
    VariableOutOfRange(usize),
    #[error("operation is undefined for the void complex")]
    VoidComplex,
    #[error("x{0} is not a vertex of the complex")]
    NotAVertex(usize),
    #[error("order is not a permutation of {0}")]
    NotAPermutation(&'static str),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("resource cap exceeded: {what} is {got}, cap {cap}")]
    Cap { what: &'static str, got: usize, cap: usize },
    #[error("certificate of kind {cert} cannot certify a {subject}")]
    KindMismatch { cert: &'static str, subject: &'static str },
    #[error("malformed certificate: {0}")]
    MalformedCertificate(String),
}

pub type Result<T> = std::result::Result<T, Error>;
