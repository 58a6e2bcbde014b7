use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("division by zero in the coefficient field")]
    DivisionByZero,
    #[error("exponent overflow")]
    ExponentOverflow,
    #[error("operands belong to different rings")]
    RingMismatch,
    #[error("monomial length mismatch: {0} vs {1}")]
    LengthMismatch(usize, usize),
    #[error("parse error at {line}:{col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("the unit ideal has no dimension")]
    UnitIdeal,
    #[error("generator has a nonzero constant term")]
    NotInMaximalIdeal,
    #[error("map is not a splitting: trace of u is not 1")]
    NotASplitting,
    #[error("q^n = {0} exceeds the configured limit {1}")]
    ExpansionTooLarge(u64, u64),
    #[error("system has {0} members, exceeding the closure cap {1}")]
    MemberCapExceeded(usize, usize),
    #[error("{0}")]
    Input(String),
    #[error("verdict undecidable: {0}")]
    Undecidable(String),
}
