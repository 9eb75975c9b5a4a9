use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("field of size {p}^{n} exceeds the supported bound 2^62")]
    Overflow { p: u64, n: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("F_{p}^{m} is not a subfield of F_{p}^{n}")]
    NotASubfield { p: u64, m: u32, n: u32 },
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("denominator is zero")]
    ZeroDenominator,
    #[error("rational function is constant")]
    ConstantFunction,
    #[error("rational function is inseparable (Wronskian vanishes)")]
    Inseparable,
    #[error("Möbius transformation has zero determinant")]
    DegenerateTransformation,
    #[error("operation is not supported in characteristic {0}")]
    UnsupportedCharacteristic(u64),
    #[error("no admissible value found: {0}")]
    SearchExhausted(String),
    #[error("hypothesis not met: {0}")]
    HypothesisNotMet(String),
    #[error("parameter makes the construction degenerate: {0}")]
    DegenerateParameter(String),
    #[error("enumeration needs {needed} candidates, budget is {budget}")]
    BudgetExceeded { needed: u64, budget: u64 },
    #[error("invalid ramification divisor: {0}")]
    InvalidDivisor(String),
    #[error("only {available} parameters available, {requested} requested")]
    InsufficientParameters { available: usize, requested: usize },
    #[error("internal invariant violated: {0}")]
    InvariantViolation(String),
}

pub type Result<T> = std::result::Result<T, Error>;
