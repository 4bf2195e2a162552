use thiserror::Error;

/// Errors produced by field construction, polynomial algebra and code analysis.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field spec: {0}")]
    InvalidSpec(String),

    #[error("modulus is reducible over F_{p}")]
    ReducibleModulus { p: u32 },

    #[error("modulus has degree {got}, expected e*n = {expected}")]
    ModulusDegree { got: usize, expected: usize },

    #[error("field of size {size} exceeds the table cap {cap}")]
    FieldTooLarge { size: u64, cap: u64 },

    #[error("element index {index} out of range for a field of size {order}")]
    ElementOutOfRange { index: u64, order: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("operands belong to different fields")]
    ContextMismatch,

    #[error("{sub} does not divide {n}")]
    NotADivisor { sub: usize, n: usize },

    #[error("power equation with zero right-hand side")]
    ZeroPower,

    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },

    #[error("generators are F_q-linearly dependent")]
    DependentGenerators,

    #[error("{what}: {size} items exceeds the cap {cap}")]
    TooLarge {
        what: &'static str,
        size: u128,
        cap: u128,
    },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("code is not of the form <x, f>")]
    NotGraphForm,

    /// A computation contradicted a published claim it was expected to reproduce.
    #[error("contradiction: {0}")]
    Contradiction(String),

    #[error("malformed input: {0}")]
    Malformed(String),
}

pub type Result<T> = std::result::Result<T, Error>;
