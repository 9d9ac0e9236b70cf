use thiserror::Error;

/// Errors raised anywhere in the library.
///
/// Every variant maps onto one of the CLI exit codes through [`Error::exit_code`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero in cyclotomic field")]
    DivisionByZero,
    #[error("conductor {from} does not divide {to}")]
    IncompatibleConductor { from: u64, to: u64 },
    #[error("matrix does not satisfy M^{order} = I")]
    NotFiniteOrder { order: usize },
    #[error("group closure exceeded cap of {cap} elements")]
    ClosureCapExceeded { cap: usize },
    #[error("generator {index} is not invertible")]
    NonInvertibleGenerator { index: usize },
    #[error("enumeration of {requested} items exceeds cap of {cap}")]
    EnumerationCapExceeded { requested: u128, cap: u128 },
    #[error("tuple product is not the identity")]
    ProductNotIdentity,
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("model violation: {0}")]
    ModelViolation(String),
    #[error("invalid Nikulin triple (r={r}, a={a}, delta={delta})")]
    InvalidNikulinTriple { r: i64, a: i64, delta: i64 },
    #[error("weights {d1} and {d2} are not coprime")]
    NotCoprime { d1: u64, d2: u64 },
    #[error("group is not contained in SL(n)")]
    NotSL,
    #[error("pairing is undefined for this model: {0}")]
    PairingUndefined(String),
    #[error("exponent out of range: {0}")]
    ExponentRange(String),
    #[error("first Chern number violates the congruence: {0}")]
    CongruenceViolation(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error: {0}")]
    Validation(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) => 1,
            Error::ClosureCapExceeded { .. } | Error::EnumerationCapExceeded { .. } => 3,
            _ => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
