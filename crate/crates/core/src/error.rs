use thiserror::Error;

use crate::family::Violation;

/// Errors raised by the arithmetic and experiment layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not prime")]
    NotPrime(u64),
    #[error("extension degree must be at least 1")]
    ZeroExtension,
    #[error("field of order {p}^{ext} exceeds the supported integer range")]
    FieldTooLarge { p: u64, ext: u32 },
    #[error("modulus must be a monic irreducible polynomial of degree {expected} over F_{p}")]
    BadModulus { p: u64, expected: u32 },
    #[error("element code {code} is out of range for a field of order {q}")]
    CodeOutOfRange { code: u64, q: u64 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("quadratic character undefined for even q")]
    EvenCharacteristic,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a polynomial of positive degree")]
    ConstantPolynomial,
    #[error("inseparable input: derivative vanishes identically")]
    Inseparable,
    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),
    #[error("partition {parts:?} does not sum to {n}")]
    InvalidPartition { parts: Vec<usize>, n: usize },
    #[error("family is not admissible: {}", display_violations(.0))]
    Inadmissible(Vec<Violation>),
    #[error("enumeration of {requested} items exceeds the budget of {cap}")]
    BudgetExceeded { requested: u128, cap: u64 },
    #[error("bound inapplicable: polynomial is a constant times a square")]
    SquareArgument,
    #[error("bound requires the exponents not to be all even")]
    AllEvenExponents,
    #[error("families {0} and {1} are associated")]
    AssociatedFamilies(usize, usize),
    #[error("invalid polynomial literal: token {position} ({token:?}) {reason}")]
    BadLiteral {
        position: usize,
        token: String,
        reason: &'static str,
    },
    #[error("{0}")]
    InvalidArgument(String),
}

fn display_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.label()).collect::<Vec<_>>().join(", ")
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
