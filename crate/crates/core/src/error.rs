use thiserror::Error;

/// An axiom that a candidate table or map violates, with a witness.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ValidationError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("carrier of size {0} exceeds the supported maximum")]
    CarrierTooLarge(usize),
    #[error("row {row} has {len} entries, expected {n}")]
    NotSquare { row: usize, len: usize, n: usize },
    #[error("entry {value} at ({row}, {col}) is out of range for n = {n}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, n: usize },
    #[error("tables have different sizes ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("not a Latin square: {line} {index} repeats value {value}")]
    NotLatinSquare { line: Line, index: usize, value: usize },
    #[error("element 0 is not a two-sided additive zero (fails at {witness})")]
    NoTwoSidedZero { witness: usize },
    #[error("multiplication is not associative: ({0}*{1})*{2} != {0}*({1}*{2})")]
    MulNotAssociative(usize, usize, usize),
    #[error("{one} is not a two-sided multiplicative identity (fails at {witness})")]
    NotIdentity { one: usize, witness: usize },
    #[error("right distributivity fails: ({0}+{1})*{2} != {0}*{2}+{1}*{2}")]
    RightDistributivityFails(usize, usize, usize),
    #[error("left distributivity fails: {0}*({1}+{2}) != {0}*{1}+{0}*{2}")]
    LeftDistributivityFails(usize, usize, usize),
    #[error("zero is not left absorbing: 0*{0} != 0")]
    ZeroNotLeftAbsorbing(usize),
    #[error("addition is not an abelian group: {0}")]
    AdditionNotAbelianGroup(String),
    #[error("map is not total: expected {expected} images, got {got}")]
    MapNotTotal { expected: usize, got: usize },
    #[error("map sends {element} to {image}, outside the target of size {n}")]
    MapOutOfRange { element: usize, image: usize, n: usize },
    #[error("not a homomorphism: {0}")]
    NotAHomomorphism(HomWitness),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Line::Row => "row",
            Line::Column => "column",
        })
    }
}

/// Which homomorphism equation failed and where.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomWitness {
    Add(usize, usize),
    Mul(usize, usize),
    One { image: usize },
}

impl std::fmt::Display for HomWitness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            HomWitness::Add(a, b) => write!(f, "f({a}+{b}) != f({a})+f({b})"),
            HomWitness::Mul(a, b) => write!(f, "f({a}*{b}) != f({a})*f({b})"),
            HomWitness::One { image } => write!(f, "f(1) = {image} is not the identity"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Validation(#[from] ValidationError),
    #[error("{what}: size {actual} exceeds bound {limit}")]
    BoundExceeded { what: &'static str, limit: usize, actual: usize },
    #[error("subset is not a subloop")]
    NotASubloop,
    #[error("element {0} is not idempotent")]
    NotIdempotent(usize),
    #[error("the zero idempotent has no indecomposable corner")]
    ZeroIdempotent,
    #[error("subset is not a two-sided ideal")]
    NotAnIdeal,
    #[error("target is not a ring")]
    TargetNotARing,
    #[error("loop near-ring is not zero-symmetric")]
    NotZeroSymmetric,
    #[error("x^2 - x is not in the ideal for x = {0}")]
    NotApproximatelyIdempotent(usize),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("hypothesis failed: corner at idempotent {witness} is not local")]
    HypothesisFailed { witness: usize },
    #[error("enumeration stopped after {0} results")]
    LimitReached(usize),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
