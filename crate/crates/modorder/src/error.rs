//! Crate-wide error type. Axiom failures always carry a concrete witness so a
//! caller can print the offending elements by name.

use thiserror::Error;

/// A named algebraic law, used in axiom-violation reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Law {
    AddAssociative,
    AddCommutative,
    AddIdentity,
    AddInverse,
    MulAssociative,
    MulIdentity,
    DistributiveLeft,
    DistributiveRight,
    ActionIdentity,
    ActionZero,
    ActionScalarAdd,
    ActionElementAdd,
    ActionScalarMul,
    ActionRepeatedAddition,
    ActionExponentAnnihilates,
}

impl std::fmt::Display for Law {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Law::AddAssociative => "addition associativity",
            Law::AddCommutative => "addition commutativity",
            Law::AddIdentity => "additive identity",
            Law::AddInverse => "additive inverses",
            Law::MulAssociative => "multiplication associativity",
            Law::MulIdentity => "multiplicative identity",
            Law::DistributiveLeft => "left distributivity",
            Law::DistributiveRight => "right distributivity",
            Law::ActionIdentity => "action of the scalar one",
            Law::ActionZero => "action of the scalar zero",
            Law::ActionScalarAdd => "action over scalar addition",
            Law::ActionElementAdd => "action over element addition",
            Law::ActionScalarMul => "action over scalar multiplication",
            Law::ActionRepeatedAddition => "integer action as repeated addition",
            Law::ActionExponentAnnihilates => "exponent annihilates every element",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("shape error: {0}")]
    Shape(String),

    #[error("axiom violation: {law} fails at elements {witness:?}")]
    AxiomViolation { law: Law, witness: Vec<usize> },

    #[error("capacity exceeded: {what} has size {size}, cap is {cap}")]
    CapacityExceeded { what: &'static str, size: usize, cap: usize },

    #[error("pattern not closed under multiplication: position ({row},{col}) can receive {value} which is outside the declared entry set")]
    PatternNotClosed { row: usize, col: usize, value: usize },

    #[error("pattern does not contain the identity matrix at position ({row},{col})")]
    IdentityNotInPattern { row: usize, col: usize },

    #[error("scalar rings differ between the two modules")]
    ScalarMismatch,

    #[error("endomorphism not present in the enumerated table: {0}")]
    EndomorphismNotFound(String),

    #[error("not a submodule: {0}")]
    NotASubmodule(String),

    #[error("relation is not a partial order: {0}")]
    NotAPartialOrder(String),

    #[error("schema error at {path}: {detail}")]
    Schema { path: String, detail: String },

    #[error("unknown claim id: {0}")]
    UnknownClaimId(String),

    #[error("unknown search property: {0}")]
    UnknownProperty(String),

    #[error("unknown catalog instance: {0}")]
    UnknownInstance(String),

    #[error("unknown element name: {0}")]
    UnknownElement(String),

    #[error("unknown relation name: {0} (expected mitsch|minus|jones|dsum|space)")]
    UnknownRelation(String),

    #[error("precondition unmet: {0}")]
    PreconditionUnmet(String),

    #[error("io error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

/// Hard cap on carrier sizes for rings and modules.
pub const SIZE_CAP: usize = 4096;

/// Cap on the number of maps an enumeration may produce.
pub const HOM_COUNT_CAP: usize = 1 << 16;

/// Above this size the brute-force homomorphism oracle refuses to run.
pub const ORACLE_SOURCE_CAP: usize = 8;

/// Largest endomorphism ring that is re-validated by the full cubic law scan.
/// Larger tables are still checked by construction (every pointwise sum and
/// composite must resolve to an enumerated map) plus the quadratic laws.
pub const END_RING_FULL_VALIDATION_CAP: usize = 700;

/// Cap on |M| for submodule enumeration, quotient/transfer and retraction
/// searches, which need fresh endomorphism enumerations per submodule.
pub const SUBMODULE_ANALYSIS_CAP: usize = 256;
