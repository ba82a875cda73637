//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by parsers, constructors and verifiers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Syntax error in one of the text formats.
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A clause contains a variable with both signs.
    #[error("tautological clause: variable {var} occurs with both signs")]
    TautologicalClause { var: u32 },

    /// A xor-clause whose equations cover every assignment (the negated
    /// equation system is inconsistent, so nothing falsifies the clause).
    #[error("tautological xor-clause: negated equation system is inconsistent")]
    TautologicalXorClause,

    /// A literal or equation mentions a variable outside `1..=max`.
    #[error("variable {var} out of range 1..={max}")]
    VariableOutOfRange { var: u32, max: u32 },

    /// A parameter is outside its supported range.
    #[error("{0}")]
    OutOfRange(String),

    /// A generation or expansion size guard tripped.
    #[error("size guard exceeded: {0}")]
    SizeGuard(String),

    /// An operation required a consistent affine system.
    #[error("inconsistent affine system")]
    InconsistentSystem,

    /// Inversion of zero in GF(2^t).
    #[error("inversion of zero in GF(2^{t})")]
    ZeroInverse { t: u32 },

    /// An operation's precondition does not hold for the given input.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// A decision tree failed structural validation.
    #[error("invalid tree: {0}")]
    InvalidTree(String),

    /// A certificate mapping entry points outside the axiom formula.
    #[error("mapping entry for clause {clause} points to axiom {target}, but the formula has {len} clauses")]
    MappingOutOfRange {
        clause: usize,
        target: usize,
        len: usize,
    },

    /// A succinct-NSR proof is empty or indexes a missing clause.
    #[error("invalid proof: {0}")]
    InvalidProof(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Error {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}
