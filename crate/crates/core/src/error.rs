use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    /// The operation is not defined on the degree-0 monomial.
    #[error("{0} is undefined on the unit monomial")]
    UnitMonomial(&'static str),

    #[error("x1^{0} is lex-largest and has no predecessor")]
    NoPredecessor(u32),

    #[error("invalid Macaulay representation: {0}")]
    InvalidRep(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("enumeration of {size} monomials exceeds the cap of {cap}")]
    ResourceLimit { size: String, cap: u64 },

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    /// A guaranteed invariant failed to hold. Always a bug.
    #[error("internal consistency error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }

    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
