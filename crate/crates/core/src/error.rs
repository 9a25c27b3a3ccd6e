use alloc::string::String;

/// Every failure mode of the library.
///
/// `SizeBudgetExceeded` is the only variant a well-formed request can hit;
/// the rest signal malformed input.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("symbol `{symbol}` takes {expected} argument(s), got {found}")]
    ArityMismatch {
        symbol: String,
        expected: usize,
        found: usize,
    },
    #[error("unknown symbol `{0}`")]
    UnknownSymbol(String),
    #[error("parse error at offset {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("size budget exceeded: {0}")]
    SizeBudgetExceeded(String),
    #[error("not a congruence: {0}")]
    NotACongruence(String),
    #[error("signature mismatch: {0}")]
    SignatureMismatch(String),
    #[error("no relative congruence satisfies the request")]
    EmptyRelativeCongruenceSet,
    #[error("relative congruences are not closed under intersection on `{0}`")]
    NotIntersectionClosed(String),
    #[error("invalid algebra `{name}`: {msg}")]
    InvalidAlgebra { name: String, msg: String },
    #[error("invalid candidate: {0}")]
    InvalidCandidate(String),
    #[error("logic does not apply to `{algebra}`: {msg}")]
    LogicNotApplicable { algebra: String, msg: String },
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
