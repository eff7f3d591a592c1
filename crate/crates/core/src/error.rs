//! The crate-wide error type.

use thiserror::Error;

/// Everything that can go wrong anywhere in the engine.
///
/// One flat enum rather than per-module errors: the pipelines compose
/// operations from every module, and callers (in particular the CLI) act on
/// the *kind* of failure — a resource limit is retried or reported
/// differently from a genericity failure or a malformed input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed polynomial or document text; `position` is a byte offset.
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    /// An identifier that is not a variable of the ambient ring.
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    /// A degree, basis-size or step bound was exceeded.  Never silent: the
    /// message says which bound and where.
    #[error("resource limit exceeded: {0}")]
    ResourceLimit(String),

    /// Dimension of the unit ideal was requested.
    #[error("ideal is the unit ideal")]
    IdealIsUnit,

    /// An index or size argument outside its documented range.
    #[error("argument out of range: {0}")]
    OutOfRange(String),

    /// A germ invariant was requested for a function not vanishing at 0.
    #[error("not a germ at the origin: constant term is non-zero")]
    NotAGerm,

    /// Infinite colength where an isolated singularity was required.
    #[error("singularity is not isolated: {0}")]
    NonIsolated(String),

    /// Quasi-homogeneous weights whose Milnor product is not an integer.
    #[error("weights do not yield a non-negative integer Milnor number")]
    NonIntegerResult,

    /// Presentation failed the complete-intersection or isolation test.
    #[error("not an isolated complete intersection singularity: {0}")]
    NotIcis(String),

    /// Every retry seed produced a degenerate choice.
    #[error("genericity retries exhausted after {0} seeds")]
    GenericityExhausted(u32),

    /// The variety's dimension disagrees with what the caller claimed.
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    /// A smoothing-based invariant of a germ that admits no smoothing.
    #[error("not smoothable: {0}")]
    NotSmoothable(String),

    /// The descriptor violates a structural invariant.
    #[error("invalid descriptor: {0}")]
    Descriptor(String),

    /// No computation regime covers the input.
    #[error("no computation regime applies: {0}")]
    RegimeMismatch(String),

    /// The pipeline cannot derive a required invariant; it must be supplied.
    #[error("missing input: invariant `{0}` must be supplied")]
    MissingInput(String),

    /// A linear form with all coefficients zero.
    #[error("linear form is identically zero")]
    ZeroForm,
}

pub type Result<T> = std::result::Result<T, Error>;
