use num_bigint::BigInt;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// An element was used with a table that does not contain it.
    #[error("element {0} is not in the domain")]
    UnknownElement(u64),

    /// Iteration produced a value outside the declared domain.
    #[error("value {0} escapes the declared domain")]
    DomainEscape(BigInt),

    /// A terminal element was reached while steps were still pending.
    #[error("terminal element {value} reached with {remaining} steps remaining")]
    TerminalHit { value: BigInt, remaining: u64 },

    /// Malformed line in a function-table file.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A table maps an element outside its own domain.
    #[error("image {dst} of {src} is not a domain element")]
    Closure { src: u64, dst: u64 },

    /// A table lists the same source element twice.
    #[error("duplicate mapping for element {0}")]
    Duplicate(u64),

    /// The accumulator was stepped at an index below the recurrence memory.
    #[error("index {index} is below the recurrence memory {memory}")]
    IndexBelowMemory { index: u64, memory: usize },

    /// The embedding search refuses inputs beyond the configured cutoff.
    #[error("{count} classes exceed the embedding search limit {limit}")]
    SizeLimit { count: usize, limit: usize },

    /// A rank map does not cover the whole domain.
    #[error("rank map is missing element {0}")]
    MissingRank(u64),

    /// Construction-time validation failure.
    #[error("{0}")]
    Invalid(String),
}
