use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Spec text failed to parse. `position` is a byte offset into the input.
    #[error("syntax error at position {position}: expected {expected}, found {found}")]
    Syntax {
        position: usize,
        expected: String,
        found: String,
    },

    /// A spec parsed but carries a parameter outside its allowed range,
    /// e.g. `D(7)` or an `SDC` multiplier not coprime to the modulus.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// Permutation generators are inconsistent (out-of-range or repeated
    /// points).
    #[error("invalid permutation generator: {0}")]
    InvalidPermutation(String),

    #[error("group order {order} exceeds the configured bound {bound}")]
    OrderBound { order: usize, bound: usize },

    #[error("subgroup count exceeded the configured guard {bound}")]
    SubgroupBound { bound: usize },

    #[error("group order {order} exceeds the isomorphism bound {bound}")]
    IsoBound { order: usize, bound: usize },

    #[error("{arg} = {value} is not valid: {reason}")]
    Domain {
        arg: &'static str,
        value: usize,
        reason: String,
    },

    #[error("unknown vertex id {0}")]
    InvalidVertex(usize),

    #[error("corpus file is not valid: {0}")]
    Corpus(String),
}

impl Error {
    /// True for errors that arise from hitting a resource guard rather than
    /// from malformed input.
    pub fn is_resource_guard(&self) -> bool {
        matches!(
            self,
            Error::OrderBound { .. } | Error::SubgroupBound { .. } | Error::IsoBound { .. }
        )
    }
}
