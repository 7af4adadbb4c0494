use thiserror::Error;

use crate::group::{Generator, GroupContext};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("generator {symbol} is not valid in {context}")]
    InvalidSymbolForContext {
        symbol: Generator,
        context: GroupContext,
    },

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("degree {degree} is too small: {requirement}")]
    DegreeTooSmall {
        degree: usize,
        requirement: &'static str,
    },

    #[error("degree must be at least 1")]
    ZeroDegree,

    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("not a signed permutation: {0}")]
    InvalidPermutation(String),

    #[error("enumeration exceeded the cap of {cap} elements")]
    Overflow { cap: usize },

    #[error("the rewriting system is not confluent")]
    NotConfluent,

    #[error("generator {0} is not in the alphabet")]
    NotInAlphabet(Generator),

    #[error("pancake sorting is not defined for {0}")]
    InvalidContext(GroupContext),

    #[error("signed entry {0} in an unsigned (type A) permutation")]
    SignedEntryInTypeA(i32),

    #[error("invalid document: {0}")]
    Format(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
