//! Crate-wide error type.

use crate::polyring::Rat;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root system type {family}{rank}: {reason}")]
    InvalidType {
        family: String,
        rank: usize,
        reason: String,
    },

    #[error("not a root of this root datum: {0}")]
    NotARoot(String),

    #[error("expected a positive root, got {0}")]
    NotPositiveRoot(String),

    #[error("weight has level {level} but the critical level is {critical}")]
    NotCritical { level: Rat, critical: Rat },

    #[error("weights of different levels are incomparable by construction")]
    LevelMismatch,

    #[error("the zero form cannot be used as a modulus")]
    ZeroModulus,

    #[error("section has {got} values but the graph has {want} vertices")]
    DomainMismatch { got: usize, want: usize },

    #[error("degenerate wall move: the requested root fixes {0}")]
    WallDegenerate(String),

    #[error("graph is not a chain with a constant coroot label")]
    NotAChain,

    #[error("block is not subgeneric; this quantity is only defined on subgeneric chains")]
    NotSubgeneric,

    #[error(
        "multiplicities for blocks linking more than two weight orbits are not determined \
         (they depend on the open Feigin-Frenkel conjecture); refusing to guess"
    )]
    UndeterminedBlock,

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("parse error: {0}")]
    Parse(String),
}
