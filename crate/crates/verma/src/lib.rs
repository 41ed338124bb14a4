//! Exact Jantzen coefficients and simplicity tests for generalized Verma
//! modules over finite root systems.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootsys`] — standard realizations, subsystems, exact linear algebra;
//! * [`weyl`] — reflections, dominant representatives, orbits, signs;
//! * [`jantzen`] — Ψ-sets, coefficient rows, and a brute-force θ oracle;
//! * [`reduction`] — the reduction chain Φ(β) and basic-system labels;
//! * [`basics`] — basic systems, basic weights, tables and posets;
//! * [`classical`] — closed forms for types B, C and D;
//! * [`cli`] — the command-line front end.
//!
//! All scalars are exact rationals; internally the hot paths run on scaled
//! integer Dynkin labels with checked arithmetic.

pub mod basics;
pub mod classical;
pub mod cli;
pub mod jantzen;
pub mod reduction;
pub mod rootsys;
pub mod weyl;

pub use rootsys::{CartanType, Parabolic, Rational, Realization, Subsystem, TypeLetter, Weight};

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid root system type: {0}")]
    InvalidType(String),
    #[error("root is not a member of the subsystem")]
    RootNotInSubsystem,
    #[error("subsystem is not irreducible")]
    NotIrreducible,
    #[error("weight is not integral on the Levi part")]
    NotIntegralOnI,
    #[error("weight is not in Λ_I⁺")]
    NotInLambdaIPlus,
    #[error("root is not in Ψ⁺ of the weight")]
    RootNotInPsiPlus,
    #[error("root is not in Ψ⁺⁺ of the weight")]
    RootNotInPsiPlusPlus,
    #[error("root lies in the Levi subsystem")]
    RootInLevi,
    #[error("weight is not integral")]
    NotIntegral,
    #[error("orbit exceeds the cap of {cap} elements")]
    OrbitTooLarge { cap: usize },
    #[error("oracle group of size > {cap} exceeds the configured cap")]
    OracleCapExceeded { cap: usize },
    #[error("rank {rank} is too large for the brute-force oracle")]
    RankTooLargeForOracle { rank: usize },
    #[error("triple is not basic: {0}")]
    NotBasic(String),
    #[error("operation requires a root system of type {0}")]
    WrongType(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("integer overflow in the label kernel")]
    Overflow,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
