use crate::weights::Weight;
use thiserror::Error;

/// Errors surfaced by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("weights have different lengths: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("weight {0} is not dominant")]
    NotDominant(Weight),

    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),

    #[error("index {name}={value} out of range {min}..={max}")]
    IndexOutOfRange {
        name: &'static str,
        value: i64,
        min: i64,
        max: i64,
    },

    #[error("weight must be nonzero")]
    ZeroWeight,

    #[error("weight {0} must end in two zero entries")]
    TailNotZero(Weight),

    #[error("pairing of {e} against {f} at {lam} is not an integer: {num}/{den}")]
    NotIntegral {
        e: String,
        f: String,
        lam: Weight,
        num: String,
        den: String,
    },

    #[error("{what} budget exceeded: {used} > {limit}")]
    BudgetExceeded {
        what: &'static str,
        used: u64,
        limit: u64,
    },

    #[error("weight {0} is not in the (1,1)-level of the module")]
    NotInLevel(Weight),

    #[error("input is not a module character: multiplicity of {0} went negative")]
    NotACharacter(Weight),
}

pub type Result<T> = std::result::Result<T, Error>;
