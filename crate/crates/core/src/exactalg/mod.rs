//! Exact arithmetic: integers, integer and Laurent polynomials, prime
//! fields and their finite extensions.

pub mod field;
pub mod fppoly;
pub mod integer;
pub mod intpoly;
mod text;

pub use field::{FieldElem, FieldSpec, LogField, LOG_ZERO};
pub use fppoly::{factor_over_prime, FpPoly};
pub use intpoly::{cyclotomic, neg_cyclotomic, resultant, IntPoly, LaurentPoly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgError {
    #[error("cannot parse polynomial {0:?}")]
    Parse(String),
    #[error("cyclotomic index must be positive")]
    ZeroCyclotomicIndex,
    #[error("zero polynomial where a nonzero one is required")]
    ZeroPolynomial,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("polynomial vanishes modulo {0}")]
    VanishesModP(u64),
    #[error("modulus {0} is not monic")]
    NotMonic(String),
    #[error("modulus {0} is reducible")]
    Reducible(String),
    #[error("modulus t gives xi = 0")]
    ModulusIsT,
    #[error("polynomial and field have different characteristic")]
    CharacteristicMismatch,
    #[error("division by zero")]
    ZeroDivision,
    #[error("value does not fit in 64 bits")]
    Overflow,
    #[error("field too large for log tables")]
    FieldTooLarge,
}
