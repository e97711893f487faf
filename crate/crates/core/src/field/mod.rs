//! Scalar fields: the rationals, small finite fields, and rational functions
//! in a symbolic `q` over either.

mod finite;
mod frac;
mod poly;
mod scalar;

use std::fmt;
use std::hash::Hash;

use thiserror::Error;

pub use finite::{is_prime, FiniteField, MAX_FIELD_SIZE};
pub use frac::Frac;
pub use poly::Poly;
pub use scalar::{rational_mod_p, Base, BaseField, FfElem, FieldConfig, QMode, QOrder, Scalar};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands live in different fields")]
    MixedFields,
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("invalid field configuration: {0}")]
    InvalidConfig(String),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Arithmetic shared by every coefficient type.
///
/// Elements carry their field with them, so constants are produced from an
/// existing element (`zero_like`, `from_i64_like`). Mixing elements of
/// different fields panics; [`Scalar`] offers checked variants.
pub trait Field: Clone + PartialEq + Eq + Hash + Ord + fmt::Debug + Send + Sync {
    fn is_zero(&self) -> bool;
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Option<Self>;
    fn characteristic(&self) -> u64;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|i| self.mul(&i))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    fn pow_i(&self, e: i64) -> Option<Self> {
        if e >= 0 {
            Some(self.pow(e as u64))
        } else {
            self.inv().map(|i| i.pow(e.unsigned_abs()))
        }
    }
}
