//! Commutativity checks for products of shapes `C * B` of degree 3.
//!
//! Given `h = c b`, the checker looks for a factorization `h = b' c'` with
//! `b'` of shape `B` and `c'` of shape `C`, through two ansätze that each
//! reduce to a functional equation in one rational function.

pub mod kernel;
pub mod master;
pub mod monoid;
pub mod oracle;
pub mod solve;

use thiserror::Error;

use crate::classify::TypeTag;

pub use master::{eliminate_left_b1, eliminate_right_deg1, MasterEquation, MasterKind};
pub use monoid::{check_ansatz, check_monoid_commutativity, CommutativityReport, FactorReport, Witness};
pub use oracle::{truncated_oracle, OracleOptions, OracleReport};
pub use solve::{solve_master, SolveOptions, SolveResult, Status, Strategy};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DiamondError {
    #[error("expected theta-degree 3, got {0:?}")]
    WrongDegree(Option<usize>),
    #[error("input has a coefficient outside k[X]_(X)")]
    NotInS,
    #[error("the theta^0 coefficient is not a unit of k[X]_(X)")]
    ConstantTermNotUnit,
    #[error("the unknown must be nonzero")]
    ZeroUnknown,
    #[error("a numeric q is required for a bounded search")]
    SymbolicQ,
    #[error("no usable prime in the prime set")]
    NoUsablePrimes,
    #[error("the oracle needs a finite field with explicit q")]
    NotFinite,
    #[error("search space exceeds the configured cap")]
    SearchTooLarge,
    #[error("expected an element of shape {expected}, found {found}")]
    TagMismatch { expected: TypeTag, found: TypeTag },
}
