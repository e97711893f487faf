//! Exact computation in the skew polynomial ring `k[X]_(X)[theta; alpha]`
//! with `alpha(X) = qX`.

pub mod classify;
pub mod config;
pub mod diamond;
pub mod field;
pub mod parse;
pub mod presentation;
pub mod ratfunc;
pub mod reproduce;
pub mod skew;
pub mod spectra;
