//! Run configuration shared by the command-line tool and the C interface.

use std::str::FromStr;

use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use crate::diamond::{OracleOptions, SolveOptions};
use crate::field::{rational_mod_p, Base, BaseField, FfElem, FieldConfig, FiniteField, QMode};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("unrecognized field `{0}`; expected q, q:<rational>, fp:<p> or gf:<p>^<m>")]
    Field(String),
    #[error("bad value for q: `{0}`")]
    BadQ(String),
    #[error("conflicting settings: {0}")]
    Conflict(String),
    #[error("{0}")]
    Invalid(String),
}

/// Builds the working field from the `--field`, `--q` and `--char` settings.
///
/// `q` gives `Q(q)` with `q` symbolic and `q:<r>` fixes `q = r`; a nonzero
/// characteristic reduces either over `F_p`. `fp:<p>` is `F_p` with `q`
/// from `--q` or the primitive root, and `gf:<p>^<m>` is `GF(p^m)` with `q`
/// its primitive element.
pub fn field_from_spec(field: &str, q: Option<&str>, characteristic: u32) -> Result<FieldConfig, ConfigError> {
    let field = field.trim();
    let invalid = |e: crate::field::FieldError| ConfigError::Invalid(e.to_string());
    let parse_q = |s: &str| BigRational::from_str(s.trim()).map_err(|_| ConfigError::BadQ(s.to_string()));
    if let Some(rest) = field.strip_prefix("gf:") {
        let (p, m) = rest.split_once('^').ok_or_else(|| ConfigError::Field(field.into()))?;
        let p: u32 = p.parse().map_err(|_| ConfigError::Field(field.into()))?;
        let m: u32 = m.parse().map_err(|_| ConfigError::Field(field.into()))?;
        if q.is_some() {
            return Err(ConfigError::Conflict("q is the primitive element over gf:<p>^<m>".into()));
        }
        if characteristic != 0 && characteristic != p {
            return Err(ConfigError::Conflict(format!("--char {characteristic} with {field}")));
        }
        return FieldConfig::extension_with_generator(p, m).map_err(invalid);
    }
    if let Some(p) = field.strip_prefix("fp:") {
        let p: u32 = p.parse().map_err(|_| ConfigError::Field(field.into()))?;
        if characteristic != 0 && characteristic != p {
            return Err(ConfigError::Conflict(format!("--char {characteristic} with {field}")));
        }
        let f = FiniteField::prime(p).map_err(invalid)?;
        let v = match q {
            Some(q) => rational_mod_p(&parse_q(q)?, p).ok_or_else(|| ConfigError::BadQ(q.into()))?,
            None => f.generator(),
        };
        return FieldConfig::new(BaseField::Finite(f.clone()), QMode::Explicit(Base::Ff(FfElem { v, field: f }))).map_err(invalid);
    }
    let fixed = match field.strip_prefix("q:") {
        Some(r) => Some(r),
        None if field == "q" => None,
        None => return Err(ConfigError::Field(field.into())),
    };
    let value = match (fixed, q) {
        (Some(a), Some(b)) if parse_q(a)? != parse_q(b)? => {
            return Err(ConfigError::Conflict(format!("--field q:{a} with --q {b}")))
        }
        (Some(a), _) | (None, Some(a)) => Some(parse_q(a)?),
        (None, None) => None,
    };
    match (characteristic, value) {
        (0, None) => Ok(FieldConfig::rationals_symbolic()),
        (0, Some(r)) => FieldConfig::rationals_with_q_rat(r).map_err(invalid),
        (p, None) => FieldConfig::prime_symbolic(p).map_err(invalid),
        (p, Some(r)) => {
            let f = FiniteField::prime(p).map_err(invalid)?;
            let v = rational_mod_p(&r, p).ok_or_else(|| ConfigError::BadQ(format!("{r} mod {p}")))?;
            FieldConfig::new(BaseField::Finite(f.clone()), QMode::Explicit(Base::Ff(FfElem { v, field: f }))).map_err(invalid)
        }
    }
}

/// Every setting that influences a run, echoed in JSON output.
#[derive(Debug, Clone, Serialize)]
pub struct RunConfig {
    pub field: String,
    pub q: Option<String>,
    pub characteristic: u32,
    pub degree_bound: usize,
    pub primes: Vec<u32>,
    pub prec: usize,
    pub threads: Option<usize>,
    pub seed: u64,
}

impl Default for RunConfig {
    fn default() -> Self {
        let solve = SolveOptions::default();
        RunConfig {
            field: "q".into(),
            q: None,
            characteristic: 0,
            degree_bound: solve.degree_bound,
            primes: solve.primes,
            prec: OracleOptions::default().prec,
            threads: None,
            seed: 2024,
        }
    }
}

impl RunConfig {
    pub fn field_config(&self) -> Result<FieldConfig, ConfigError> {
        field_from_spec(&self.field, self.q.as_deref(), self.characteristic)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.prec == 0 {
            return Err(ConfigError::Invalid("precision must be at least 1".into()));
        }
        if let Some(p) = self.primes.iter().find(|&&p| !crate::field::is_prime(p as u64)) {
            return Err(ConfigError::Invalid(format!("{p} is not prime")));
        }
        if self.threads == Some(0) {
            return Err(ConfigError::Invalid("--threads must be positive".into()));
        }
        self.field_config().map(|_| ())
    }

    pub fn solve_options(&self) -> SolveOptions {
        SolveOptions { degree_bound: self.degree_bound, primes: self.primes.clone(), ..Default::default() }
    }

    pub fn oracle_options(&self) -> OracleOptions {
        OracleOptions { prec: self.prec, ..Default::default() }
    }
}
