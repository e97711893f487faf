//! Does `c b` (shape `C` times shape `B`, theta-degree 3) factor as
//! `b' c'` with `b'` of shape `B` and `c'` of shape `C`?
//!
//! The degree-1 factor is either on the left, `b' = 1 + X t theta` (a
//! general degree-1 `b' = u (1 + X s)` is brought to this form by moving
//! the unit `u` into `c'`, and `s = t theta + s0` with `s0` in `k[X]_(X)` is
//! absorbed by the same step only when `s0 = 0`; this reading is recorded
//! in the report notes), or on the right, `c' = 1 + t theta` with `t` a
//! unit.

use serde::Serialize;

use crate::classify::{normalize_and_classify, shape, TypeTag};
use crate::parse::{format_ratx, format_skew};
use crate::ratfunc::RatX;
use crate::skew::{SkewPoly, SkewRing};

use super::master::{assemble, eliminate_left_b1, eliminate_right_deg1, MasterEquation, MasterKind};
use super::solve::{identity_search, regime_flags, solve_master, BranchRecord, SolveOptions, SolveResult, Status};
use super::DiamondError;

pub const SCHEMA_VERSION: u32 = 1;

/// A verified factorization `h = left * right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub t: RatX,
    pub a: RatX,
    pub b: RatX,
    pub c: RatX,
    pub left: SkewPoly,
    pub right: SkewPoly,
    pub left_tag: TypeTag,
    pub right_tag: TypeTag,
}

impl Witness {
    /// `b'` has shape `B` and `c'` has shape `C`.
    pub fn has_diamond_shapes(&self) -> bool {
        self.left_tag == TypeTag::B && self.right_tag == TypeTag::C
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct WitnessJson {
    pub t: String,
    pub a: String,
    pub b: String,
    pub c: String,
    pub left: String,
    pub right: String,
    pub left_tag: TypeTag,
    pub right_tag: TypeTag,
}

impl From<&Witness> for WitnessJson {
    fn from(w: &Witness) -> Self {
        WitnessJson {
            t: format_ratx(&w.t),
            a: format_ratx(&w.a),
            b: format_ratx(&w.b),
            c: format_ratx(&w.c),
            left: format_skew(&w.left),
            right: format_skew(&w.right),
            left_tag: w.left_tag,
            right_tag: w.right_tag,
        }
    }
}

#[derive(Debug, Clone)]
pub struct FactorReport {
    pub ansatz: MasterKind,
    pub status: Status,
    pub witness: Option<Witness>,
    pub bound: Option<usize>,
    pub primes: Vec<u32>,
    pub skipped_branches: Vec<String>,
    pub regime_flags: Vec<String>,
    pub branches: Vec<BranchRecord>,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FactorReportJson {
    pub ansatz: MasterKind,
    pub status: Status,
    pub witness: Option<WitnessJson>,
    pub bound: Option<usize>,
    pub primes: Vec<u32>,
    pub skipped_branches: Vec<String>,
    pub regime_flags: Vec<String>,
    pub branches: Vec<BranchRecord>,
    pub notes: Vec<String>,
}

impl From<&FactorReport> for FactorReportJson {
    fn from(r: &FactorReport) -> Self {
        FactorReportJson {
            ansatz: r.ansatz,
            status: r.status,
            witness: r.witness.as_ref().map(WitnessJson::from),
            bound: r.bound,
            primes: r.primes.clone(),
            skipped_branches: r.skipped_branches.clone(),
            regime_flags: r.regime_flags.clone(),
            branches: r.branches.clone(),
            notes: r.notes.clone(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CommutativityReport {
    pub h: SkewPoly,
    pub left: FactorReport,
    pub right: FactorReport,
}

impl CommutativityReport {
    /// A witness with shapes `(B, C)` was found by either ansatz.
    pub fn factors(&self) -> bool {
        [&self.left, &self.right].iter().any(|r| r.witness.as_ref().is_some_and(Witness::has_diamond_shapes))
    }

    /// Both ansätze were refuted up to the bound.
    pub fn refuted(&self) -> bool {
        self.left.status == Status::NoSolutionUpToBound && self.right.status == Status::NoSolutionUpToBound
    }

    pub fn to_json(&self, field: &str) -> serde_json::Value {
        serde_json::json!({
            "schema_version": SCHEMA_VERSION,
            "field": field,
            "h": format_skew(&self.h),
            "factors": self.factors(),
            "left_B1": FactorReportJson::from(&self.left),
            "right_deg1": FactorReportJson::from(&self.right),
        })
    }
}

/// Rebuilds the factors from a solution `t` and checks `left * right = h`
/// with both factors in `S`.
pub fn reconstruct(kind: MasterKind, h: &SkewPoly, t: &RatX, ring: &SkewRing) -> Result<Option<Witness>, DiamondError> {
    let (left, right, [a, b, c]) = assemble(kind, h, t, ring)?;
    if ring.mul(&left, &right) != *h || !left.in_s() || !right.in_s() {
        return Ok(None);
    }
    Ok(Some(Witness { t: t.clone(), a, b, c, left_tag: shape(&left), right_tag: shape(&right), left, right }))
}

fn from_solve(kind: MasterKind, h: &SkewPoly, res: SolveResult, ring: &SkewRing) -> Result<FactorReport, DiamondError> {
    let mut report = FactorReport {
        ansatz: kind,
        status: res.status,
        witness: None,
        bound: Some(res.bound),
        primes: res.primes,
        skipped_branches: res.skipped_branches,
        regime_flags: res.regime_flags,
        branches: res.branches,
        notes: res.notes,
    };
    if let Some(t) = res.t {
        match reconstruct(kind, h, &t, ring)? {
            Some(w) => report.witness = Some(w),
            None => {
                report.status = Status::Inconclusive;
                report.notes.push("solution of the master equation failed to reconstruct h".to_string());
            }
        }
    }
    Ok(report)
}

fn identity_report(kind: MasterKind, h: &SkewPoly, master: &MasterEquation, ring: &SkewRing) -> Result<FactorReport, DiamondError> {
    let mut report = FactorReport {
        ansatz: kind,
        status: Status::Inconclusive,
        witness: None,
        bound: None,
        primes: Vec::new(),
        skipped_branches: Vec::new(),
        regime_flags: regime_flags(ring.config()),
        branches: Vec::new(),
        notes: Vec::new(),
    };
    match identity_search(master, ring).map(|t| reconstruct(kind, h, &t, ring)).transpose()?.flatten() {
        Some(w) => {
            report.status = Status::IdentityVerified;
            report.witness = Some(w);
        }
        None => report.notes.push("no identity among the monomial candidates L q^k f / g".to_string()),
    }
    Ok(report)
}

/// Runs one ansatz on `h`: a bounded search for numeric `q`, the
/// identity search for symbolic `q`.
pub fn check_ansatz(kind: MasterKind, h: &SkewPoly, ring: &SkewRing, opts: &SolveOptions) -> Result<FactorReport, DiamondError> {
    let master = match kind {
        MasterKind::LeftB1 => eliminate_left_b1(h, ring)?.master,
        MasterKind::RightDeg1 => eliminate_right_deg1(h, ring)?,
    };
    let mut report = if ring.config().is_symbolic() {
        identity_report(kind, h, &master, ring)?
    } else {
        from_solve(kind, h, solve_master(&master, ring, opts)?, ring)?
    };
    if kind == MasterKind::LeftB1 {
        report.notes.push(
            "left factors are taken as 1 + X t theta; a general degree-1 factor u (1 + X s) reduces to this form when s has no theta^0 part"
                .to_string(),
        );
    }
    Ok(report)
}

/// Checks whether `c b` factors as `b' c'` with shapes `(B, C)`.
pub fn check_monoid_commutativity(c: &SkewPoly, b: &SkewPoly, ring: &SkewRing, opts: &SolveOptions) -> Result<CommutativityReport, DiamondError> {
    let tag = |z: &SkewPoly| normalize_and_classify(z).map(|c| c.tag).unwrap_or(TypeTag::Zero);
    let (tc, tb) = (tag(c), tag(b));
    if tc != TypeTag::C {
        return Err(DiamondError::TagMismatch { expected: TypeTag::C, found: tc });
    }
    if tb != TypeTag::B {
        return Err(DiamondError::TagMismatch { expected: TypeTag::B, found: tb });
    }
    let h = ring.mul(c, b);
    let left = check_ansatz(MasterKind::LeftB1, &h, ring, opts)?;
    let right = check_ansatz(MasterKind::RightDeg1, &h, ring, opts)?;
    Ok(CommutativityReport { h, left, right })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;
    use crate::parse::parse_skew;

    const V: &str = "1+X+theta+X*theta^2";
    const W: &str = "1-X+X*theta";

    #[test]
    fn rational_q_is_refuted_at_small_bound() {
        let ring = SkewRing::new(FieldConfig::rationals_with_q(2));
        let (c, b) = (parse_skew(V, &ring).unwrap(), parse_skew(W, &ring).unwrap());
        let opts = SolveOptions { degree_bound: 1, ..Default::default() };
        let r = check_monoid_commutativity(&c, &b, &ring, &opts).unwrap();
        assert!(r.refuted());
        assert!(!r.factors());
        let json = r.to_json("Q, q = 2");
        assert_eq!(json["left_B1"]["status"], "no_solution_up_to_bound");
        assert_eq!(json["schema_version"], SCHEMA_VERSION);
    }

    #[test]
    fn characteristic_two_identities() {
        let ring = SkewRing::new(FieldConfig::prime_symbolic(2).unwrap());
        let (c, b) = (parse_skew(V, &ring).unwrap(), parse_skew(W, &ring).unwrap());
        let r = check_monoid_commutativity(&c, &b, &ring, &SolveOptions::default()).unwrap();
        for side in [&r.left, &r.right] {
            assert_eq!(side.status, Status::IdentityVerified);
            let w = side.witness.as_ref().unwrap();
            assert!(w.has_diamond_shapes(), "{:?}", (w.left_tag, w.right_tag));
        }
        assert!(r.factors());
    }

    #[test]
    fn wrong_tags_are_rejected() {
        let ring = SkewRing::new(FieldConfig::rationals_with_q(2));
        let (c, b) = (parse_skew(V, &ring).unwrap(), parse_skew(W, &ring).unwrap());
        let err = check_monoid_commutativity(&b, &c, &ring, &SolveOptions::default()).unwrap_err();
        assert_eq!(err, DiamondError::TagMismatch { expected: TypeTag::C, found: TypeTag::B });
    }
}
