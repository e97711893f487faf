//! Bounded search for rational solutions `y = L f / g` of a master
//! equation.
//!
//! Over a finite field the search is complete for `deg f <= N`,
//! `deg g <= N + 1`. Over `Q` with explicit `q` it runs modulo several
//! primes: a prime at which a branch `(deg f, deg g, L)` has no solution
//! rules out every rational solution in that branch whose reduction is
//! defined there. Candidates found modulo a prime are lifted by rational
//! reconstruction and kept only if they solve the equation over `Q`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::field::{rational_mod_p, Base, FfElem, Field, FieldConfig, FiniteField, Poly, QOrder, Scalar};
use crate::parse::{format_poly, scalar_expr};
use crate::ratfunc::{roots_in_field, PolyX, RatX};
use crate::skew::SkewRing;

use super::kernel::{BudgetExceeded, Candidate, FPoly, Kernel};
use super::master::{lambda_poly, unknown_from_parts, MasterEquation};
use super::DiamondError;

pub const DEFAULT_PRIMES: [u32; 4] = [11, 13, 19, 23];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Exhaustive when the tuple count is at most `exhaustive_limit`, lifting otherwise.
    Auto,
    Exhaustive,
    Lifting,
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Bound `N`: `deg f <= N` and `deg g <= N + 1`.
    pub degree_bound: usize,
    /// Primes for the modular search over `Q`.
    pub primes: Vec<u32>,
    /// Drop primes modulo which `q` has order at most `N + 4`.
    pub filter_primes: bool,
    pub strategy: Strategy,
    pub exhaustive_limit: u128,
    /// Node budget of the series lifting.
    pub node_budget: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            degree_bound: 4,
            primes: DEFAULT_PRIMES.to_vec(),
            filter_primes: true,
            strategy: Strategy::Auto,
            exhaustive_limit: 1 << 18,
            node_budget: 2_000_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    WitnessFound,
    NoSolutionUpToBound,
    IdentityVerified,
    /// The search ran out of budget, or modular candidates could not be
    /// lifted to a solution over `Q`.
    Inconclusive,
}

/// One searched branch: degrees, leading scalar, the field it was searched
/// over and the number of solutions found there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BranchRecord {
    pub deg_f: usize,
    pub deg_g: usize,
    pub lambda: String,
    pub field: String,
    pub strategy: String,
    pub candidates: Option<usize>,
}

#[derive(Debug, Clone)]
pub struct SolveResult {
    pub status: Status,
    /// The solution as a value of `t` (not of the unknown `y`).
    pub t: Option<RatX>,
    pub bound: usize,
    pub primes: Vec<u32>,
    pub skipped_branches: Vec<String>,
    pub regime_flags: Vec<String>,
    pub branches: Vec<BranchRecord>,
    pub notes: Vec<String>,
}

impl SolveResult {
    fn new(bound: usize) -> Self {
        SolveResult {
            status: Status::NoSolutionUpToBound,
            t: None,
            bound,
            primes: Vec::new(),
            skipped_branches: Vec::new(),
            regime_flags: Vec::new(),
            branches: Vec::new(),
            notes: Vec::new(),
        }
    }
}

fn lambda_text(p: &PolyX) -> String {
    format!("{} = 0", format_poly(p, "L", &scalar_expr))
}

/// Admissible `(deg f, deg g)` pairs in search order, each with its
/// leading-coefficient polynomial.
fn admissible_pairs(polys: &[PolyX; 4], bound: usize, q: &Scalar, cfg: &FieldConfig) -> Vec<(usize, usize, PolyX)> {
    let mut pairs = Vec::new();
    for total in 0..=(2 * bound + 1) {
        for n in 0..=bound.min(total) {
            let m = total - n;
            if m > bound + 1 {
                continue;
            }
            if let Some(lp) = lambda_poly(polys, n, m, q, cfg) {
                pairs.push((n, m, lp));
            }
        }
    }
    pairs
}

/// Nonzero roots of the leading-coefficient polynomial, and a note for the
/// factor without roots in the field, if any.
fn lambda_branches(lp: &PolyX, cfg: &FieldConfig) -> (Vec<Scalar>, Option<String>) {
    let v = lp.valuation().unwrap_or(0);
    let reduced = lp.shift_down(v);
    let split = roots_in_field(&reduced, cfg);
    let mut roots = split.roots.clone();
    roots.dedup();
    let skipped = (split.remainder.degree().unwrap_or(0) > 0)
        .then(|| format!("{} has no roots in {}", lambda_text(&split.remainder.monic()), cfg.describe()));
    (roots, skipped)
}

struct FieldSearch<'a> {
    kernel: Kernel<'a>,
    unit_f: bool,
    prefixes: Option<Result<Vec<FPoly>, BudgetExceeded>>,
}

impl<'a> FieldSearch<'a> {
    fn new(kernel: Kernel<'a>, unit_f: bool, pairs: &[(usize, usize)], opts: &SolveOptions) -> Self {
        let needs_lifting = pairs.iter().any(|&(n, m)| use_lifting(&kernel, n, m, opts));
        let prefixes = needs_lifting.then(|| {
            let depth = pairs.iter().map(|&(n, m)| n + m + 1).max().unwrap_or(1);
            kernel.series_prefixes(depth, unit_f, opts.node_budget)
        });
        FieldSearch { kernel, unit_f, prefixes }
    }

    fn search(&self, n: usize, m: usize, lambda: u32, opts: &SolveOptions) -> (Result<Vec<Candidate>, BudgetExceeded>, &'static str) {
        if !use_lifting(&self.kernel, n, m, opts) {
            return (Ok(self.kernel.exhaustive(n, m, lambda, self.unit_f)), "exhaustive");
        }
        let prefixes = match self.prefixes.as_ref().expect("computed") {
            Ok(p) => p,
            Err(e) => return (Err(*e), "lifting"),
        };
        let mut truncated: Vec<&[u32]> = prefixes.iter().map(|y| &y[..n + m + 1]).collect();
        truncated.sort();
        truncated.dedup();
        let found: Result<Vec<Vec<Candidate>>, BudgetExceeded> = truncated
            .par_iter()
            .map(|y| self.kernel.pade(y, n, m, self.unit_f, opts.node_budget))
            .collect();
        let mut out: Vec<Candidate> = match found {
            Ok(v) => v.into_iter().flatten().filter(|c| c.lambda == lambda).collect(),
            Err(e) => return (Err(e), "lifting"),
        };
        out.sort();
        out.dedup();
        (Ok(out), "lifting")
    }
}

fn use_lifting(kernel: &Kernel, n: usize, m: usize, opts: &SolveOptions) -> bool {
    match opts.strategy {
        Strategy::Exhaustive => false,
        Strategy::Lifting => true,
        Strategy::Auto => kernel.exhaustive_size(n, m) > opts.exhaustive_limit,
    }
}

fn ff_scalar(field: &std::sync::Arc<FiniteField>, v: u32, cfg: &FieldConfig) -> Scalar {
    cfg.lift(Base::Ff(FfElem { v, field: field.clone() }))
}

fn candidate_to_unknown(c: &Candidate, to_scalar: impl Fn(u32) -> Scalar) -> Option<RatX> {
    let f = Poly::new(c.f.iter().map(|&v| to_scalar(v)).collect());
    let g = Poly::new(c.g.iter().map(|&v| to_scalar(v)).collect());
    unknown_from_parts(&to_scalar(c.lambda), &f, &g)
}

pub fn regime_flags(cfg: &FieldConfig) -> Vec<String> {
    let mut flags = Vec::new();
    match cfg.q_order() {
        QOrder::Finite(d) => flags.push(format!("root-of-unity regime (q has order {d}), theorem inapplicable")),
        QOrder::Infinite => {}
        QOrder::Symbolic => flags.push("q is symbolic".to_string()),
    }
    if cfg.characteristic() == 2 {
        flags.push("characteristic 2".to_string());
    }
    flags
}

/// Bounded search for a solution of `master`; see the module docs.
pub fn solve_master(master: &MasterEquation, ring: &SkewRing, opts: &SolveOptions) -> Result<SolveResult, DiamondError> {
    let cfg = ring.config();
    if cfg.is_symbolic() {
        return Err(DiamondError::SymbolicQ);
    }
    match cfg.finite_field() {
        Some(field) => Ok(solve_finite(master, ring, field.clone(), opts)),
        None => solve_rational(master, ring, opts),
    }
}

fn solve_finite(master: &MasterEquation, ring: &SkewRing, field: std::sync::Arc<FiniteField>, opts: &SolveOptions) -> SolveResult {
    let cfg = ring.config();
    let mut res = SolveResult::new(opts.degree_bound);
    res.regime_flags = regime_flags(cfg);
    let polys = master.cleared(cfg);
    let to_u32 = |s: &Scalar| s.as_ff().expect("finite field scalar").v;
    let fpolys: [FPoly; 4] = std::array::from_fn(|k| polys[k].coeffs().iter().map(to_u32).collect());
    let q = to_u32(ring.q());
    let pairs = admissible_pairs(&polys, opts.degree_bound, ring.q(), cfg);
    let unit_f = master.kind.unit_unknown();
    let dims: Vec<(usize, usize)> = pairs.iter().map(|p| (p.0, p.1)).collect();
    let search = FieldSearch::new(Kernel::new(&field, q, fpolys), unit_f, &dims, opts);
    let fname = format!("{:?}", field);
    let mut exhausted = false;
    for (n, m, lp) in &pairs {
        let (lambdas, skipped) = lambda_branches(lp, cfg);
        if let Some(s) = skipped {
            res.skipped_branches.push(format!("deg f = {n}, deg g = {m}: {s}"));
        }
        for lambda in lambdas {
            let (found, strategy) = search.search(*n, *m, to_u32(&lambda), opts);
            let count = found.as_ref().ok().map(Vec::len);
            res.branches.push(BranchRecord {
                deg_f: *n,
                deg_g: *m,
                lambda: scalar_expr(&lambda),
                field: fname.clone(),
                strategy: strategy.to_string(),
                candidates: count,
            });
            match found {
                Err(BudgetExceeded) => exhausted = true,
                Ok(cands) => {
                    for c in &cands {
                        let y = candidate_to_unknown(c, |v| ff_scalar(&field, v, cfg)).expect("g nonzero");
                        let Ok(t) = master.t_from_unknown(&y) else { continue };
                        if master.residual(&t, ring).is_ok_and(|r| r.is_zero()) {
                            res.status = Status::WitnessFound;
                            res.t = Some(t);
                            return res;
                        }
                    }
                }
            }
        }
    }
    if exhausted {
        res.status = Status::Inconclusive;
        res.notes.push("the series lifting exceeded its node budget".to_string());
    }
    res
}

/// `P(X)` with integer coefficients and content 1, up to a rational factor.
fn integralize(polys: &[PolyX; 4]) -> [Vec<BigInt>; 4] {
    let rats: Vec<Vec<BigRational>> =
        polys.iter().map(|p| p.coeffs().iter().map(|c| c.as_rational().expect("rational")).collect()).collect();
    let lcm = rats.iter().flatten().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<Vec<BigInt>> =
        rats.iter().map(|v| v.iter().map(|r| (r * BigRational::from_integer(lcm.clone())).to_integer()).collect()).collect();
    let content = ints.iter().flatten().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    let content = if content.is_zero() { BigInt::one() } else { content };
    std::array::from_fn(|k| ints[k].iter().map(|n| n / &content).collect())
}

fn reduce(v: &[BigInt], p: u32) -> FPoly {
    let m = BigInt::from(p);
    v.iter().map(|n| n.mod_floor(&m).to_u32().expect("residue")).collect()
}

/// Smallest `a/b` with `a = b r mod p`, `|a|, |b| <= sqrt(p/2)`.
pub fn rational_reconstruction(r: u32, p: u32) -> Option<BigRational> {
    let bound = ((p as f64) / 2.0).sqrt() as i64;
    let (mut r0, mut r1) = (p as i64, r as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 > bound {
        let qt = r0 / r1;
        (r0, r1) = (r1, r0 - qt * r1);
        (t0, t1) = (t1, t0 - qt * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    Some(BigRational::new(r1.into(), t1.into()))
}

/// Primes usable for the modular search, and notes on the ones dropped.
pub fn usable_primes(q: &BigRational, opts: &SolveOptions) -> (Vec<u32>, Vec<String>) {
    let mut keep = Vec::new();
    let mut notes = Vec::new();
    for &p in &opts.primes {
        let Ok(field) = FiniteField::prime(p) else {
            notes.push(format!("{p} is not a prime"));
            continue;
        };
        let qp = match rational_mod_p(q, p) {
            Some(v) if v != 0 => v,
            _ => {
                notes.push(format!("p = {p} divides the numerator or denominator of q"));
                continue;
            }
        };
        let ord = field.mult_order(qp).expect("nonzero");
        if opts.filter_primes && ord <= opts.degree_bound as u64 + 4 {
            notes.push(format!("p = {p} dropped: q has order {ord} <= N + 4"));
            continue;
        }
        keep.push(p);
    }
    (keep, notes)
}

fn solve_rational(master: &MasterEquation, ring: &SkewRing, opts: &SolveOptions) -> Result<SolveResult, DiamondError> {
    let cfg = ring.config();
    let mut res = SolveResult::new(opts.degree_bound);
    res.regime_flags = regime_flags(cfg);
    let qrat = ring.q().as_rational().expect("rational q");
    let (primes, notes) = usable_primes(&qrat, opts);
    res.notes.extend(notes);
    if primes.is_empty() {
        return Err(DiamondError::NoUsablePrimes);
    }
    res.primes = primes.clone();
    let polys = master.cleared(cfg);
    let ints = integralize(&polys);
    let pairs = admissible_pairs(&polys, opts.degree_bound, ring.q(), cfg);
    let mut branches: Vec<(usize, usize, BigRational)> = Vec::new();
    for (n, m, lp) in &pairs {
        let (lambdas, skipped) = lambda_branches(lp, cfg);
        if let Some(s) = skipped {
            res.skipped_branches.push(format!("deg f = {n}, deg g = {m}: {s}"));
        }
        branches.extend(lambdas.iter().map(|l| (*n, *m, l.as_rational().expect("rational"))));
    }
    let dims: Vec<(usize, usize)> = pairs.iter().map(|p| (p.0, p.1)).collect();

    // per prime: (branch index, candidates or budget failure)
    let per_prime: Vec<Vec<(usize, BranchRecord, Result<Vec<Candidate>, BudgetExceeded>)>> = primes
        .par_iter()
        .map(|&p| {
            let field = FiniteField::prime(p).expect("prime");
            let q = rational_mod_p(&qrat, p).expect("checked");
            let fpolys: [FPoly; 4] = std::array::from_fn(|k| reduce(&ints[k], p));
            let search = FieldSearch::new(Kernel::new(&field, q, fpolys), false, &dims, opts);
            branches
                .iter()
                .enumerate()
                .map(|(i, (n, m, lambda))| {
                    let mut rec = BranchRecord {
                        deg_f: *n,
                        deg_g: *m,
                        lambda: lambda.to_string(),
                        field: format!("GF({p})"),
                        strategy: "none".to_string(),
                        candidates: None,
                    };
                    let lp = match rational_mod_p(lambda, p) {
                        Some(v) if v != 0 => v,
                        _ => {
                            rec.strategy = "skipped: L vanishes or is undefined mod p".to_string();
                            return (i, rec, Err(BudgetExceeded));
                        }
                    };
                    let (found, strategy) = search.search(*n, *m, lp, opts);
                    rec.strategy = strategy.to_string();
                    rec.candidates = found.as_ref().ok().map(Vec::len);
                    (i, rec, found)
                })
                .collect()
        })
        .collect();

    let mut refuted = vec![false; branches.len()];
    let mut lifted_any = false;
    for (p, rows) in primes.iter().zip(per_prime) {
        for (i, rec, found) in rows {
            res.branches.push(rec);
            let Ok(cands) = found else { continue };
            if cands.is_empty() {
                refuted[i] = true;
            }
            if res.t.is_some() {
                continue;
            }
            for c in &cands {
                let lift = |v: u32| rational_reconstruction(v, *p).map(|r| cfg.lift(Base::Rat(r)));
                let parts: Option<Vec<Scalar>> = std::iter::once(c.lambda).chain(c.f.iter().copied()).chain(c.g.iter().copied()).map(lift).collect();
                let Some(parts) = parts else { continue };
                lifted_any = true;
                let lambda = &parts[0];
                let f = Poly::new(parts[1..=c.f.len()].to_vec());
                let g = Poly::new(parts[c.f.len() + 1..].to_vec());
                let Some(y) = unknown_from_parts(lambda, &f, &g) else { continue };
                if master.kind.unit_unknown() && !y.is_local_unit() {
                    continue;
                }
                let Ok(t) = master.t_from_unknown(&y) else { continue };
                if master.residual(&t, ring).is_ok_and(|r| r.is_zero()) {
                    res.t = Some(t);
                }
            }
        }
    }
    if res.t.is_some() {
        res.status = Status::WitnessFound;
    } else if refuted.iter().all(|&r| r) {
        res.status = Status::NoSolutionUpToBound;
        res.notes.push(
            "each branch has no solution modulo at least one prime; this excludes rational solutions whose reduction is defined there"
                .to_string(),
        );
    } else {
        res.status = Status::Inconclusive;
        if lifted_any {
            res.notes.push("modular candidates were lifted but none solves the equation over Q".to_string());
        }
    }
    Ok(res)
}

/// Candidate unknowns `L f / g` built from monomials in `q`:
/// `L = +-q^k` and `f`, `g` of degree at most one with constant terms in
/// `{0, +-q^k}`, `|k| <= 3`.
fn monomial_family(cfg: &FieldConfig, unit: bool) -> Vec<RatX> {
    let q = cfg.q();
    let mut powers: Vec<Scalar> = Vec::new();
    for k in -3i64..=3 {
        let v = q.pow_i(k).expect("q nonzero");
        let w = v.neg();
        if !powers.contains(&v) {
            powers.push(v);
        }
        if !powers.contains(&w) {
            powers.push(w);
        }
    }
    let one = cfg.one();
    let mut linear: Vec<PolyX> = vec![Poly::constant(one.clone()), Poly::new(vec![cfg.zero(), one.clone()])];
    linear.extend(powers.iter().map(|c| Poly::new(vec![c.clone(), one.clone()])));
    let mut out = Vec::new();
    for lambda in &powers {
        for f in &linear {
            if unit && f.coeff(0).is_none_or(|c| c.is_zero()) {
                continue;
            }
            for g in &linear {
                if g.coeff(0).is_none_or(|c| c.is_zero()) {
                    continue;
                }
                if let Some(y) = unknown_from_parts(lambda, f, g) {
                    if !out.contains(&y) {
                        out.push(y);
                    }
                }
            }
        }
    }
    out
}

/// Evaluation of symbolic-`q` data at `q = q0`, `X = x0` in a large finite
/// field of the same characteristic, used to discard candidates cheaply.
struct Specializer {
    field: std::sync::Arc<FiniteField>,
    q0: u32,
}

impl Specializer {
    fn new(cfg: &FieldConfig) -> Option<Self> {
        let field = match cfg.characteristic() {
            0 => FiniteField::prime(65_521).ok()?,
            p => {
                let p = p as u32;
                let mut m = 1;
                while (p as u64).pow(m + 1) <= 1 << 16 {
                    m += 1;
                }
                FiniteField::new(p, m).ok()?
            }
        };
        let q0 = field.generator();
        Some(Specializer { field, q0 })
    }

    fn base(&self, b: &Base) -> Option<u32> {
        match b {
            Base::Rat(r) => rational_mod_p(r, self.field.p()),
            Base::Ff(e) => Some(e.v),
        }
    }

    fn poly<T>(&self, coeffs: &[T], x: u32, f: impl Fn(&T) -> Option<u32>) -> Option<u32> {
        coeffs.iter().rev().try_fold(0, |acc, c| Some(self.field.add(self.field.mul(acc, x), f(c)?)))
    }

    fn scalar(&self, s: &Scalar) -> Option<u32> {
        match s {
            Scalar::Base(b) => self.base(b),
            Scalar::Sym(r) => {
                let n = self.poly(r.num().coeffs(), self.q0, |b| self.base(b))?;
                let d = self.poly(r.den().coeffs(), self.q0, |b| self.base(b))?;
                Some(self.field.mul(n, self.field.inv(d)?))
            }
        }
    }

    fn ratx(&self, r: &RatX, x: u32) -> Option<u32> {
        let n = self.poly(r.num().coeffs(), x, |c| self.scalar(c))?;
        let d = self.poly(r.den().coeffs(), x, |c| self.scalar(c))?;
        Some(self.field.mul(n, self.field.inv(d)?))
    }

    /// `false` only if the master equation provably fails for `y`.
    fn may_solve(&self, master: &MasterEquation, y: &RatX) -> bool {
        let fld = &self.field;
        let q2 = fld.mul(self.q0, self.q0);
        [fld.exp(1234), fld.exp(56789), fld.exp(424242)].iter().all(|&x| {
            let at = |r: &RatX, x: u32| self.ratx(r, x);
            let vals = (|| {
                let (y0, y1, y2) = (at(y, x)?, at(y, fld.mul(self.q0, x))?, at(y, fld.mul(q2, x))?);
                let c = [at(&master.rhs, x)?, at(&master.lin, x)?, at(&master.quad, x)?, at(&master.cubic, x)?];
                let p2 = fld.mul(y0, y1);
                let p3 = fld.mul(p2, y2);
                let lhs = fld.add(fld.add(fld.mul(c[1], y0), fld.mul(c[2], p2)), fld.mul(c[3], p3));
                Some(lhs == c[0])
            })();
            vals.unwrap_or(true)
        })
    }
}

/// Looks for a solution valid as an identity in the symbolic `q` among
/// [`monomial_family`]; returns it as a value of `t`.
pub fn identity_search(master: &MasterEquation, ring: &SkewRing) -> Option<RatX> {
    let cfg = ring.config();
    let family = monomial_family(cfg, master.kind.unit_unknown());
    let spec = Specializer::new(cfg);
    family
        .par_iter()
        .filter(|y| spec.as_ref().is_none_or(|s| s.may_solve(master, y)))
        .find_first(|y| master.eval_unknown(y, ring).is_zero())
        .and_then(|y| master.t_from_unknown(y).ok())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diamond::master::{eliminate_left_b1, eliminate_right_deg1};
    use crate::parse::parse_skew;

    const H: &str = "(1+X+theta+X*theta^2)*(1-X+X*theta)";

    #[test]
    fn reconstruction_of_small_rationals() {
        let p = 1_000_003;
        let r = BigRational::new((-3).into(), 7.into());
        let v = rational_mod_p(&r, p).unwrap();
        assert_eq!(rational_reconstruction(v, p), Some(r));
        assert_eq!(rational_reconstruction(22, 23), Some(BigRational::from_integer((-1).into())));
        // 5 needs |a| <= sqrt(23/2)
        assert_eq!(rational_reconstruction(5, 23), None);
    }

    #[test]
    fn prime_filter() {
        let opts = SolveOptions { degree_bound: 4, primes: vec![7, 11, 13, 19, 23, 31], ..Default::default() };
        let (keep, notes) = usable_primes(&BigRational::from_integer(2.into()), &opts);
        // ord_7(2) = 3, ord_31(2) = 5
        assert_eq!(keep, vec![11, 13, 19, 23]);
        assert_eq!(notes.len(), 2);
    }

    #[test]
    fn symbolic_q_is_rejected() {
        let ring = SkewRing::new(FieldConfig::rationals_symbolic());
        let h = parse_skew(H, &ring).unwrap();
        let m = eliminate_right_deg1(&h, &ring).unwrap();
        assert_eq!(solve_master(&m, &ring, &SolveOptions::default()).unwrap_err(), DiamondError::SymbolicQ);
    }

    #[test]
    fn right_ansatz_over_gf4_finds_unit_witness() {
        let ring = SkewRing::new(FieldConfig::extension_with_generator(2, 2).unwrap());
        let h = parse_skew(H, &ring).unwrap();
        let m = eliminate_right_deg1(&h, &ring).unwrap();
        let r = solve_master(&m, &ring, &SolveOptions::default()).unwrap();
        assert_eq!(r.status, Status::WitnessFound);
        assert!(m.residual(r.t.as_ref().unwrap(), &ring).unwrap().is_zero());
    }

    #[test]
    fn strategies_agree_over_small_fields() {
        for (p, q) in [(5u32, 2i64), (7, 3)] {
            let ring = SkewRing::new(FieldConfig::prime_with_q(p, q).unwrap());
            let h = parse_skew(H, &ring).unwrap();
            for m in [eliminate_left_b1(&h, &ring).unwrap().master, eliminate_right_deg1(&h, &ring).unwrap()] {
                let run = |strategy| {
                    let opts = SolveOptions { degree_bound: 1, strategy, ..Default::default() };
                    let r = solve_master(&m, &ring, &opts).unwrap();
                    (r.status, r.t.is_some())
                };
                assert_eq!(run(Strategy::Exhaustive), run(Strategy::Lifting), "p = {p}, {:?}", m.kind);
            }
        }
    }

    #[test]
    fn symbolic_identity_in_characteristic_two() {
        let ring = SkewRing::new(FieldConfig::prime_symbolic(2).unwrap());
        let h = parse_skew(H, &ring).unwrap();
        let left = eliminate_left_b1(&h, &ring).unwrap().master;
        let t = identity_search(&left, &ring).expect("left witness");
        assert!(left.residual(&t, &ring).unwrap().is_zero());
        let right = eliminate_right_deg1(&h, &ring).unwrap();
        let t = identity_search(&right, &ring).expect("right witness");
        assert!(t.is_local_unit());
    }
}
