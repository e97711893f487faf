//! Runs every acceptance criterion and prints one line per criterion.
//!
//! Criteria 1, 3 and 4 are additionally checked against small oracles
//! written here from scratch, so a shared bug in the library cannot make
//! both sides agree. Set `ORE_DIAMOND_EXTENDED=1` to include the degree
//! bound 4 refutation.

use std::collections::BTreeSet;
use std::process::ExitCode;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use ore_diamond::diamond::{truncated_oracle, MasterKind, OracleOptions};
use ore_diamond::field::FieldConfig;
use ore_diamond::parse::parse_skew;
use ore_diamond::reproduce::{run, ReproduceOptions, CRITERIA, V, W};
use ore_diamond::skew::SkewRing;

type Q = BigRational;
/// Polynomial in `X`, lowest degree first.
type P = Vec<Q>;

fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

fn p(cs: &[i64]) -> P {
    cs.iter().map(|&c| q(c, 1)).collect()
}

fn trim(mut a: P) -> P {
    while a.last().is_some_and(|c| c.is_zero()) {
        a.pop();
    }
    a
}

fn padd(a: &P, b: &P) -> P {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).cloned().unwrap_or_default() + b.get(i).cloned().unwrap_or_default()).collect())
}

fn pmul(a: &P, b: &P) -> P {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Q::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// `X^k -> (q^n X)^k`.
fn alpha(a: &P, qv: &Q, n: usize) -> P {
    let s = num_traits::pow(qv.clone(), n);
    let mut f = Q::one();
    let mut out = Vec::with_capacity(a.len());
    for c in a {
        out.push(c * &f);
        f *= &s;
    }
    trim(out)
}

/// `(sum a_i theta^i)(sum b_j theta^j) = sum a_i alpha^i(b_j) theta^(i+j)`.
fn skew_mul(a: &[P], b: &[P], qv: &Q) -> Vec<P> {
    let mut out = vec![Vec::new(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = padd(&out[i + j], &pmul(x, &alpha(y, qv, i)));
        }
    }
    out
}

/// Expansion of `v w` at a rational `q`, from the product rule alone and
/// from the closed-form coefficients, against the library.
fn expansion_oracle() -> Result<(), String> {
    for qv in [q(2, 1), q(3, 1), q(-5, 7)] {
        let v = vec![p(&[1, 1]), p(&[1]), p(&[0, 1])];
        let w = vec![p(&[1, -1]), p(&[0, 1])];
        let naive = skew_mul(&v, &w, &qv);
        let one = Q::one();
        let q2 = &qv * &qv;
        let closed = vec![
            p(&[1, 0, -1]),
            trim(vec![one.clone(), &one - &qv, one.clone()]),
            trim(vec![Q::zero(), qv.clone() + &one, -&q2]),
            trim(vec![Q::zero(), Q::zero(), q2.clone()]),
        ];
        if naive != closed {
            return Err(format!("naive product disagrees with the closed form at q = {qv}"));
        }
        let cfg = FieldConfig::rationals_with_q_rat(qv.clone()).map_err(|e| e.to_string())?;
        let ring = SkewRing::new(cfg);
        let h = parse_skew(&format!("({V})*({W})"), &ring).map_err(|e| e.to_string())?;
        let lib: Vec<P> = h
            .coeffs()
            .iter()
            .map(|c| {
                assert!(c.den().is_constant() && c.den().coeffs()[0].as_rational() == Some(Q::one()));
                trim(c.num().coeffs().iter().map(|s| s.as_rational().expect("rational")).collect())
            })
            .collect();
        if lib != naive {
            return Err(format!("library product disagrees with the naive product at q = {qv}"));
        }
    }
    Ok(())
}

/// The admissible constant terms of `t`, from a precision-1 product-rule
/// search that never forms a master equation.
fn constant_term_oracle() -> Result<(), String> {
    for (prime, qv) in [(13u32, 2i64), (17, 3), (29, 5)] {
        let ring = SkewRing::new(FieldConfig::prime_with_q(prime, qv).map_err(|e| e.to_string())?);
        let h = parse_skew(&format!("({V})*({W})"), &ring).map_err(|e| e.to_string())?;
        for (kind, want) in [(MasterKind::LeftB1, BTreeSet::from([1, qv as u32])), (MasterKind::RightDeg1, BTreeSet::from([1]))] {
            let opts = OracleOptions { prec: 1, max_listed: usize::MAX, ..Default::default() };
            let r = truncated_oracle(&h, kind, &ring, &opts).map_err(|e| e.to_string())?;
            let got: BTreeSet<u32> = r.listed.iter().map(|t| t[0]).collect();
            if got != want {
                return Err(format!("F{prime}, {}: t(0) in {got:?}, expected {want:?}", kind.name()));
            }
        }
    }
    Ok(())
}

/// `1 + q^2 L + q^2 L^2 + q^4 L^3 = (L + q^-2)(q^2 + q^4 L^2)` on a grid.
fn identity_oracle() -> Result<(), String> {
    for (qn, qd) in [(2, 1), (3, 1), (-1, 2), (5, 3), (7, -11)] {
        for (ln, ld) in [(0, 1), (1, 1), (-3, 2), (4, 9), (-13, 1)] {
            let (qv, l) = (q(qn, qd), q(ln, ld));
            let q2 = &qv * &qv;
            let q4 = &q2 * &q2;
            let lhs = Q::one() + &q2 * &l + &q2 * &l * &l + &q4 * &l * &l * &l;
            let rhs = (&l + Q::one() / &q2) * (&q2 + &q4 * &l * &l);
            if lhs != rhs {
                return Err(format!("fails at q = {qv}, lambda = {l}"));
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let opts = ReproduceOptions {
        extended: std::env::var("ORE_DIAMOND_EXTENDED").is_ok_and(|v| v == "1"),
        ..Default::default()
    };
    let mut failed = 0;
    for (id, _) in CRITERIA {
        let mut outcome = run(id, &opts);
        let oracle = match id {
            1 => Some(expansion_oracle()),
            3 => Some(constant_term_oracle()),
            4 => Some(identity_oracle()),
            _ => None,
        };
        if let Some(Err(e)) = oracle {
            outcome.passed = false;
            outcome.detail = format!("independent oracle: {e}; {}", outcome.detail);
        }
        let mark = if outcome.passed { "PASS" } else { "FAIL" };
        let detail = if outcome.detail.is_empty() { String::new() } else { format!(": {}", outcome.detail) };
        println!("criterion {id} {mark} [{}] ({} ms){detail}", outcome.name, outcome.elapsed_ms);
        if !outcome.passed {
            failed += 1;
        }
    }
    println!("{} of {} criteria passed", CRITERIA.len() - failed, CRITERIA.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
