//! Orbits of maximal ideals of `k[X]` under an automorphism, and
//! `alpha`-special elements.
//!
//! Two automorphisms are modelled: the q-shift `X -> qX`, and the
//! Frobenius on constants (`a -> a^p` on `GF(p^m)`, `X` fixed). A maximal
//! ideal `<g>` is sent to `<alpha(g)>`, with `alpha(g)` made monic again.
//!
//! For the q-shift with `q` not a root of unity, the nonzero
//! `alpha`-invariant ideals of `k[X]_(X)` are the `X^m k[X]_(X)`: such an
//! ideal is `X^m k[X]_(X)` for some `m` since the ring is a discrete
//! valuation ring, and each of these is invariant. Speciality is therefore
//! tested against `X^m` only.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Base, FfElem, Field, FieldConfig, Poly, Scalar};
use crate::parse::{format_poly, scalar_expr};
use crate::ratfunc::{poly_alpha, roots_in_field, PolyX, RatX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectraError {
    #[error("the zero element is never special")]
    Zero,
    #[error("ideal exponent must be nonnegative")]
    NegativeExponent,
    #[error("generator must be monic of positive degree")]
    NotMonic,
    #[error("generator is reducible")]
    Reducible,
    #[error("irreducibility cannot be decided for this generator")]
    Undecided,
    #[error("the Frobenius action needs coefficients in a finite field")]
    NotFinite,
    #[error("element is not in k[X]_(X)")]
    NotLocal,
    #[error("budget exhausted after {0} orbits without a refutation")]
    BudgetExhausted(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Action {
    /// `X -> qX`, constants fixed.
    QShift,
    /// `a -> a^p` on constants, `X` fixed.
    Frobenius,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxIdeal {
    pub generator: PolyX,
    pub action: Action,
    q: Scalar,
}

/// Rabin-style test over a finite field `GF(s)`: `g` of degree `d` is
/// irreducible iff `gcd(g, X^(s^i) - X) = 1` for `1 <= i <= d/2`.
fn irreducible_over_finite(g: &PolyX, size: u64) -> bool {
    let d = g.degree().expect("nonzero");
    let one = g.lc().expect("nonzero").one_like();
    let x = Poly::monomial(one.clone(), 1);
    let mut power = x.clone();
    for _ in 0..d / 2 {
        power = power.pow_mod(size, g).expect("nonzero modulus");
        if power.sub(&x).gcd(g).degree() != Some(0) {
            return false;
        }
    }
    true
}

impl MaxIdeal {
    pub fn linear(root: Scalar, action: Action, cfg: &FieldConfig) -> Self {
        MaxIdeal { generator: Poly::linear_root(&root), action, q: cfg.q() }
    }

    /// Validates that `generator` is monic and irreducible.
    pub fn new(generator: PolyX, action: Action, cfg: &FieldConfig) -> Result<Self, SpectraError> {
        if !generator.is_monic() || generator.degree() == Some(0) {
            return Err(SpectraError::NotMonic);
        }
        if action == Action::Frobenius && cfg.finite_field().is_none() {
            return Err(SpectraError::NotFinite);
        }
        let d = generator.degree().expect("monic");
        if d > 1 {
            let irreducible = match cfg.finite_field() {
                Some(f) if !cfg.is_symbolic() => irreducible_over_finite(&generator, f.size() as u64),
                None if !cfg.is_symbolic() && d <= 3 => roots_in_field(&generator, cfg).roots.is_empty(),
                _ => return Err(SpectraError::Undecided),
            };
            if !irreducible {
                return Err(SpectraError::Reducible);
            }
        }
        Ok(MaxIdeal { generator, action, q: cfg.q() })
    }

    /// `alpha(<g>) = <alpha(g)>`, generator made monic.
    pub fn apply(&self) -> MaxIdeal {
        let g = match self.action {
            Action::QShift => poly_alpha(&self.generator, &self.q, 1).monic(),
            Action::Frobenius => self.generator.map(frobenius),
        };
        MaxIdeal { generator: g, action: self.action, q: self.q.clone() }
    }
}

fn frobenius(c: &Scalar) -> Scalar {
    match c.as_ff() {
        Some(e) => {
            let v = e.field.frobenius(e.v);
            Scalar::Base(Base::Ff(FfElem { v, field: e.field }))
        }
        None => c.clone(),
    }
}

impl fmt::Display for MaxIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", format_poly(&self.generator, "X", &scalar_expr))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum OrbitStatus {
    Finite(usize),
    Exceeded(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitReport {
    pub representative: MaxIdeal,
    pub elements: Vec<MaxIdeal>,
    pub status: OrbitStatus,
}

#[derive(Debug, Clone, Serialize)]
pub struct OrbitReportJson {
    pub representative: String,
    pub elements: Vec<String>,
    pub status: OrbitStatus,
}

impl From<&OrbitReport> for OrbitReportJson {
    fn from(r: &OrbitReport) -> Self {
        OrbitReportJson {
            representative: r.representative.to_string(),
            elements: r.elements.iter().map(|m| m.to_string()).collect(),
            status: r.status,
        }
    }
}

/// Iterates `alpha` on `m` until it returns to `m` or `bound` elements
/// have been produced.
pub fn orbit(m: &MaxIdeal, bound: usize) -> OrbitReport {
    let bound = bound.max(1);
    let mut elements = vec![m.clone()];
    let mut cur = m.apply();
    while cur != *m {
        if elements.len() == bound {
            return OrbitReport { representative: m.clone(), elements, status: OrbitStatus::Exceeded(bound) };
        }
        elements.push(cur.clone());
        cur = cur.apply();
    }
    let size = elements.len();
    OrbitReport { representative: m.clone(), elements, status: OrbitStatus::Finite(size) }
}

/// `a alpha(a) ... alpha^(n-1)(a)` for the q-shift.
pub fn special_product(a: &RatX, n: usize, q: &Scalar) -> Result<RatX, SpectraError> {
    if a.is_zero() {
        return Err(SpectraError::Zero);
    }
    let mut acc = a.clone();
    for i in 1..n.max(1) {
        acc = acc.mul(&a.alpha(q, i as i64));
    }
    Ok(acc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Speciality {
    Yes(usize),
    NoUpTo(usize),
}

/// Smallest `n <= n_max` with `special_product(a, n)` in `X^m k[X]_(X)`.
pub fn is_special_for(a: &RatX, m: i64, n_max: usize, q: &Scalar) -> Result<Speciality, SpectraError> {
    if m < 0 {
        return Err(SpectraError::NegativeExponent);
    }
    if a.is_zero() {
        return Err(SpectraError::Zero);
    }
    if !a.in_local_ring() {
        return Err(SpectraError::NotLocal);
    }
    let mut acc = a.clone();
    for n in 1..=n_max {
        if n > 1 {
            acc = acc.mul(&a.alpha(q, (n - 1) as i64));
        }
        if acc.x_valuation().expect("nonzero") >= m {
            return Ok(Speciality::Yes(n));
        }
        if a.x_valuation() == Some(0) {
            break;
        }
    }
    Ok(Speciality::NoUpTo(n_max))
}

/// Minimal polynomial over the prime field of an element of `GF(p^m)`:
/// the product of `X - w^(p^i)` over its Frobenius orbit.
pub fn minimal_polynomial(w: &FfElem) -> PolyX {
    let one = Scalar::Base(Base::Ff(FfElem { v: 1, field: w.field.clone() }));
    let mut roots = vec![w.v];
    let mut cur = w.field.frobenius(w.v);
    while cur != w.v {
        roots.push(cur);
        cur = w.field.frobenius(cur);
    }
    let roots: Vec<Scalar> = roots.into_iter().map(|v| Scalar::Base(Base::Ff(FfElem { v, field: w.field.clone() }))).collect();
    Poly::from_roots(&one, &roots)
}

/// Evidence that a polynomial over `GF(p^m)` is not special for the
/// Frobenius action: the finite orbits of `<X - w>`, `w` in `GF(p^m)`, are
/// pairwise disjoint, so a special element would need a root in each of
/// them, hence at least as many roots as orbits.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusWitness {
    pub degree: usize,
    pub orbits: usize,
    pub orbit_sizes: Vec<usize>,
    /// A root `w` (as `g^k` text) of an orbit containing no root of the candidate.
    pub missed_orbit: Option<String>,
    pub refuted: bool,
}

pub fn frobenius_nonspecial_witness(candidate: &PolyX, cfg: &FieldConfig, orbit_budget: usize) -> Result<FrobeniusWitness, SpectraError> {
    let field = cfg.finite_field().ok_or(SpectraError::NotFinite)?.clone();
    if candidate.is_zero() {
        return Err(SpectraError::Zero);
    }
    let degree = candidate.degree().expect("nonzero");
    let mut seen = BTreeSet::new();
    let mut sizes = Vec::new();
    let mut missed = None;
    for w in field.elements() {
        if seen.contains(&w) {
            continue;
        }
        if sizes.len() == orbit_budget {
            break;
        }
        let mut orb = vec![w];
        let mut cur = field.frobenius(w);
        while cur != w {
            orb.push(cur);
            cur = field.frobenius(cur);
        }
        seen.extend(orb.iter().copied());
        sizes.push(orb.len());
        let hits = orb.iter().any(|&v| {
            let x = Scalar::Base(Base::Ff(FfElem { v, field: field.clone() }));
            candidate.eval(&x).is_some_and(|y| y.is_zero())
        });
        if !hits && missed.is_none() {
            missed = Some(Scalar::Base(Base::Ff(FfElem { v: w, field: field.clone() })).to_string());
        }
    }
    let refuted = sizes.len() > degree || missed.is_some();
    if !refuted {
        return Err(SpectraError::BudgetExhausted(sizes.len()));
    }
    Ok(FrobeniusWitness { degree, orbits: sizes.len(), orbit_sizes: sizes, missed_orbit: missed, refuted })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_ratx;
    use crate::skew::SkewRing;

    #[test]
    fn q_shift_orbits() {
        let cfg = FieldConfig::rationals_with_q(2);
        let r = orbit(&MaxIdeal::linear(cfg.one(), Action::QShift, &cfg), 50);
        assert_eq!(r.status, OrbitStatus::Exceeded(50));
        assert_eq!(r.elements[1].generator, Poly::linear_root(&cfg.scalar_ratio(1, 2).unwrap()));
        let r = orbit(&MaxIdeal::linear(cfg.zero(), Action::QShift, &cfg), 50);
        assert_eq!(r.status, OrbitStatus::Finite(1));
        // q = 2 has order 4 modulo 5
        let cfg = FieldConfig::prime_with_q(5, 2).unwrap();
        let r = orbit(&MaxIdeal::linear(cfg.one(), Action::QShift, &cfg), 50);
        assert_eq!(r.status, OrbitStatus::Finite(4));
    }

    #[test]
    fn frobenius_orbit_in_gf8() {
        let cfg = FieldConfig::extension_with_generator(2, 3).unwrap();
        let w = cfg.q();
        let r = orbit(&MaxIdeal::linear(w.clone(), Action::Frobenius, &cfg), 10);
        assert_eq!(r.status, OrbitStatus::Finite(3));
        assert_eq!(minimal_polynomial(&w.as_ff().unwrap()).degree(), Some(3));
    }

    #[test]
    fn irreducibility_is_checked() {
        let cfg = FieldConfig::prime_with_q(5, 2).unwrap();
        let x2p2 = Poly::new(vec![cfg.scalar(2), cfg.zero(), cfg.one()]);
        assert!(MaxIdeal::new(x2p2, Action::QShift, &cfg).is_ok());
        let x2m1 = Poly::new(vec![cfg.scalar(-1), cfg.zero(), cfg.one()]);
        assert_eq!(MaxIdeal::new(x2m1, Action::QShift, &cfg), Err(SpectraError::Reducible));
    }

    #[test]
    fn special_products() {
        let ring = SkewRing::new(FieldConfig::rationals_symbolic());
        let q = ring.q().clone();
        let x = parse_ratx("X", &ring).unwrap();
        assert_eq!(special_product(&x, 3, &q).unwrap(), parse_ratx("q^3*X^3", &ring).unwrap());
        let c = parse_ratx("5", &ring).unwrap();
        assert_eq!(special_product(&c, 4, &q).unwrap(), parse_ratx("625", &ring).unwrap());
        assert_eq!(is_special_for(&x, 5, 10, &q), Ok(Speciality::Yes(5)));
        let x2 = parse_ratx("X^2/(1+X)", &ring).unwrap();
        assert_eq!(is_special_for(&x2, 5, 10, &q), Ok(Speciality::Yes(3)));
        let u = parse_ratx("(2+X)/(1-X)", &ring).unwrap();
        assert_eq!(is_special_for(&u, 1, 10, &q), Ok(Speciality::NoUpTo(10)));
        assert_eq!(is_special_for(&x, -1, 10, &q), Err(SpectraError::NegativeExponent));
    }

    #[test]
    fn frobenius_refutation() {
        let cfg = FieldConfig::extension_with_generator(2, 4).unwrap();
        let g = cfg.q();
        let cand = Poly::from_roots(&cfg.one(), &[g.clone(), g.mul(&g), cfg.one()]);
        let w = frobenius_nonspecial_witness(&cand, &cfg, 100).unwrap();
        assert!(w.refuted);
        assert_eq!(w.orbits, 6);
        assert_eq!(w.orbit_sizes.iter().sum::<usize>(), 16);
        assert_eq!(frobenius_nonspecial_witness(&Poly::zero(), &cfg, 100), Err(SpectraError::Zero));
        let covers_first = Poly::from_roots(&cfg.one(), &[cfg.zero(), cfg.one(), g.clone()]);
        assert_eq!(frobenius_nonspecial_witness(&covers_first, &cfg, 2), Err(SpectraError::BudgetExhausted(2)));
    }
}
