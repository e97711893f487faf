//! Elimination of the two degree-3 factorization ansätze to a single
//! functional equation in one unknown.
//!
//! For `h = h0 + h1 theta + h2 theta^2 + h3 theta^3`:
//!
//! * left ansatz `h = (1 + X t theta)(a + b theta + c theta^2)`: comparing
//!   coefficients gives `a = h0`, `b = h1 - X alpha(h0) t`,
//!   `c = h2 - X alpha(h1) t + q X^2 alpha^2(h0) t alpha(t)` and
//!   `X alpha(h2) t - q X^2 alpha^2(h1) t alpha(t)
//!    + q^3 X^3 alpha^3(h0) t alpha(t) alpha^2(t) = h3`;
//! * right ansatz `h = (a + b theta + c theta^2)(1 + t theta)`: with
//!   `u = t^-1` one gets `a = h0`, `b = h1 - h0 t`, `c = h3 alpha^2(u)` and
//!   `h1 u - h2 u alpha(u) + h3 u alpha(u) alpha^2(u) = h0`.
//!
//! Both have the form `lin y + quad y alpha(y) + cubic y alpha(y) alpha^2(y) = rhs`.

use serde::Serialize;

use crate::field::{Field, FieldConfig, Frac, Poly, Scalar};
use crate::ratfunc::{PolyX, RatX};
use crate::skew::{SkewPoly, SkewRing};

use super::DiamondError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum MasterKind {
    /// `h = (1 + X t theta) * (a + b theta + c theta^2)`, unknown `t`.
    #[serde(rename = "left_B1")]
    LeftB1,
    /// `h = (a + b theta + c theta^2) * (1 + t theta)`, unknown `u = 1/t`.
    #[serde(rename = "right_deg1")]
    RightDeg1,
}

impl MasterKind {
    pub fn name(self) -> &'static str {
        match self {
            MasterKind::LeftB1 => "left_B1",
            MasterKind::RightDeg1 => "right_deg1",
        }
    }

    /// The unknown must be a unit of `k[X]_(X)`.
    pub fn unit_unknown(self) -> bool {
        matches!(self, MasterKind::RightDeg1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MasterEquation {
    pub kind: MasterKind,
    pub lin: RatX,
    pub quad: RatX,
    pub cubic: RatX,
    pub rhs: RatX,
}

/// `c0 + c1 y + c2 y alpha(y) + c3 y alpha(y) alpha^2(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Chain {
    pub terms: [RatX; 4],
}

impl Chain {
    pub fn eval(&self, y: &RatX, ring: &SkewRing) -> RatX {
        let y1 = ring.alpha(y, 1);
        let y2 = ring.alpha(y, 2);
        let p1 = y.clone();
        let p2 = p1.mul(&y1);
        let p3 = p2.mul(&y2);
        self.terms[0].add(&self.terms[1].mul(&p1)).add(&self.terms[2].mul(&p2)).add(&self.terms[3].mul(&p3))
    }
}

/// Result of eliminating the left ansatz: `a`, and `b`, `c` as functions of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeftElimination {
    pub a: RatX,
    pub b: Chain,
    pub c: Chain,
    pub master: MasterEquation,
}

fn check_input(h: &SkewPoly) -> Result<(), DiamondError> {
    if h.degree() != Some(3) {
        return Err(DiamondError::WrongDegree(h.degree()));
    }
    if !h.in_s() {
        return Err(DiamondError::NotInS);
    }
    if !h.coeffs()[0].is_local_unit() {
        return Err(DiamondError::ConstantTermNotUnit);
    }
    Ok(())
}

pub fn eliminate_left_b1(h: &SkewPoly, ring: &SkewRing) -> Result<LeftElimination, DiamondError> {
    check_input(h)?;
    let cfg = ring.config();
    let c = h.coeffs();
    let x = RatX::x(cfg);
    let q = RatX::scalar(ring.q().clone());
    let x2 = x.mul(&x);
    let zero = ring.zero_coeff();
    let a = c[0].clone();
    let b = Chain { terms: [c[1].clone(), x.mul(&ring.alpha(&c[0], 1)).neg(), zero.clone(), zero.clone()] };
    let cc = Chain {
        terms: [
            c[2].clone(),
            x.mul(&ring.alpha(&c[1], 1)).neg(),
            q.mul(&x2).mul(&ring.alpha(&c[0], 2)),
            zero,
        ],
    };
    let q3 = q.mul(&q).mul(&q);
    let master = MasterEquation {
        kind: MasterKind::LeftB1,
        lin: x.mul(&ring.alpha(&c[2], 1)),
        quad: q.mul(&x2).mul(&ring.alpha(&c[1], 2)).neg(),
        cubic: q3.mul(&x2).mul(&x).mul(&ring.alpha(&c[0], 3)),
        rhs: c[3].clone(),
    };
    Ok(LeftElimination { a, b, c: cc, master })
}

pub fn eliminate_right_deg1(h: &SkewPoly, _ring: &SkewRing) -> Result<MasterEquation, DiamondError> {
    check_input(h)?;
    let c = h.coeffs();
    Ok(MasterEquation {
        kind: MasterKind::RightDeg1,
        lin: c[1].clone(),
        quad: c[2].neg(),
        cubic: c[3].clone(),
        rhs: c[0].clone(),
    })
}

/// The two factors `(left, right)` with `left * right` meant to equal `h`.
pub fn assemble(kind: MasterKind, h: &SkewPoly, t: &RatX, ring: &SkewRing) -> Result<(SkewPoly, SkewPoly, [RatX; 3]), DiamondError> {
    let cfg = ring.config();
    let c = h.coeffs();
    let one = RatX::scalar(cfg.one());
    match kind {
        MasterKind::LeftB1 => {
            let el = eliminate_left_b1(h, ring)?;
            let (b, cc) = (el.b.eval(t, ring), el.c.eval(t, ring));
            let left = SkewPoly::new(vec![one, RatX::x(cfg).mul(t)]);
            let right = SkewPoly::new(vec![el.a.clone(), b.clone(), cc.clone()]);
            Ok((left, right, [el.a, b, cc]))
        }
        MasterKind::RightDeg1 => {
            check_input(h)?;
            let u = t.inv().ok_or(DiamondError::ZeroUnknown)?;
            let a = c[0].clone();
            let b = c[1].sub(&a.mul(t));
            let cc = c[3].mul(&ring.alpha(&u, 2));
            let left = SkewPoly::new(vec![a.clone(), b.clone(), cc.clone()]);
            let right = SkewPoly::new(vec![one, t.clone()]);
            Ok((left, right, [a, b, cc]))
        }
    }
}

impl MasterEquation {
    /// `[rhs, lin, quad, cubic]`
    pub fn coefficients(&self) -> [&RatX; 4] {
        [&self.rhs, &self.lin, &self.quad, &self.cubic]
    }

    /// The unknown of the equation for a given `t`.
    pub fn unknown_from_t(&self, t: &RatX) -> Result<RatX, DiamondError> {
        match self.kind {
            MasterKind::LeftB1 => Ok(t.clone()),
            MasterKind::RightDeg1 => t.inv().ok_or(DiamondError::ZeroUnknown),
        }
    }

    pub fn t_from_unknown(&self, y: &RatX) -> Result<RatX, DiamondError> {
        self.unknown_from_t(y)
    }

    /// `lin y + quad y alpha(y) + cubic y alpha(y) alpha^2(y) - rhs`.
    pub fn eval_unknown(&self, y: &RatX, ring: &SkewRing) -> RatX {
        let chain = Chain { terms: [self.rhs.neg(), self.lin.clone(), self.quad.clone(), self.cubic.clone()] };
        chain.eval(y, ring)
    }

    /// Zero iff `t` satisfies the equation.
    pub fn residual(&self, t: &RatX, ring: &SkewRing) -> Result<RatX, DiamondError> {
        Ok(self.eval_unknown(&self.unknown_from_t(t)?, ring))
    }

    /// Same equation up to a nonzero factor.
    pub fn is_proportional_to(&self, other: &MasterEquation) -> bool {
        let a = self.coefficients();
        let b = other.coefficients();
        let Some(i) = a.iter().position(|c| !c.is_zero()) else {
            return b.iter().all(|c| c.is_zero());
        };
        if b[i].is_zero() {
            return false;
        }
        let ratio = b[i].div(a[i]).expect("nonzero");
        a.iter().zip(b.iter()).all(|(x, y)| x.mul(&ratio) == **y)
    }

    /// Polynomial coefficients `[P0, P1, P2, P3]` of an equivalent
    /// equation `P1 y + P2 y alpha(y) + P3 y alpha(y) alpha^2(y) = P0`:
    /// denominators are cleared and the common power of `X` removed.
    pub fn cleared(&self, cfg: &FieldConfig) -> [PolyX; 4] {
        let one = cfg.one();
        let coeffs = self.coefficients();
        let mut l = Poly::constant(one.clone());
        for c in coeffs {
            let g = l.gcd(c.den());
            l = l.mul(c.den()).div_exact(&g).expect("lcm");
        }
        let polys: Vec<PolyX> = coeffs.iter().map(|c| c.num().mul(&l.div_exact(c.den()).expect("multiple"))).collect();
        let v = polys.iter().filter_map(|p| p.valuation()).min().unwrap_or(0);
        let out: Vec<PolyX> = polys.iter().map(|p| p.shift_down(v)).collect();
        out.try_into().expect("four coefficients")
    }

    /// Reduction at `X = 0` of the cleared equation, as a polynomial in `y(0)`.
    pub fn constant_term_poly(&self, cfg: &FieldConfig) -> PolyX {
        let p = self.cleared(cfg);
        let at0 = |k: usize| p[k].coeff(0).cloned().unwrap_or_else(|| cfg.zero());
        Poly::new(vec![at0(0).neg(), at0(1), at0(2), at0(3)])
    }
}

/// Degrees and leading coefficients of the four terms of the cleared
/// identity
/// `P1 L f a(g) a2(g) + P2 L^2 f a(f) a2(g) + P3 L^3 f a(f) a2(f) - P0 g a(g) a2(g) = 0`
/// for `y = L f / g` with `f`, `g` monic of degrees `n`, `m`.
///
/// Returns the polynomial in `L` formed by the terms of top degree, or
/// `None` when fewer than two terms reach it (then no solution has these
/// degrees).
pub fn lambda_poly(polys: &[PolyX; 4], n: usize, m: usize, q: &Scalar, cfg: &FieldConfig) -> Option<PolyX> {
    // (lambda power, x-degree, leading coefficient)
    let mut terms: Vec<(usize, usize, Scalar)> = Vec::new();
    let shape = [(0usize, 3 * m, 3 * m as u64), (1, n + 2 * m, 3 * m as u64), (2, 2 * n + m, (n + 2 * m) as u64), (3, 3 * n, 3 * n as u64)];
    for (k, p) in polys.iter().enumerate() {
        let Some(d) = p.degree() else { continue };
        let (pow, deg, qexp) = shape[k];
        let mut lc = p.lc().unwrap().mul(&q.pow(qexp));
        if k == 0 {
            lc = lc.neg();
        }
        terms.push((pow, d + deg, lc));
    }
    let top = terms.iter().map(|t| t.1).max()?;
    let at_top: Vec<_> = terms.iter().filter(|t| t.1 == top).collect();
    if at_top.len() < 2 {
        return None;
    }
    let mut coeffs = vec![cfg.zero(); 4];
    for (pow, _, lc) in at_top {
        coeffs[*pow] = coeffs[*pow].add(lc);
    }
    let p = Poly::new(coeffs);
    (p.degree().unwrap_or(0) > p.valuation().unwrap_or(0)).then_some(p)
}

/// `lambda * f / g` as an element of `k(X)`.
pub fn unknown_from_parts(lambda: &Scalar, f: &PolyX, g: &PolyX) -> Option<RatX> {
    Frac::new(f.scale(lambda), g.clone())
}
