//! The skew polynomial ring `Q[theta; alpha]` over `Q = k(X)`, with
//! `theta * r = alpha(r) * theta` and `alpha(X) = qX`.
//!
//! Elements are stored as `sum c_i theta^i` with coefficients on the left.
//! Division always happens over the fraction field; membership in the
//! subring `S = k[X]_(X)[theta; alpha]` is a separate predicate.

use thiserror::Error;

use crate::field::{Field, FieldConfig, Scalar};
use crate::ratfunc::RatX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SkewError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("operation is undefined for zero inputs")]
    ZeroInput,
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SkewPoly {
    coeffs: Vec<RatX>,
}

impl SkewPoly {
    pub fn new(mut coeffs: Vec<RatX>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        SkewPoly { coeffs }
    }

    pub fn zero() -> Self {
        SkewPoly { coeffs: Vec::new() }
    }

    pub fn constant(c: RatX) -> Self {
        Self::new(vec![c])
    }

    /// `c * theta^d`
    pub fn monomial(c: RatX, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); d + 1];
        coeffs[d] = c;
        SkewPoly { coeffs }
    }

    pub fn theta(cfg: &FieldConfig) -> Self {
        Self::monomial(RatX::scalar(cfg.one()), 1)
    }

    pub fn x(cfg: &FieldConfig) -> Self {
        Self::constant(RatX::x(cfg))
    }

    pub fn one(cfg: &FieldConfig) -> Self {
        Self::constant(RatX::scalar(cfg.one()))
    }

    pub fn coeffs(&self) -> &[RatX] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&RatX> {
        self.coeffs.get(i)
    }

    /// Coefficient of `theta^i`, zero when out of range.
    pub fn coeff_or_zero(&self, i: usize, cfg: &FieldConfig) -> RatX {
        self.coeffs.get(i).cloned().unwrap_or_else(|| RatX::zero(&cfg.one()))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&RatX> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(s);
        }
        Self::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        SkewPoly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    /// `c * self`; multiplying on the left scales each coefficient.
    pub fn scale_left(&self, c: &RatX) -> Self {
        Self::new(self.coeffs.iter().map(|a| c.mul(a)).collect())
    }

    /// Every coefficient lies in the local ring `k[X]_(X)`.
    pub fn in_s(&self) -> bool {
        self.coeffs.iter().all(|c| c.in_local_ring())
    }
}

/// Multiplication and division in `k(X)[theta; alpha]` for a fixed field
/// configuration.
#[derive(Clone, Debug)]
pub struct SkewRing {
    cfg: FieldConfig,
    q: Scalar,
}

impl SkewRing {
    pub fn new(cfg: FieldConfig) -> Self {
        let q = cfg.q();
        SkewRing { cfg, q }
    }

    pub fn config(&self) -> &FieldConfig {
        &self.cfg
    }

    pub fn q(&self) -> &Scalar {
        &self.q
    }

    pub fn alpha(&self, r: &RatX, n: i64) -> RatX {
        r.alpha(&self.q, n)
    }

    pub fn zero_coeff(&self) -> RatX {
        RatX::zero(&self.cfg.one())
    }

    pub fn mul(&self, a: &SkewPoly, b: &SkewPoly) -> SkewPoly {
        if a.is_zero() || b.is_zero() {
            return SkewPoly::zero();
        }
        let mut out = vec![self.zero_coeff(); a.coeffs.len() + b.coeffs.len() - 1];
        for (i, ai) in a.coeffs.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.coeffs.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let term = ai.mul(&self.alpha(bj, i as i64));
                out[i + j] = out[i + j].add(&term);
            }
        }
        SkewPoly::new(out)
    }

    /// `(quot, rem)` with `a = quot * b + rem` and `deg rem < deg b`.
    pub fn right_divide(&self, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
        let d = b.degree().ok_or(SkewError::DivisionByZero)?;
        let bd = b.lc().expect("nonzero");
        let mut rem = a.clone();
        let mut quot = Vec::new();
        while let Some(r) = rem.degree().filter(|&r| r >= d) {
            let k = r - d;
            let c = rem.lc().unwrap().div(&self.alpha(bd, k as i64)).expect("nonzero leading coefficient");
            let term = SkewPoly::monomial(c.clone(), k);
            rem = rem.sub(&self.mul(&term, b));
            if quot.len() <= k {
                quot.resize(k + 1, self.zero_coeff());
            }
            quot[k] = c;
            debug_assert!(rem.degree().is_none_or(|e| e < r));
        }
        Ok((SkewPoly::new(quot), rem))
    }

    /// `(quot, rem)` with `a = b * quot + rem` and `deg rem < deg b`.
    pub fn left_divide(&self, a: &SkewPoly, b: &SkewPoly) -> Result<(SkewPoly, SkewPoly), SkewError> {
        let d = b.degree().ok_or(SkewError::DivisionByZero)?;
        let bd = b.lc().expect("nonzero");
        let mut rem = a.clone();
        let mut quot = Vec::new();
        while let Some(r) = rem.degree().filter(|&r| r >= d) {
            let k = r - d;
            let c = self.alpha(&rem.lc().unwrap().div(bd).expect("nonzero"), -(d as i64));
            let term = SkewPoly::monomial(c.clone(), k);
            rem = rem.sub(&self.mul(b, &term));
            if quot.len() <= k {
                quot.resize(k + 1, self.zero_coeff());
            }
            quot[k] = c;
        }
        Ok((SkewPoly::new(quot), rem))
    }

    /// Left-multiplies by the inverse of the leading coefficient.
    pub fn monic(&self, a: &SkewPoly) -> SkewPoly {
        match a.lc() {
            None => SkewPoly::zero(),
            Some(lc) => a.scale_left(&lc.inv().expect("nonzero")),
        }
    }

    /// Greatest common right divisor, monic.
    pub fn gcrd(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly, SkewError> {
        if a.is_zero() && b.is_zero() {
            return Err(SkewError::ZeroInput);
        }
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let (_, r) = self.right_divide(&x, &y)?;
            x = y;
            y = r;
        }
        Ok(self.monic(&x))
    }

    /// Least common left multiple: the monic generator of `T a ∩ T b`.
    pub fn lclm(&self, a: &SkewPoly, b: &SkewPoly) -> Result<SkewPoly, SkewError> {
        if a.is_zero() || b.is_zero() {
            return Err(SkewError::ZeroInput);
        }
        // r_i = u_i a + v_i b; the first vanishing remainder gives u a = -v b
        let one = SkewPoly::one(&self.cfg);
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut u0, mut u1) = (one, SkewPoly::zero());
        while !r1.is_zero() {
            let (qt, r) = self.right_divide(&r0, &r1)?;
            let u2 = u0.sub(&self.mul(&qt, &u1));
            r0 = r1;
            r1 = r;
            u0 = u1;
            u1 = u2;
        }
        Ok(self.monic(&self.mul(&u1, a)))
    }

    pub fn pow(&self, a: &SkewPoly, e: u32) -> SkewPoly {
        (0..e).fold(SkewPoly::one(&self.cfg), |acc, _| self.mul(&acc, a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Poly;

    fn ring_sym() -> SkewRing {
        SkewRing::new(FieldConfig::rationals_symbolic())
    }

    fn rx(cfg: &FieldConfig, cs: &[Scalar]) -> RatX {
        RatX::from_polyx(Poly::new(cs.to_vec()), cfg)
    }

    #[test]
    fn theta_times_x() {
        let ring = ring_sym();
        let cfg = ring.config().clone();
        let p = ring.mul(&SkewPoly::theta(&cfg), &SkewPoly::x(&cfg));
        let qx = rx(&cfg, &[cfg.zero(), cfg.q()]);
        assert_eq!(p, SkewPoly::monomial(qx, 1));
    }

    #[test]
    fn product_of_type_c_and_type_b_element() {
        let ring = ring_sym();
        let cfg = ring.config().clone();
        let (one, q) = (cfg.one(), cfg.q());
        let z = cfg.zero();
        let v = SkewPoly::new(vec![
            rx(&cfg, &[one.clone(), one.clone()]),
            rx(&cfg, std::slice::from_ref(&one)),
            rx(&cfg, &[z.clone(), one.clone()]),
        ]);
        let w = SkewPoly::new(vec![rx(&cfg, &[one.clone(), one.neg()]), rx(&cfg, &[z.clone(), one.clone()])]);
        let h = ring.mul(&v, &w);
        let q2 = q.mul(&q);
        let expect = [
            rx(&cfg, &[one.clone(), z.clone(), one.neg()]),
            rx(&cfg, &[one.clone(), one.sub(&q), one.clone()]),
            rx(&cfg, &[z.clone(), q.add(&one), q2.neg()]),
            rx(&cfg, &[z.clone(), z.clone(), q2.clone()]),
        ];
        assert_eq!(h.coeffs(), &expect);
    }

    #[test]
    fn right_division_example() {
        let ring = ring_sym();
        let cfg = ring.config().clone();
        let x = RatX::x(&cfg);
        let b = SkewPoly::theta(&cfg).sub(&SkewPoly::constant(x.clone()));
        let a = ring.pow(&SkewPoly::theta(&cfg), 2);
        let (qt, r) = ring.right_divide(&a, &b).unwrap();
        let qx = x.mul(&RatX::scalar(cfg.q()));
        assert_eq!(qt, SkewPoly::theta(&cfg).add(&SkewPoly::constant(qx.clone())));
        assert_eq!(r, SkewPoly::constant(qx.mul(&x)));
    }

    #[test]
    fn left_division_equal_degree() {
        let ring = ring_sym();
        let cfg = ring.config().clone();
        let t2 = ring.pow(&SkewPoly::theta(&cfg), 2);
        let b = t2.add(&SkewPoly::one(&cfg));
        let (qt, r) = ring.left_divide(&t2, &b).unwrap();
        assert_eq!(qt, SkewPoly::one(&cfg));
        assert_eq!(r, SkewPoly::one(&cfg).neg());
    }

    #[test]
    fn gcrd_of_common_right_factor() {
        let ring = SkewRing::new(FieldConfig::rationals_with_q(3));
        let cfg = ring.config().clone();
        let th = SkewPoly::theta(&cfg);
        let one = SkewPoly::one(&cfg);
        let f = th.sub(&one);
        let a = ring.mul(&th.sub(&SkewPoly::x(&cfg)), &f);
        let b = ring.mul(&th.add(&one), &f);
        assert_eq!(ring.gcrd(&a, &b).unwrap(), f);
        let l = ring.lclm(&a, &b).unwrap();
        assert_eq!(l.degree(), Some(3));
        assert!(ring.right_divide(&l, &a).unwrap().1.is_zero());
        assert!(ring.right_divide(&l, &b).unwrap().1.is_zero());
    }

    #[test]
    fn zero_inputs_rejected() {
        let ring = ring_sym();
        let cfg = ring.config().clone();
        let a = SkewPoly::theta(&cfg);
        assert_eq!(ring.right_divide(&a, &SkewPoly::zero()), Err(SkewError::DivisionByZero));
        assert_eq!(ring.gcrd(&SkewPoly::zero(), &SkewPoly::zero()), Err(SkewError::ZeroInput));
        assert_eq!(ring.lclm(&a, &SkewPoly::zero()), Err(SkewError::ZeroInput));
    }

    #[test]
    fn membership_in_s() {
        let cfg = FieldConfig::rationals_symbolic();
        let x = RatX::x(&cfg);
        let inv_x = x.inv().unwrap();
        assert!(!SkewPoly::monomial(inv_x, 1).in_s());
        assert!(SkewPoly::zero().in_s());
        assert!(SkewPoly::theta(&cfg).add(&SkewPoly::x(&cfg)).in_s());
    }
}
