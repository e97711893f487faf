//! Rational functions in `X`, the local ring `k[X]_(X)`, and the q-shift
//! automorphism `X -> qX`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{Base, Field, FieldConfig, Frac, Poly, Scalar};

pub type PolyX = Poly<Scalar>;
pub type RatX = Frac<Scalar>;

/// `p(q^n X)`
pub fn poly_alpha(p: &PolyX, q: &Scalar, n: i64) -> PolyX {
    if n == 0 || p.is_zero() {
        return p.clone();
    }
    p.scale_var(&q.pow_i(n).expect("q is nonzero"))
}

impl Frac<Scalar> {
    pub fn x(cfg: &FieldConfig) -> RatX {
        Frac::var(&cfg.one())
    }

    pub fn scalar(c: Scalar) -> RatX {
        Frac::constant(c)
    }

    pub fn from_polyx(p: PolyX, cfg: &FieldConfig) -> RatX {
        Frac::from_poly(p, &cfg.one())
    }

    /// `alpha^n` applied to `self`, where `alpha(X) = qX`; `n` may be negative.
    pub fn alpha(&self, q: &Scalar, n: i64) -> RatX {
        if n == 0 || self.is_zero() {
            return self.clone();
        }
        self.scale_var(&q.pow_i(n).expect("q is nonzero"))
    }

    /// Denominator does not vanish at `X = 0`.
    pub fn in_local_ring(&self) -> bool {
        self.den().coeff(0).is_some_and(|c| !c.is_zero())
    }

    /// Unit of the local ring: numerator and denominator nonzero at `X = 0`.
    pub fn is_local_unit(&self) -> bool {
        self.in_local_ring() && self.num().coeff(0).is_some_and(|c| !c.is_zero())
    }

    /// Order of vanishing at `X = 0`; `None` for zero.
    pub fn x_valuation(&self) -> Option<i64> {
        let vn = self.num().valuation()? as i64;
        let vd = self.den().valuation().expect("nonzero denominator") as i64;
        Some(vn - vd)
    }

    /// Value at `X = 0` for elements of the local ring.
    pub fn at_zero(&self) -> Option<Scalar> {
        let d = self.den().coeff(0)?;
        if d.is_zero() {
            return None;
        }
        let n = self.num().coeff(0).cloned().unwrap_or_else(|| d.zero_like());
        n.div(d)
    }

    /// `self / X^k` (or `* X^-k` for negative `k`).
    pub fn div_x_pow(&self, k: i64) -> RatX {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let one = self.den().coeffs()[0].one_like();
        let xk = Poly::monomial(one, k.unsigned_abs() as usize);
        if k > 0 {
            Frac::new(self.num().clone(), self.den().mul(&xk)).expect("nonzero")
        } else {
            Frac::new(self.num().mul(&xk), self.den().clone()).expect("nonzero")
        }
    }
}

/// Roots of a polynomial that lie in the working field, with multiplicity,
/// and the cofactor that has no further roots there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSplit {
    pub roots: Vec<Scalar>,
    pub remainder: PolyX,
}

impl RootSplit {
    pub fn splits(&self) -> bool {
        self.remainder.degree() == Some(0)
    }
}

/// Finds all roots of `f` in the working field.
///
/// Finite fields are searched exhaustively, `Q` by the rational root
/// theorem. Over a symbolic `q`, candidate roots are `c a(q)/b(q)` with `a`,
/// `b` built from the base-field linear factors of the extreme coefficients.
pub fn roots_in_field(f: &PolyX, cfg: &FieldConfig) -> RootSplit {
    assert!(!f.is_zero(), "roots of the zero polynomial");
    let candidates: Vec<Scalar> = if cfg.is_symbolic() {
        symbolic_root_candidates(f, cfg)
    } else {
        let fb: Poly<Base> = f.map(|c| c.as_base().expect("explicit scalars"));
        base_roots(&fb).into_iter().map(|b| cfg.lift(b)).collect()
    };
    let mut remainder = f.clone();
    let mut roots = Vec::new();
    for r in candidates {
        let lin = Poly::linear_root(&r);
        while remainder.degree().unwrap_or(0) > 0 {
            match remainder.div_exact(&lin) {
                Some(q) => {
                    roots.push(r.clone());
                    remainder = q;
                }
                None => break,
            }
        }
    }
    roots.sort();
    RootSplit { roots, remainder }
}

/// Distinct roots of a polynomial over `Q` or a finite field.
pub fn base_roots(f: &Poly<Base>) -> Vec<Base> {
    let Some(lc) = f.lc() else { return Vec::new() };
    match lc {
        Base::Ff(e) => {
            let field = e.field.clone();
            field
                .elements()
                .map(|v| Base::Ff(crate::field::FfElem { v, field: field.clone() }))
                .filter(|x| f.eval(x).is_some_and(|y| y.is_zero()))
                .collect()
        }
        Base::Rat(_) => rational_roots(f),
    }
}

fn rational_roots(f: &Poly<Base>) -> Vec<Base> {
    let mut out = Vec::new();
    let Some(v) = f.valuation() else { return out };
    if v > 0 {
        out.push(Base::Rat(BigRational::zero()));
    }
    let g = f.shift_down(v);
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    let rats: Vec<BigRational> = g.coeffs().iter().map(|c| c.as_rational().unwrap().clone()).collect();
    let l = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| (r * BigRational::from_integer(l.clone())).to_integer()).collect();
    let a0 = ints.first().unwrap().abs();
    let an = ints.last().unwrap().abs();
    let (Some(da), Some(dn)) = (divisors(&a0), divisors(&an)) else {
        return out;
    };
    let mut seen = std::collections::BTreeSet::new();
    for d in &da {
        for e in &dn {
            for sign in [1, -1] {
                let r = BigRational::new(BigInt::from(sign) * d, e.clone());
                if seen.insert(r.clone()) {
                    let x = Base::Rat(r);
                    if g.eval(&x).is_some_and(|y| y.is_zero()) {
                        out.push(x);
                    }
                }
            }
        }
    }
    out
}

/// Positive divisors by trial division; `None` when the number is too large
/// to factor this way.
fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.to_u128()?;
    if n == 0 || n > (1u128 << 80) {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d: u128 = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
        if d > 1 << 26 {
            return None;
        }
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// Candidate roots over `k(q)`.
fn symbolic_root_candidates(f: &PolyX, cfg: &FieldConfig) -> Vec<Scalar> {
    let mut out = Vec::new();
    let Some(v) = f.valuation() else { return out };
    if v > 0 {
        out.push(cfg.zero());
    }
    let g = f.shift_down(v);
    if g.degree().unwrap_or(0) == 0 {
        return out;
    }
    // clear q-denominators: coefficients become polynomials in q over k
    let sym = |s: &Scalar| match s {
        Scalar::Sym(r) => r.clone(),
        Scalar::Base(b) => Frac::constant(b.clone()),
    };
    let den_lcm = g.coeffs().iter().fold(Poly::constant(cfg.base_one()), |acc, c| {
        let d = sym(c).den().clone();
        let gcd = acc.gcd(&d);
        acc.mul(&d).div_exact(&gcd).expect("lcm")
    });
    let polys: Vec<Poly<Base>> = g
        .coeffs()
        .iter()
        .map(|c| {
            let r = sym(c);
            r.num().mul(&den_lcm.div_exact(r.den()).expect("lcm multiple"))
        })
        .collect();
    let deg = polys.len() - 1;
    let (Some(da), Some(db)) = (monic_divisors(&polys[0]), monic_divisors(&polys[deg])) else {
        return out;
    };
    let mut seen = std::collections::BTreeSet::new();
    for a in &da {
        for b in &db {
            if a.gcd(b).degree() != Some(0) {
                continue;
            }
            // sum_i F_i a^i b^(deg-i) c^i, collected by powers of q
            let terms: Vec<Poly<Base>> = (0..=deg)
                .map(|i| polys[i].mul(&a.pow(i as u32)).mul(&b.pow((deg - i) as u32)))
                .collect();
            let top = terms.iter().filter_map(|t| t.degree()).max().unwrap_or(0);
            let mut cpoly = Poly::<Base>::zero();
            for j in 0..=top {
                let pj = Poly::new(
                    terms.iter().map(|t| t.coeff(j).cloned().unwrap_or_else(|| cfg.base_one().zero_like())).collect(),
                );
                cpoly = cpoly.gcd(&pj);
            }
            if cpoly.is_zero() {
                continue;
            }
            for c in base_roots(&cpoly) {
                if c.is_zero() {
                    continue;
                }
                let r = Frac::new(a.scale(&c), b.clone()).expect("b monic");
                let s = Scalar::Sym(r);
                if seen.insert(s.clone()) {
                    out.push(s);
                }
            }
        }
    }
    out
}

/// Monic divisors built from the linear factors of `p` over the base field,
/// optionally times the factor-free remainder.
fn monic_divisors(p: &Poly<Base>) -> Option<Vec<Poly<Base>>> {
    let one = p.lc()?.one_like();
    let mut rest = p.monic();
    let mut factors: Vec<(Base, usize)> = Vec::new();
    for r in base_roots(p) {
        let lin = Poly::linear_root(&r);
        let mut k = 0;
        while let Some(qt) = rest.div_exact(&lin) {
            rest = qt;
            k += 1;
        }
        factors.push((r, k));
    }
    let combos: usize = factors.iter().map(|(_, k)| k + 1).product();
    if combos > 4096 {
        return None;
    }
    let mut out = vec![Poly::constant(one)];
    for (r, k) in &factors {
        let lin = Poly::linear_root(r);
        let mut next = Vec::new();
        for d in &out {
            let mut cur = d.clone();
            for _ in 0..=*k {
                next.push(cur.clone());
                cur = cur.mul(&lin);
            }
        }
        out = next;
    }
    if rest.degree().unwrap_or(0) > 0 {
        let with_rest: Vec<_> = out.iter().map(|d| d.mul(&rest)).collect();
        out.extend(with_rest);
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn px(cfg: &FieldConfig, cs: &[i64]) -> PolyX {
        Poly::new(cs.iter().map(|&c| cfg.scalar(c)).collect())
    }

    fn rx(cfg: &FieldConfig, num: &[i64], den: &[i64]) -> RatX {
        Frac::new(px(cfg, num), px(cfg, den)).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        let cfg = FieldConfig::rationals_symbolic();
        let a = rx(&cfg, &[1, 0, -1], &[1]);
        let b = rx(&cfg, &[0, 0, 1], &[1]);
        assert!(a.add(&b).is_one());
        let c = rx(&cfg, &[1], &[1, -1]).sub(&RatX::scalar(cfg.one()));
        assert_eq!(c, rx(&cfg, &[0, 1], &[1, -1]));
        let q = cfg.q();
        let u = Frac::new(Poly::new(vec![cfg.one()]), Poly::new(vec![cfg.one(), q.clone()])).unwrap();
        assert!(u.mul(&u.inv().unwrap()).is_one());
    }

    #[test]
    fn local_ring_predicates() {
        let cfg = FieldConfig::rationals_symbolic();
        let q = cfg.q();
        let u = Frac::new(Poly::new(vec![cfg.one()]), Poly::new(vec![cfg.one(), q])).unwrap();
        assert!(u.in_local_ring() && u.is_local_unit());
        assert_eq!(u.x_valuation(), Some(0));
        let v = rx(&cfg, &[0, 1], &[1, -1]);
        assert!(v.in_local_ring() && !v.is_local_unit());
        assert_eq!(v.x_valuation(), Some(1));
        let w = rx(&cfg, &[1], &[0, 1]);
        assert!(!w.in_local_ring());
        assert_eq!(w.x_valuation(), Some(-1));
        assert_eq!(RatX::zero(&cfg.one()).x_valuation(), None);
    }

    #[test]
    fn alpha_examples() {
        let cfg = FieldConfig::rationals_symbolic();
        let q = cfg.q();
        let g = rx(&cfg, &[1, -1, 1], &[1]);
        let expect = Frac::from_poly(
            Poly::new(vec![cfg.one(), q.neg(), q.mul(&q)]),
            &cfg.one(),
        );
        assert_eq!(g.alpha(&q, 1), expect);
        let qx = RatX::x(&cfg).mul(&RatX::scalar(q.clone()));
        assert_eq!(qx.alpha(&q, -1), RatX::x(&cfg));
        assert_eq!(g.alpha(&q, 0), g);
        assert_eq!(g.alpha(&q, 2).alpha(&q, -3), g.alpha(&q, -1));
    }

    #[test]
    fn alpha_squared_leading_coefficient() {
        // monic g of degree n+1: alpha^2(g) has leading coefficient q^(2n+2)
        let cfg = FieldConfig::rationals_symbolic();
        let q = cfg.q();
        for n in 0..4 {
            let g = Poly::from_roots(&cfg.one(), &vec![cfg.scalar(3); n + 1]);
            let a2 = poly_alpha(&g, &q, 2);
            assert_eq!(a2.lc().unwrap(), &q.pow(2 * n as u64 + 2));
        }
    }

    #[test]
    fn root_examples() {
        let cfg = FieldConfig::rationals_with_q(2);
        let cube = Poly::from_roots(&cfg.one(), &[cfg.one(), cfg.one(), cfg.one()]);
        let s = roots_in_field(&cube, &cfg);
        assert_eq!(s.roots, vec![cfg.one(); 3]);
        assert!(s.splits());
        let x2p1 = px(&cfg, &[1, 0, 1]);
        let s = roots_in_field(&x2p1, &cfg);
        assert!(s.roots.is_empty());
        assert_eq!(s.remainder, x2p1);
        let f5 = FieldConfig::prime_with_q(5, 2).unwrap();
        let s = roots_in_field(&px(&f5, &[-1, 0, 1]), &f5);
        assert_eq!(s.roots, vec![f5.scalar(1), f5.scalar(4)]);
        assert!(s.splits());
    }

    #[test]
    fn rational_roots_with_fractions() {
        let cfg = FieldConfig::rationals_with_q(2);
        let half = cfg.scalar_ratio(1, 2).unwrap();
        let f = Poly::from_roots(&cfg.one(), &[half.clone(), cfg.scalar(-3), cfg.zero()]);
        let s = roots_in_field(&f, &cfg);
        assert_eq!(s.roots.len(), 3);
        assert!(s.roots.contains(&half));
    }

    #[test]
    fn symbolic_roots() {
        let cfg = FieldConfig::rationals_symbolic();
        let q = cfg.q();
        let xi = q.inv().unwrap();
        let f = Poly::from_roots(&cfg.one(), &[xi.clone(), xi.mul(&xi), cfg.scalar(2).mul(&q)]);
        let s = roots_in_field(&f, &cfg);
        assert!(s.splits(), "{s:?}");
        assert_eq!(s.roots.len(), 3);
    }
}
