use std::cmp::Ordering;

use super::{Field, Poly};

/// Quotient of two polynomials in canonical form: coprime, monic
/// denominator, and `0 = 0/1`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Frac<F> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> Frac<F> {
    /// `None` when `den` is zero.
    pub fn new(num: Poly<F>, den: Poly<F>) -> Option<Self> {
        let lc = den.lc()?.clone();
        if num.is_zero() {
            return Some(Frac { num, den: Poly::constant(lc.one_like()) });
        }
        let g = if den.degree() == Some(0) { Poly::constant(lc.one_like()) } else { num.gcd(&den) };
        let (mut num, mut den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let inv = den.lc().expect("nonzero").inv().expect("field");
        if !inv.is_one() {
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Some(Frac { num, den })
    }

    /// From coprime parts; only the leading coefficient of `den` is fixed up.
    fn reduced(num: Poly<F>, den: Poly<F>) -> Self {
        let lc = den.lc().expect("nonzero den").clone();
        if num.is_zero() {
            return Frac { num, den: Poly::constant(lc.one_like()) };
        }
        if lc.is_one() {
            return Frac { num, den };
        }
        let inv = lc.inv().expect("field");
        Frac { num: num.scale(&inv), den: den.scale(&inv) }
    }

    pub fn from_poly(p: Poly<F>, one: &F) -> Self {
        Frac { num: p, den: Poly::constant(one.one_like()) }
    }

    pub fn constant(c: F) -> Self {
        let one = c.one_like();
        Frac { num: Poly::constant(c), den: Poly::constant(one) }
    }

    pub fn zero(one: &F) -> Self {
        Frac { num: Poly::zero(), den: Poly::constant(one.one_like()) }
    }

    /// The variable itself.
    pub fn var(one: &F) -> Self {
        Frac { num: Poly::monomial(one.one_like(), 1), den: Poly::constant(one.one_like()) }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    pub fn into_parts(self) -> (Poly<F>, Poly<F>) {
        (self.num, self.den)
    }

    pub fn is_poly(&self) -> bool {
        self.den.degree() == Some(0)
    }

    /// The constant value, if the function does not depend on the variable.
    pub fn as_constant(&self) -> Option<F> {
        if !self.is_poly() {
            return None;
        }
        match self.num.degree() {
            None => Some(self.unit_one().zero_like()),
            Some(0) => Some(self.num.coeffs()[0].clone()),
            _ => None,
        }
    }

    fn unit_one(&self) -> F {
        self.den.coeffs()[0].one_like()
    }

    /// Evaluation; `None` at a pole.
    pub fn eval(&self, x: &F) -> Option<F> {
        let d = self.den.eval(x)?;
        if d.is_zero() {
            return None;
        }
        self.num.eval_or(x).div(&d)
    }

    /// `r(c * var)`
    pub fn scale_var(&self, c: &F) -> Self {
        Frac::new(self.num.scale_var(c), self.den.scale_var(c)).expect("c is nonzero")
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Option<Frac<G>> {
        Frac::new(self.num.map(&f), self.den.map(&f))
    }
}

impl<F: Field> PartialOrd for Frac<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Frac<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.den.cmp(&other.den).then_with(|| self.num.cmp(&other.num))
    }
}

impl<F: Field> Field for Frac<F> {
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn zero_like(&self) -> Self {
        Frac::zero(&self.unit_one())
    }

    fn one_like(&self) -> Self {
        Frac::constant(self.unit_one())
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Frac::constant(self.unit_one().from_i64_like(n))
    }

    fn add(&self, rhs: &Self) -> Self {
        if self.den == rhs.den {
            return Frac::new(self.num.add(&rhs.num), self.den.clone()).expect("nonzero den");
        }
        // Henrici: only the common part of the denominators can cancel
        let g = self.den.gcd(&rhs.den);
        if g.degree() == Some(0) {
            let num = self.num.mul(&rhs.den).add(&rhs.num.mul(&self.den));
            return Frac::reduced(num, self.den.mul(&rhs.den));
        }
        let (b1, d1) = (self.den.div_exact(&g).expect("gcd"), rhs.den.div_exact(&g).expect("gcd"));
        let num = self.num.mul(&d1).add(&rhs.num.mul(&b1));
        let t = num.gcd(&g);
        if t.degree() == Some(0) {
            return Frac::reduced(num, b1.mul(&rhs.den));
        }
        Frac::reduced(num.div_exact(&t).expect("gcd"), b1.mul(&rhs.den).div_exact(&t).expect("gcd"))
    }

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return self.zero_like();
        }
        let cancel = |n: &Poly<F>, d: &Poly<F>| {
            if d.degree() == Some(0) || n.degree() == Some(0) {
                return (n.clone(), d.clone());
            }
            let g = n.gcd(d);
            (n.div_exact(&g).expect("gcd"), d.div_exact(&g).expect("gcd"))
        };
        let (a, d) = cancel(&self.num, &rhs.den);
        let (c, b) = cancel(&rhs.num, &self.den);
        Frac::reduced(a.mul(&c), b.mul(&d))
    }

    fn neg(&self) -> Self {
        Frac { num: self.num.neg(), den: self.den.clone() }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Frac::new(self.den.clone(), self.num.clone())
    }

    fn characteristic(&self) -> u64 {
        self.unit_one().characteristic()
    }
}
