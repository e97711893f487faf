use std::cmp::Ordering;

use super::Field;

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Poly<F> {
    coeffs: Vec<F>,
}

impl<F: Field> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: F) -> Self {
        Self::new(vec![c])
    }

    /// `c * var^d`
    pub fn monomial(c: F, d: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![c.zero_like(); d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    /// `var - r`
    pub fn linear_root(r: &F) -> Self {
        Poly { coeffs: vec![r.neg(), r.one_like()] }
    }

    /// Monic polynomial with the given roots (counted with multiplicity).
    pub fn from_roots(one: &F, roots: &[F]) -> Self {
        roots
            .iter()
            .fold(Poly::constant(one.clone()), |acc, r| acc.mul(&Poly::linear_root(r)))
    }

    pub fn coeffs(&self) -> &[F] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<F> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Option<&F> {
        self.coeffs.get(i)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> Option<&F> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.lc().is_some_and(|c| c.is_one())
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Order of vanishing at zero; `None` for the zero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Divides by `var^k`, discarding lower terms.
    pub fn shift_down(&self, k: usize) -> Self {
        Poly::new(self.coeffs.iter().skip(k).cloned().collect())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        match self.coeffs.first() {
            None => Self::zero(),
            Some(c) => {
                let mut coeffs = vec![c.zero_like(); k];
                coeffs.extend(self.coeffs.iter().cloned());
                Poly { coeffs }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() { (self, rhs) } else { (rhs, self) };
        let mut coeffs = long.coeffs.clone();
        for (c, s) in coeffs.iter_mut().zip(&short.coeffs) {
            *c = c.add(s);
        }
        Poly::new(coeffs)
    }

    pub fn neg(&self) -> Self {
        Poly { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let zero = self.coeffs[0].zero_like();
        let mut out = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Poly::new(out)
    }

    pub fn scale(&self, c: &F) -> Self {
        Poly::new(self.coeffs.iter().map(|a| a.mul(c)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        match self.coeffs.first() {
            None => {
                if e == 0 {
                    panic!("0^0 of a polynomial without a coefficient field")
                }
                Self::zero()
            }
            Some(c) => (0..e).fold(Poly::constant(c.one_like()), |acc, _| acc.mul(self)),
        }
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn div_rem(&self, rhs: &Self) -> Option<(Self, Self)> {
        let d = rhs.degree()?;
        let lc_inv = rhs.lc()?.inv()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= d {
            return Some((Self::zero(), self.clone()));
        }
        let zero = lc_inv.zero_like();
        let mut quot = vec![zero.clone(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let c = rem[k + d].mul(&lc_inv);
            if c.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].sub(&c.mul(b));
            }
            quot[k] = c;
        }
        rem.truncate(d);
        Some((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, rhs: &Self) -> Option<Self> {
        self.div_rem(rhs).map(|(_, r)| r)
    }

    /// Exact quotient, `None` if `rhs` does not divide `self`.
    pub fn div_exact(&self, rhs: &Self) -> Option<Self> {
        let (q, r) = self.div_rem(rhs)?;
        r.is_zero().then_some(q)
    }

    pub fn monic(&self) -> Self {
        match self.lc().and_then(|c| c.inv()) {
            Some(i) => self.scale(&i),
            None => self.clone(),
        }
    }

    /// Monic greatest common divisor (zero iff both inputs are zero).
    pub fn gcd(&self, rhs: &Self) -> Self {
        // monic remainders keep rational coefficients from growing
        let (mut a, mut b) = (self.monic(), rhs.monic());
        while !b.is_zero() {
            let r = a.rem(&b).expect("nonzero divisor");
            a = b;
            b = r.monic();
        }
        a
    }

    pub fn eval(&self, x: &F) -> Option<F> {
        let mut it = self.coeffs.iter().rev();
        let first = it.next()?.clone();
        Some(it.fold(first, |acc, c| acc.mul(x).add(c)))
    }

    /// Evaluation that also works for the zero polynomial, given a zero.
    pub fn eval_or(&self, x: &F) -> F {
        self.eval(x).unwrap_or_else(|| x.zero_like())
    }

    /// `p(c * var)`
    pub fn scale_var(&self, c: &F) -> Self {
        let mut pw = match self.coeffs.first() {
            None => return Self::zero(),
            Some(a) => a.one_like(),
        };
        let mut out = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            out.push(a.mul(&pw));
            pw = pw.mul(c);
        }
        Poly::new(out)
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.mul(&c.from_i64_like(i as i64)))
                .collect(),
        )
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }

    /// `self^e mod modulus`
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Option<Self> {
        let one = Poly::constant(modulus.lc()?.one_like());
        let mut acc = one.rem(modulus)?;
        let mut base = self.rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus)?;
            }
        }
        Some(acc)
    }
}

impl<F: Field> PartialOrd for Poly<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<F: Field> Ord for Poly<F> {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}
