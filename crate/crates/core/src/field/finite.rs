//! Small finite fields `GF(p^m)` backed by exponent/logarithm tables.
//!
//! Elements are encoded as integers `0..p^m`: the base-`p` digits of an
//! element are its coefficients in the power basis of a fixed primitive
//! element. For `m = 1` the encoding is the residue itself.

use std::fmt;
use std::sync::Arc;

use super::FieldError;

/// Largest field size for which tables are built.
pub const MAX_FIELD_SIZE: u32 = 1 << 20;

pub struct FiniteField {
    p: u32,
    m: u32,
    size: u32,
    /// Monic modulus of the primitive element, lowest degree first (length `m + 1`).
    modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.m == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.m)
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m
    }
}
impl Eq for FiniteField {}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FiniteField {
    pub fn new(p: u32, m: u32) -> Result<Arc<Self>, FieldError> {
        if !is_prime(p as u64) {
            return Err(FieldError::NotPrime(p as u64));
        }
        if m == 0 {
            return Err(FieldError::InvalidConfig("extension degree must be at least 1".into()));
        }
        let size = (p as u64)
            .checked_pow(m)
            .filter(|s| *s <= MAX_FIELD_SIZE as u64)
            .ok_or_else(|| FieldError::InvalidConfig(format!("GF({p}^{m}) exceeds table limit")))?
            as u32;
        if m == 1 {
            let g = primitive_root(p);
            let mut exp = Vec::with_capacity(size as usize - 1);
            let mut log = vec![0u32; size as usize];
            let mut x = 1u64;
            for i in 0..size - 1 {
                exp.push(x as u32);
                log[x as usize] = i;
                x = x * g as u64 % p as u64;
            }
            let modulus = vec![(p - g) % p, 1];
            return Ok(Arc::new(FiniteField { p, m, size, modulus, exp, log }));
        }
        // smallest primitive modulus by integer encoding of the low coefficients
        for enc in 1..size {
            let mut modulus = to_digits(enc, p, m);
            if modulus[0] == 0 {
                continue;
            }
            modulus.push(1);
            if let Some((exp, log)) = build_tables(p, m, size, &modulus) {
                return Ok(Arc::new(FiniteField { p, m, size, modulus, exp, log }));
            }
        }
        unreachable!("every finite field has a primitive element")
    }

    pub fn prime(p: u32) -> Result<Arc<Self>, FieldError> {
        Self::new(p, 1)
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }
    #[inline]
    pub fn degree(&self) -> u32 {
        self.m
    }
    #[inline]
    pub fn size(&self) -> u32 {
        self.size
    }
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The fixed primitive element.
    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.m == 1 {
            let s = a + b;
            if s >= self.p {
                s - self.p
            } else {
                s
            }
        } else {
            let (mut a, mut b, mut out, mut place) = (a, b, 0u32, 1u32);
            for _ in 0..self.m {
                let d = (a % self.p + b % self.p) % self.p;
                out += d * place;
                place *= self.p;
                a /= self.p;
                b /= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.m == 1 {
            if a == 0 {
                0
            } else {
                self.p - a
            }
        } else {
            let (mut a, mut out, mut place) = (a, 0u32, 1u32);
            for _ in 0..self.m {
                let d = a % self.p;
                out += ((self.p - d) % self.p) * place;
                place *= self.p;
                a /= self.p;
            }
            out
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.m == 1 {
            return ((a as u64 * b as u64) % self.p as u64) as u32;
        }
        let n = self.size - 1;
        let e = self.log[a as usize] + self.log[b as usize];
        self.exp[(if e >= n { e - n } else { e }) as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.size - 1;
        let l = self.log[a as usize];
        Some(self.exp[((n - l) % n) as usize])
    }

    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.size - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// `a^e` for a possibly negative exponent; `None` for `0^e` with `e < 0`.
    pub fn pow_i(&self, a: u32, e: i64) -> Option<u32> {
        if e >= 0 {
            Some(self.pow(a, e as u64))
        } else {
            self.inv(a).map(|i| self.pow(i, e.unsigned_abs()))
        }
    }

    pub fn from_i64(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    /// Discrete logarithm with respect to [`Self::generator`].
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.size as u64 - 1)) as usize]
    }

    pub fn mult_order(&self, a: u32) -> Option<u64> {
        let l = self.log(a)? as u64;
        let n = self.size as u64 - 1;
        Some(n / num_integer::gcd(l, n))
    }

    pub fn frobenius(&self, a: u32) -> u32 {
        self.pow(a, self.p as u64)
    }

    /// Coefficients of `a` in the power basis of the generator.
    pub fn digits(&self, a: u32) -> Vec<u32> {
        to_digits(a, self.p, self.m)
    }

    pub fn from_digits(&self, digits: &[u32]) -> u32 {
        digits.iter().rev().fold(0, |acc, d| acc * self.p + d % self.p)
    }

    pub fn is_square(&self, a: u32) -> bool {
        if a == 0 || self.p == 2 {
            return true;
        }
        self.log[a as usize].is_multiple_of(2)
    }

    pub fn elements(&self) -> impl Iterator<Item = u32> {
        0..self.size
    }
}

fn to_digits(mut a: u32, p: u32, m: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(m as usize);
    for _ in 0..m {
        out.push(a % p);
        a /= p;
    }
    out
}

fn primitive_root(p: u32) -> u32 {
    if p == 2 {
        return 1;
    }
    let n = (p - 1) as u64;
    let mut factors = Vec::new();
    let mut r = n;
    let mut d = 2;
    while d * d <= r {
        if r.is_multiple_of(d) {
            factors.push(d);
            while r.is_multiple_of(d) {
                r /= d;
            }
        }
        d += 1;
    }
    if r > 1 {
        factors.push(r);
    }
    let powmod = |mut b: u64, mut e: u64| {
        let mut acc = 1u64;
        b %= p as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * b % p as u64;
            }
            b = b * b % p as u64;
            e >>= 1;
        }
        acc
    };
    (2..p)
        .find(|&g| factors.iter().all(|f| powmod(g as u64, n / f) != 1))
        .expect("prime fields have primitive roots")
}

/// Builds exp/log tables for the power basis of a root of `modulus`; `None`
/// unless that root is primitive.
fn build_tables(p: u32, m: u32, size: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let n = size - 1;
    let mut exp = Vec::with_capacity(n as usize);
    let mut log = vec![u32::MAX; size as usize];
    let mut cur = vec![0u32; m as usize];
    cur[0] = 1;
    for i in 0..n {
        let enc = cur.iter().rev().fold(0u32, |acc, d| acc * p + d);
        if log[enc as usize] != u32::MAX {
            return None;
        }
        log[enc as usize] = i;
        exp.push(enc);
        // multiply by the root: shift up, reduce the top coefficient
        let top = cur[m as usize - 1];
        for j in (1..m as usize).rev() {
            cur[j] = (cur[j - 1] + p - (top * modulus[j]) % p) % p;
        }
        cur[0] = (p - (top * modulus[0]) % p) % p;
    }
    let back = cur.iter().rev().fold(0u32, |acc, d| acc * p + d);
    (back == 1).then_some((exp, log))
}
