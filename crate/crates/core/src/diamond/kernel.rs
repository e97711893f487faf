//! Rational-solution search over a finite field, on dense `u32`
//! polynomials (lowest degree first).
//!
//! The equation is the cleared form
//! `P1 L f a(g) a2(g) + P2 L^2 f a(f) a2(g) + P3 L^3 f a(f) a2(f) = P0 g a(g) a2(g)`
//! for `y = L f / g`, `f` and `g` monic, `g(0) != 0`, where `a` is
//! `X -> qX`. Two strategies are provided: enumeration of every
//! coefficient tuple, and power-series lifting followed by Padé
//! reconstruction. Both return exactly the tuples satisfying the identity.

use rayon::prelude::*;

use crate::field::FiniteField;

pub type FPoly = Vec<u32>;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Candidate {
    pub lambda: u32,
    pub f: FPoly,
    pub g: FPoly,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BudgetExceeded;

pub struct Kernel<'a> {
    pub field: &'a FiniteField,
    pub q: u32,
    /// `[P0, P1, P2, P3]`
    pub polys: [FPoly; 4],
}

fn trim(mut v: FPoly) -> FPoly {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

impl<'a> Kernel<'a> {
    pub fn new(field: &'a FiniteField, q: u32, polys: [FPoly; 4]) -> Self {
        let polys = polys.map(trim);
        Kernel { field, q, polys }
    }

    fn mul(&self, a: &[u32], b: &[u32]) -> FPoly {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let fld = self.field;
        let mut out = vec![0u32; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = fld.add(out[i + j], fld.mul(x, y));
            }
        }
        trim(out)
    }

    fn add_into(&self, acc: &mut FPoly, a: &[u32], c: u32) {
        if acc.len() < a.len() {
            acc.resize(a.len(), 0);
        }
        for (s, &x) in acc.iter_mut().zip(a) {
            *s = self.field.add(*s, self.field.mul(c, x));
        }
    }

    /// `a(q^k X)`
    fn alpha(&self, a: &[u32], k: u64) -> FPoly {
        let c = self.field.pow(self.q, k);
        let mut s = 1u32;
        a.iter()
            .map(|&x| {
                let v = self.field.mul(x, s);
                s = self.field.mul(s, c);
                v
            })
            .collect()
    }

    fn eval(&self, a: &[u32], x: u32) -> u32 {
        a.iter().rev().fold(0, |acc, &c| self.field.add(self.field.mul(acc, x), c))
    }

    /// Exact check of the cleared identity.
    pub fn identity_holds(&self, lambda: u32, f: &[u32], g: &[u32]) -> bool {
        let fld = self.field;
        let (f1, f2) = (self.alpha(f, 1), self.alpha(f, 2));
        let (g1, g2) = (self.alpha(g, 1), self.alpha(g, 2));
        let l2 = fld.mul(lambda, lambda);
        let l3 = fld.mul(l2, lambda);
        let mut acc = Vec::new();
        let t1 = self.mul(&self.mul(&self.polys[1], f), &self.mul(&g1, &g2));
        let ff1 = self.mul(f, &f1);
        let t2 = self.mul(&self.mul(&self.polys[2], &ff1), &g2);
        let t3 = self.mul(&self.mul(&self.polys[3], &ff1), &f2);
        let t0 = self.mul(&self.mul(&self.polys[0], g), &self.mul(&g1, &g2));
        self.add_into(&mut acc, &t1, lambda);
        self.add_into(&mut acc, &t2, l2);
        self.add_into(&mut acc, &t3, l3);
        self.add_into(&mut acc, &t0, fld.neg(1));
        acc.iter().all(|&c| c == 0)
    }

    /// Monic polynomials of degree `d`; with `unit` only those with nonzero
    /// constant term.
    fn monic_polys(&self, d: usize, unit: bool) -> Vec<FPoly> {
        let size = self.field.size() as u64;
        let total = size.pow(d as u32);
        (0..total)
            .filter_map(|mut idx| {
                let mut v = Vec::with_capacity(d + 1);
                for _ in 0..d {
                    v.push((idx % size) as u32);
                    idx /= size;
                }
                v.push(1);
                (!unit || v[0] != 0).then_some(v)
            })
            .collect()
    }

    /// Number of `(f, g)` pairs [`Self::exhaustive`] visits per `lambda`.
    pub fn exhaustive_size(&self, n: usize, m: usize) -> u128 {
        (self.field.size() as u128).pow((n + m) as u32)
    }

    /// Every `(f, g)` of degrees `(n, m)` with `g(0) != 0` (and `f(0) != 0`
    /// if `unit_f`) satisfying the identity for the given `lambda`.
    pub fn exhaustive(&self, n: usize, m: usize, lambda: u32, unit_f: bool) -> Vec<Candidate> {
        let fld = self.field;
        let fs = self.monic_polys(n, unit_f);
        let gs = self.monic_polys(m, true);
        let q1 = self.q;
        let q2 = fld.mul(q1, q1);
        let xs: Vec<u32> = fld.elements().take(6).collect();
        let shifted = |p: &FPoly| -> Vec<[u32; 3]> {
            xs.iter().map(|&x| [self.eval(p, x), self.eval(p, fld.mul(q1, x)), self.eval(p, fld.mul(q2, x))]).collect()
        };
        let pv: Vec<[u32; 4]> = xs
            .iter()
            .map(|&x| {
                let e = |k: usize| self.eval(&self.polys[k], x);
                [e(0), e(1), e(2), e(3)]
            })
            .collect();
        let gvals: Vec<Vec<[u32; 3]>> = gs.iter().map(shifted).collect();
        let ns = xs.len();
        let l2 = fld.mul(lambda, lambda);
        let l3 = fld.mul(l2, lambda);
        let mut out: Vec<Candidate> = fs
            .par_iter()
            .flat_map_iter(|f| {
                let fv = shifted(f);
                let gvals = &gvals;
                let pv = &pv;
                gs.iter().enumerate().filter_map(move |(gi, g)| {
                    let ok = (0..ns).all(|s| {
                        let [f0, f1, f2] = fv[s];
                        let [g0, g1, g2] = gvals[gi][s];
                        let [p0, p1, p2, p3] = pv[s];
                        let a = fld.mul(fld.mul(lambda, p1), fld.mul(f0, fld.mul(g1, g2)));
                        let b = fld.mul(fld.mul(l2, p2), fld.mul(fld.mul(f0, f1), g2));
                        let c = fld.mul(fld.mul(l3, p3), fld.mul(fld.mul(f0, f1), f2));
                        let d = fld.mul(p0, fld.mul(g0, fld.mul(g1, g2)));
                        fld.add(fld.add(a, b), c) == d
                    });
                    (ok && self.identity_holds(lambda, f, g))
                        .then(|| Candidate { lambda, f: f.clone(), g: g.clone() })
                })
            })
            .collect();
        out.sort();
        out
    }

    /// All prefixes `y mod X^depth` of power series satisfying the
    /// equation modulo `X^depth`. With `unit`, `y(0) != 0` is imposed.
    pub fn series_prefixes(&self, depth: usize, unit: bool, budget: usize) -> Result<Vec<FPoly>, BudgetExceeded> {
        let fld = self.field;
        let coef = |p: &FPoly, i: usize| p.get(i).copied().unwrap_or(0);
        let qpow: Vec<u32> = (0..depth.max(1) as u64).map(|k| fld.pow(self.q, k)).collect();
        let q2pow: Vec<u32> = (0..depth.max(1) as u64).map(|k| fld.pow(self.q, 2 * k)).collect();
        let mut out = Vec::new();
        let mut nodes = 0usize;
        // y, Y2 = y a(y), Y3 = y a(y) a2(y), truncated to the current length
        let mut y: Vec<u32> = Vec::with_capacity(depth);
        let mut y2: Vec<u32> = Vec::with_capacity(depth);
        let mut y3: Vec<u32> = Vec::with_capacity(depth);
        let mut next = vec![0u32; depth + 1];
        if depth == 0 {
            return Ok(vec![Vec::new()]);
        }
        loop {
            let k = y.len();
            // try the value next[k] at level k
            let mut advanced = false;
            while next[k] < fld.size() {
                let v = next[k];
                next[k] += 1;
                if k == 0 && unit && v == 0 {
                    continue;
                }
                nodes += 1;
                if nodes > budget {
                    return Err(BudgetExceeded);
                }
                y.push(v);
                let mut s2 = 0u32;
                for a in 0..=k {
                    s2 = fld.add(s2, fld.mul(y[a], fld.mul(qpow[k - a], y[k - a])));
                }
                let mut s3 = 0u32;
                for a in 0..=k {
                    for b in 0..=(k - a) {
                        let c = k - a - b;
                        let term = fld.mul(fld.mul(y[a], fld.mul(qpow[b], y[b])), fld.mul(q2pow[c], y[c]));
                        s3 = fld.add(s3, term);
                    }
                }
                y2.push(s2);
                y3.push(s3);
                let mut e = fld.neg(coef(&self.polys[0], k));
                for i in 0..=k {
                    e = fld.add(e, fld.mul(coef(&self.polys[1], i), y[k - i]));
                    e = fld.add(e, fld.mul(coef(&self.polys[2], i), y2[k - i]));
                    e = fld.add(e, fld.mul(coef(&self.polys[3], i), y3[k - i]));
                }
                if e == 0 {
                    if k + 1 == depth {
                        out.push(y.clone());
                    } else {
                        next[k + 1] = 0;
                        advanced = true;
                        break;
                    }
                }
                y.pop();
                y2.pop();
                y3.pop();
            }
            if advanced {
                continue;
            }
            // level exhausted: backtrack
            if k == 0 {
                break;
            }
            y.pop();
            y2.pop();
            y3.pop();
        }
        Ok(out)
    }

    /// Rational reconstructions `y = L f / g` with `deg f = n`,
    /// `deg g = m` consistent with the prefix (length at least `n + m + 1`),
    /// filtered by the exact identity.
    pub fn pade(&self, y: &[u32], n: usize, m: usize, unit_f: bool, cap: usize) -> Result<Vec<Candidate>, BudgetExceeded> {
        assert!(y.len() > n + m, "prefix too short");
        let fld = self.field;
        let yc = |i: isize| if i < 0 { 0 } else { y[i as usize] };
        // rows: sum_{j<m} g_j y_{i-j} = -y_{i-m}, i = n+1..=n+m
        let rows: Vec<Vec<u32>> = (n + 1..=n + m)
            .map(|i| {
                let mut r: Vec<u32> = (0..m).map(|j| yc(i as isize - j as isize)).collect();
                r.push(fld.neg(yc(i as isize - m as isize)));
                r
            })
            .collect();
        let Some((particular, basis)) = solve_affine(fld, rows, m) else {
            return Ok(Vec::new());
        };
        let size = fld.size() as u128;
        if size.checked_pow(basis.len() as u32).is_none_or(|c| c > cap as u128) {
            return Err(BudgetExceeded);
        }
        let mut out = Vec::new();
        let total = size.pow(basis.len() as u32);
        for mut idx in 0..total {
            let mut g = particular.clone();
            for b in &basis {
                let c = (idx % size) as u32;
                idx /= size;
                for (gi, bi) in g.iter_mut().zip(b) {
                    *gi = fld.add(*gi, fld.mul(c, *bi));
                }
            }
            g.push(1);
            if g[0] == 0 {
                continue;
            }
            let mut lf = vec![0u32; n + 1];
            for (i, slot) in lf.iter_mut().enumerate() {
                for (j, gj) in g.iter().enumerate().take(i + 1) {
                    *slot = fld.add(*slot, fld.mul(*gj, y[i - j]));
                }
            }
            let lambda = lf[n];
            if lambda == 0 {
                continue;
            }
            let inv = fld.inv(lambda).expect("nonzero");
            let f: FPoly = lf.iter().map(|&c| fld.mul(c, inv)).collect();
            if unit_f && f[0] == 0 {
                continue;
            }
            if self.identity_holds(lambda, &f, &g) {
                out.push(Candidate { lambda, f, g });
            }
        }
        Ok(out)
    }
}

/// Solves `rows * x = rhs` (each row is `[coeffs.., rhs]`) for `x` in
/// `F^vars`; returns a particular solution and a nullspace basis.
pub(crate) fn solve_affine(fld: &FiniteField, mut rows: Vec<Vec<u32>>, vars: usize) -> Option<(Vec<u32>, Vec<Vec<u32>>)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..vars {
        let Some(p) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, p);
        let inv = fld.inv(rows[r][c]).expect("nonzero");
        for v in rows[r].iter_mut() {
            *v = fld.mul(*v, inv);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                let pivot_row = rows[r].clone();
                for (v, pv) in rows[i].iter_mut().zip(&pivot_row) {
                    *v = fld.sub(*v, fld.mul(factor, *pv));
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| row[vars] != 0) {
        return None;
    }
    let mut particular = vec![0u32; vars];
    for (i, &c) in pivots.iter().enumerate() {
        particular[c] = rows[i][vars];
    }
    let free: Vec<usize> = (0..vars).filter(|c| !pivots.contains(c)).collect();
    let basis = free
        .iter()
        .map(|&fc| {
            let mut v = vec![0u32; vars];
            v[fc] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = fld.neg(rows[i][fc]);
            }
            v
        })
        .collect();
    Some((particular, basis))
}
