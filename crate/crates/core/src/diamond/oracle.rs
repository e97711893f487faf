//! Brute-force cross-check of the two ansätze on truncated power series.
//!
//! The unknown `t` is a polynomial of degree at most `coeff_bound` over a
//! finite field. Its coefficients are enumerated level by level, every
//! value being tried, and a partial assignment is kept when the product
//! of the two factors agrees with `h` modulo `X^prec` in every coefficient
//! that it already determines. The cofactor is computed directly from the
//! product rule, not from the master equation:
//!
//! * left: `a = h0`, `b = h1 - X t alpha(a)`, `c = h2 - X t alpha(b)`,
//!   residual `h3 - X t alpha(c)`;
//! * right: `a = h0`, `b = h1 - a t`, `c = h2 - b alpha(t)`,
//!   residual `h3 - c alpha^2(t)`.
//!
//! Every residual is divisible by a fixed power `X^v` for all `t` in
//! `k[X]_(X)` (on the left `v = min(v(h3), 1 + v(h2), 2 + v(h1), 3 + v(h0))`,
//! on the right `v = min v(h_i)`); precision `prec` means agreement modulo
//! `X^(v + prec)`, so `prec = 1` is the constraint on `t(0)` alone.
//!
//! On the right `t` is a unit by default; [`OracleOptions::unit_right`]
//! also admits `t` with `t(0) = 0`.

use serde::Serialize;

use crate::field::{FiniteField, Poly, Scalar};
use crate::ratfunc::RatX;
use crate::skew::{SkewPoly, SkewRing};

use super::master::MasterKind;
use super::solve::regime_flags;
use super::DiamondError;

#[derive(Debug, Clone)]
pub struct OracleOptions {
    pub prec: usize,
    /// Highest enumerated coefficient of `t`; defaults to `prec - 1`.
    pub coeff_bound: Option<usize>,
    /// Refuse to run when `|k|^(coeff_bound + 1)` exceeds this.
    pub space_cap: u128,
    pub node_budget: usize,
    /// How many consistent truncations to list in the report.
    pub max_listed: usize,
    /// Also count truncations agreeing with some `L f / g`, `deg f <= N`,
    /// `deg g <= N + 1`, `g(0) != 0`, to all available coefficients.
    pub rational_filter: Option<usize>,
    /// On the right, only units `t` (so that `1 + t theta` has shape `C`).
    pub unit_right: bool,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            prec: 8,
            coeff_bound: None,
            space_cap: 1_000_000_000_000_000_000,
            node_budget: 5_000_000,
            max_listed: 8,
            rational_filter: None,
            unit_right: true,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct OracleReport {
    pub ansatz: MasterKind,
    pub field: String,
    pub prec: usize,
    pub coeff_bound: usize,
    /// Number of consistent truncations.
    pub truncations: u64,
    /// A few of them, as coefficient lists `t_0, t_1, ...`.
    pub listed: Vec<Vec<u32>>,
    pub rational_consistent: Option<u64>,
    pub regime_flags: Vec<String>,
    /// `false` when the node budget ran out before the search finished.
    pub complete: bool,
}

type Series = Vec<u32>;

struct SeriesArith<'a> {
    f: &'a FiniteField,
    prec: usize,
    q: u32,
}

impl SeriesArith<'_> {
    fn mul(&self, a: &[u32], b: &[u32]) -> Series {
        let mut out = vec![0u32; self.prec];
        for (i, &x) in a.iter().enumerate().take(self.prec) {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate().take(self.prec - i) {
                out[i + j] = self.f.add(out[i + j], self.f.mul(x, y));
            }
        }
        out
    }

    fn sub(&self, a: &[u32], b: &[u32]) -> Series {
        (0..self.prec).map(|i| self.f.sub(a[i], b[i])).collect()
    }

    fn alpha(&self, a: &[u32], k: u64) -> Series {
        let c = self.f.pow(self.q, k);
        let mut s = 1u32;
        a.iter()
            .map(|&x| {
                let v = self.f.mul(x, s);
                s = self.f.mul(s, c);
                v
            })
            .collect()
    }

    fn shift(&self, a: &[u32]) -> Series {
        let mut out = vec![0u32];
        out.extend_from_slice(&a[..self.prec - 1]);
        out
    }

    fn inverse(&self, d: &[u32]) -> Option<Series> {
        let d0inv = self.f.inv(*d.first()?)?;
        let mut out = vec![0u32; self.prec];
        for k in 0..self.prec {
            let mut s = if k == 0 { 1 } else { 0 };
            for j in 1..=k {
                s = self.f.sub(s, self.f.mul(d.get(j).copied().unwrap_or(0), out[k - j]));
            }
            out[k] = self.f.mul(s, d0inv);
        }
        Some(out)
    }

    fn from_ratx(&self, r: &RatX, conv: &impl Fn(&Scalar) -> u32) -> Option<Series> {
        let pad = |p: &Poly<Scalar>| {
            let mut v: Series = p.coeffs().iter().map(conv).collect();
            v.resize(self.prec.max(v.len()), 0);
            v.truncate(self.prec);
            v
        };
        let inv = self.inverse(&pad(r.den()))?;
        Some(self.mul(&pad(r.num()), &inv))
    }

    /// `h3 - (product rule third coefficient)` for the given `t`.
    fn residual(&self, kind: MasterKind, h: &[Series; 4], t: &[u32]) -> Series {
        match kind {
            MasterKind::LeftB1 => {
                let xt = self.shift(t);
                let b = self.sub(&h[1], &self.mul(&xt, &self.alpha(&h[0], 1)));
                let c = self.sub(&h[2], &self.mul(&xt, &self.alpha(&b, 1)));
                self.sub(&h[3], &self.mul(&xt, &self.alpha(&c, 1)))
            }
            MasterKind::RightDeg1 => {
                let b = self.sub(&h[1], &self.mul(&h[0], t));
                let c = self.sub(&h[2], &self.mul(&b, &self.alpha(t, 1)));
                self.sub(&h[3], &self.mul(&c, &self.alpha(t, 2)))
            }
        }
    }
}

/// Enumerates the truncations of `t` consistent with `h` modulo `X^prec`.
pub fn truncated_oracle(h: &SkewPoly, kind: MasterKind, ring: &SkewRing, opts: &OracleOptions) -> Result<OracleReport, DiamondError> {
    let cfg = ring.config();
    let field = cfg.finite_field().filter(|_| !cfg.is_symbolic()).ok_or(DiamondError::NotFinite)?.clone();
    if h.degree() != Some(3) {
        return Err(DiamondError::WrongDegree(h.degree()));
    }
    if !h.in_s() {
        return Err(DiamondError::NotInS);
    }
    let prec = opts.prec.max(1);
    let bound = opts.coeff_bound.unwrap_or(prec - 1).min(prec - 1);
    let space = (field.size() as u128).checked_pow(bound as u32 + 1);
    if space.is_none_or(|s| s > opts.space_cap) {
        return Err(DiamondError::SearchTooLarge);
    }
    let val = |i: usize| h.coeffs()[i].x_valuation().map_or(i64::MAX / 2, |v| v);
    // residual coefficient j is fixed once t_0..t_{j - lag} are
    let (v, lag) = match kind {
        MasterKind::LeftB1 => ((0..4).map(|i| (3 - i) as i64 + val(i)).min().expect("four terms"), 1),
        MasterKind::RightDeg1 => ((0..4).map(val).min().expect("four terms"), 0),
    };
    let len = v as usize + prec;
    let conv = |s: &Scalar| s.as_ff().expect("finite field scalar").v;
    let q = conv(ring.q());
    let ar = SeriesArith { f: &field, prec: len, q };
    let hs: Vec<Series> = h.coeffs().iter().map(|c| ar.from_ratx(c, &conv).expect("in S")).collect();
    let hs: [Series; 4] = hs.try_into().expect("degree 3");

    let mut report = OracleReport {
        ansatz: kind,
        field: format!("{field:?}"),
        prec,
        coeff_bound: bound,
        truncations: 0,
        listed: Vec::new(),
        rational_consistent: opts.rational_filter.map(|_| 0),
        regime_flags: regime_flags(cfg),
        complete: true,
    };
    let mut t = vec![0u32; len];
    let mut nodes = 0usize;
    let mut stack: Vec<(usize, u32)> = vec![(0, 0)];
    // iterative DFS over (level, next value to try)
    while let Some((k, v)) = stack.pop() {
        if v >= field.size() {
            t[k] = 0;
            continue;
        }
        stack.push((k, v + 1));
        if k == 0 && v == 0 && kind == MasterKind::RightDeg1 && opts.unit_right {
            continue;
        }
        nodes += 1;
        if nodes > opts.node_budget {
            report.complete = false;
            break;
        }
        t[k] = v;
        let r = ar.residual(kind, &hs, &t);
        let upto = if k == bound { len } else { (k + lag + 1).min(len) };
        if r[..upto].iter().any(|&c| c != 0) {
            continue;
        }
        if k == bound {
            report.truncations += 1;
            if report.listed.len() < opts.max_listed {
                report.listed.push(t[..=bound].to_vec());
            }
            if let (Some(n), Some(count)) = (opts.rational_filter, report.rational_consistent.as_mut()) {
                if rational_consistent(&field, &t[..=bound], n) {
                    *count += 1;
                }
            }
        } else {
            stack.push((k + 1, 0));
        }
    }
    Ok(report)
}

/// Some `L f / g` with `deg f <= n`, `deg g <= n + 1`, `g(0) != 0` has the
/// series expansion `t` to all `t.len()` coefficients.
fn rational_consistent(field: &FiniteField, t: &[u32], n: usize) -> bool {
    let len = t.len();
    (0..=n).any(|df| {
        (0..=n + 1).any(|dg| {
            if df + 1 >= len {
                return true;
            }
            // unknowns g_0..g_{dg-1}, g_dg = 1: (g t)_i = 0 for i in df+1..len
            let rows: Vec<Vec<u32>> = (df + 1..len)
                .map(|i| {
                    let mut row: Vec<u32> = (0..dg).map(|j| if j <= i { t[i - j] } else { 0 }).collect();
                    row.push(field.neg(if dg <= i { t[i - dg] } else { 0 }));
                    row
                })
                .collect();
            match super::kernel::solve_affine(field, rows, dg) {
                None => false,
                Some((part, basis)) => {
                    // need a solution with g_0 != 0 (g_0 = 1 when dg = 0)
                    dg == 0 || part[0] != 0 || basis.iter().any(|b| b[0] != 0)
                }
            }
        })
    })
}
