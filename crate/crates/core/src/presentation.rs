//! Presentations of a monic `f` relative to a split monic `g` and a scalar
//! `xi`: factorizations `f = f_A f_B` in which the roots of `f_A` are
//! `xi * A` and the roots of `f_B` are `xi^2 * B` for sub-multisets `A`,
//! `B` of the roots `Z_g` of `g`.
//!
//! Roots of `g` are enumerated, so `A` and `B` are really sets of indices.
//! Equal root values are interchangeable, which lets a presentation be
//! recorded per distinct value `z` as the counts `|A_z|`, `|B_z|` and the
//! overlap `|C_z| = |A_z ∩ B_z|`. Any overlap between
//! `max(0, |A_z| + |B_z| - m_z)` and `min(|A_z|, |B_z|)` is realizable,
//! where `m_z` is the multiplicity of `z` in `Z_g`.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, FieldConfig, Poly, Scalar};
use crate::parse::{format_poly, scalar_expr};
use crate::ratfunc::{roots_in_field, PolyX};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentationError {
    #[error("g does not split over the working field")]
    NotSplit,
    #[error("f and g must be monic")]
    NotMonic,
    #[error("xi must be nonzero")]
    ZeroXi,
    #[error("f admits no presentation relative to g")]
    NoPresentation,
}

/// Multisets are kept as sorted vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Presentation {
    pub xi: Scalar,
    pub zg: Vec<Scalar>,
    pub a: Vec<Scalar>,
    pub b: Vec<Scalar>,
    pub a0: Vec<Scalar>,
    pub b0: Vec<Scalar>,
    pub c: Vec<Scalar>,
    pub d: Vec<Scalar>,
    pub f_a: PolyX,
    pub f_b: PolyX,
}

impl Presentation {
    pub fn overlap(&self) -> usize {
        self.c.len()
    }

    fn order_key(&self) -> (usize, &[Scalar], &[Scalar], &[Scalar]) {
        (self.c.len(), &self.a, &self.b, &self.c)
    }

    /// Checks the defining identities: `Z_g = A_0 + B_0 + C + D`,
    /// `A = A_0 + C`, `B = B_0 + C`, and the root sets of `f_A`, `f_B`.
    pub fn is_consistent(&self, cfg: &FieldConfig) -> bool {
        let sum = |parts: &[&Vec<Scalar>]| {
            let mut v: Vec<Scalar> = parts.iter().flat_map(|p| p.iter().cloned()).collect();
            v.sort();
            v
        };
        let xi2 = self.xi.mul(&self.xi);
        let scaled = |set: &[Scalar], s: &Scalar| -> Vec<Scalar> { set.iter().map(|z| z.mul(s)).collect() };
        sum(&[&self.a0, &self.b0, &self.c, &self.d]) == self.zg
            && sum(&[&self.a0, &self.c]) == self.a
            && sum(&[&self.b0, &self.c]) == self.b
            && self.f_a == Poly::from_roots(&cfg.one(), &scaled(&self.a, &self.xi))
            && self.f_b == Poly::from_roots(&cfg.one(), &scaled(&self.b, &xi2))
    }

    pub fn describe(&self) -> String {
        let set = |v: &[Scalar]| format!("{{{}}}", v.iter().map(scalar_expr).collect::<Vec<_>>().join(", "));
        format!(
            "A0 = {}\nB0 = {}\nC  = {}\nD  = {}\nf_A = {}\nf_B = {}",
            set(&self.a0),
            set(&self.b0),
            set(&self.c),
            set(&self.d),
            format_poly(&self.f_a, "X", &scalar_expr),
            format_poly(&self.f_b, "X", &scalar_expr),
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct PresentationSummary {
    pub a0: Vec<String>,
    pub b0: Vec<String>,
    pub c: Vec<String>,
    pub d: Vec<String>,
    pub f_a: String,
    pub f_b: String,
}

impl From<&Presentation> for PresentationSummary {
    fn from(p: &Presentation) -> Self {
        let set = |v: &[Scalar]| v.iter().map(scalar_expr).collect();
        PresentationSummary {
            a0: set(&p.a0),
            b0: set(&p.b0),
            c: set(&p.c),
            d: set(&p.d),
            f_a: format_poly(&p.f_a, "X", &scalar_expr),
            f_b: format_poly(&p.f_b, "X", &scalar_expr),
        }
    }
}

fn group(values: &[Scalar]) -> BTreeMap<Scalar, usize> {
    let mut m = BTreeMap::new();
    for v in values {
        *m.entry(v.clone()).or_insert(0) += 1;
    }
    m
}

fn repeat(z: &Scalar, n: usize, out: &mut Vec<Scalar>) {
    out.extend(std::iter::repeat_n(z.clone(), n));
}

/// All presentations of `f` relative to `(g, xi)`, sorted by overlap, then
/// lexicographically by `A`, `B`, `C`. Empty when some root of `f` lies in
/// neither `xi Z_g` nor `xi^2 Z_g` (or outside the field).
pub fn find_presentations(
    f: &PolyX,
    g: &PolyX,
    xi: &Scalar,
    cfg: &FieldConfig,
) -> Result<Vec<Presentation>, PresentationError> {
    if !f.is_monic() || !g.is_monic() {
        return Err(PresentationError::NotMonic);
    }
    if xi.is_zero() {
        return Err(PresentationError::ZeroXi);
    }
    let gs = roots_in_field(g, cfg);
    if !gs.splits() {
        return Err(PresentationError::NotSplit);
    }
    let zg = group(&gs.roots);
    let fs = roots_in_field(f, cfg);
    if !fs.splits() {
        return Ok(Vec::new());
    }
    let xi_inv = xi.inv().expect("nonzero");
    let xi2_inv = xi_inv.mul(&xi_inv);
    // per distinct root r of f: multiplicity and its possible preimages
    let froots: Vec<(Scalar, usize, Option<Scalar>, Option<Scalar>)> = group(&fs.roots)
        .into_iter()
        .map(|(r, mu)| {
            let za = r.mul(&xi_inv);
            let zb = r.mul(&xi2_inv);
            let za = zg.contains_key(&za).then_some(za);
            let zb = zg.contains_key(&zb).then_some(zb);
            (r, mu, za, zb)
        })
        .collect();

    let mut count_choices: Vec<(BTreeMap<Scalar, usize>, BTreeMap<Scalar, usize>)> = Vec::new();
    let mut ka = vec![0usize; froots.len()];
    assign(&froots, 0, &mut ka, &zg, &mut count_choices);

    let mut out = Vec::new();
    for (acount, bcount) in count_choices {
        let keys: Vec<&Scalar> = zg.keys().collect();
        let ranges: Vec<(usize, usize)> = keys
            .iter()
            .map(|z| {
                let (a, b, m) = (acount.get(*z).copied().unwrap_or(0), bcount.get(*z).copied().unwrap_or(0), zg[*z]);
                ((a + b).saturating_sub(m), a.min(b))
            })
            .collect();
        let mut cz: Vec<usize> = ranges.iter().map(|r| r.0).collect();
        loop {
            out.push(build(xi, cfg, &keys, &zg, &acount, &bcount, &cz));
            // odometer over the overlap choices
            let mut i = 0;
            while i < cz.len() {
                if cz[i] < ranges[i].1 {
                    cz[i] += 1;
                    break;
                }
                cz[i] = ranges[i].0;
                i += 1;
            }
            if i == cz.len() {
                break;
            }
        }
    }
    out.sort_by(|x, y| x.order_key().cmp(&y.order_key()));
    Ok(out)
}

fn assign(
    froots: &[(Scalar, usize, Option<Scalar>, Option<Scalar>)],
    i: usize,
    ka: &mut Vec<usize>,
    zg: &BTreeMap<Scalar, usize>,
    out: &mut Vec<(BTreeMap<Scalar, usize>, BTreeMap<Scalar, usize>)>,
) {
    if i == froots.len() {
        let mut a = BTreeMap::new();
        let mut b = BTreeMap::new();
        for ((_, mu, za, zb), &k) in froots.iter().zip(ka.iter()) {
            if k > 0 {
                *a.entry(za.clone().expect("checked")).or_insert(0) += k;
            }
            if mu - k > 0 {
                *b.entry(zb.clone().expect("checked")).or_insert(0) += mu - k;
            }
        }
        let fits = |m: &BTreeMap<Scalar, usize>| m.iter().all(|(z, n)| *n <= zg[z]);
        if fits(&a) && fits(&b) {
            out.push((a, b));
        }
        return;
    }
    let (_, mu, za, zb) = &froots[i];
    for k in 0..=*mu {
        if (k > 0 && za.is_none()) || (k < *mu && zb.is_none()) {
            continue;
        }
        ka[i] = k;
        assign(froots, i + 1, ka, zg, out);
    }
}

fn build(
    xi: &Scalar,
    cfg: &FieldConfig,
    keys: &[&Scalar],
    zg: &BTreeMap<Scalar, usize>,
    acount: &BTreeMap<Scalar, usize>,
    bcount: &BTreeMap<Scalar, usize>,
    cz: &[usize],
) -> Presentation {
    let (mut a, mut b, mut a0, mut b0, mut c, mut d, mut all) = Default::default();
    for (z, &cn) in keys.iter().zip(cz) {
        let an = acount.get(*z).copied().unwrap_or(0);
        let bn = bcount.get(*z).copied().unwrap_or(0);
        let m = zg[*z];
        repeat(z, an, &mut a);
        repeat(z, bn, &mut b);
        repeat(z, an - cn, &mut a0);
        repeat(z, bn - cn, &mut b0);
        repeat(z, cn, &mut c);
        repeat(z, m + cn - an - bn, &mut d);
        repeat(z, m, &mut all);
    }
    let one = cfg.one();
    let xi2 = xi.mul(xi);
    let f_a = Poly::from_roots(&one, &a.iter().map(|z: &Scalar| z.mul(xi)).collect::<Vec<_>>());
    let f_b = Poly::from_roots(&one, &b.iter().map(|z: &Scalar| z.mul(&xi2)).collect::<Vec<_>>());
    Presentation { xi: xi.clone(), zg: all, a, b, a0, b0, c, d, f_a, f_b }
}

/// A presentation of minimal overlap `|C|`; ties are broken by the
/// lexicographically smallest `A` (then `B`).
pub fn irreducible_presentation(
    f: &PolyX,
    g: &PolyX,
    xi: &Scalar,
    cfg: &FieldConfig,
) -> Result<Presentation, PresentationError> {
    find_presentations(f, g, xi, cfg)?
        .into_iter()
        .next()
        .ok_or(PresentationError::NoPresentation)
}

/// No element of `C` equals an element of `D`.
pub fn check_irrepresentation(p: &Presentation) -> bool {
    p.c.iter().all(|c| !p.d.contains(c))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f13() -> FieldConfig {
        FieldConfig::prime_with_q(13, 2).unwrap()
    }

    fn from_roots(cfg: &FieldConfig, roots: &[i64]) -> PolyX {
        Poly::from_roots(&cfg.one(), &roots.iter().map(|&r| cfg.scalar(r)).collect::<Vec<_>>())
    }

    #[test]
    fn unique_presentation_over_f13() {
        let cfg = f13();
        let g = from_roots(&cfg, &[1, 3]);
        let f = from_roots(&cfg, &[2, 12]);
        let ps = find_presentations(&f, &g, &cfg.scalar(2), &cfg).unwrap();
        assert_eq!(ps.len(), 1);
        let p = &ps[0];
        assert_eq!(p.a, vec![cfg.scalar(1)]);
        assert_eq!(p.b, vec![cfg.scalar(3)]);
        assert!(p.c.is_empty() && p.d.is_empty());
        assert!(p.is_consistent(&cfg));
    }

    #[test]
    fn repeated_root_gives_several_presentations() {
        let cfg = FieldConfig::rationals_with_q(2);
        let xi = cfg.scalar(3);
        let g = from_roots(&cfg, &[1, 1, 1]);
        let f = from_roots(&cfg, &[3, 9]);
        let ps = find_presentations(&f, &g, &xi, &cfg).unwrap();
        assert_eq!(ps.len(), 2);
        assert!(ps.iter().all(|p| p.f_a == ps[0].f_a && p.f_b == ps[0].f_b));
        let best = irreducible_presentation(&f, &g, &xi, &cfg).unwrap();
        assert_eq!(best.overlap(), 0);
        assert!(check_irrepresentation(&best));
        assert!(!check_irrepresentation(&ps[1]));
    }

    #[test]
    fn single_root_forces_overlap() {
        let cfg = f13();
        let xi = cfg.scalar(2);
        let g = from_roots(&cfg, &[5]);
        let f = from_roots(&cfg, &[10, 20]);
        let p = irreducible_presentation(&f, &g, &xi, &cfg).unwrap();
        assert_eq!(p.c, vec![cfg.scalar(5)]);
        assert!(p.d.is_empty());
    }

    #[test]
    fn constant_f_has_empty_sets() {
        let cfg = f13();
        let g = from_roots(&cfg, &[1, 4]);
        let ps = find_presentations(&Poly::constant(cfg.one()), &g, &cfg.scalar(2), &cfg).unwrap();
        assert_eq!(ps.len(), 1);
        assert!(ps[0].a.is_empty() && ps[0].b.is_empty());
        assert_eq!(ps[0].d, ps[0].zg);
    }

    #[test]
    fn violations_and_errors() {
        let cfg = f13();
        let g = from_roots(&cfg, &[1]);
        assert!(find_presentations(&from_roots(&cfg, &[7]), &g, &cfg.scalar(2), &cfg).unwrap().is_empty());
        let nonsplit = Poly::new(vec![cfg.scalar(2), cfg.zero(), cfg.one()]);
        assert_eq!(
            find_presentations(&g, &nonsplit, &cfg.scalar(2), &cfg),
            Err(PresentationError::NotSplit)
        );
        assert_eq!(find_presentations(&g, &g, &cfg.zero(), &cfg), Err(PresentationError::ZeroXi));
        assert_eq!(
            find_presentations(&g.scale(&cfg.scalar(2)), &g, &cfg.one(), &cfg),
            Err(PresentationError::NotMonic)
        );
    }
}
