use proptest::prelude::*;

use ore_diamond::classify::normalize_and_classify;
use ore_diamond::diamond::{eliminate_left_b1, eliminate_right_deg1};
use ore_diamond::field::{Field, FieldConfig, Poly, Scalar};
use ore_diamond::parse::{format_skew, parse_skew};
use ore_diamond::presentation::{find_presentations, irreducible_presentation};
use ore_diamond::ratfunc::{PolyX, RatX};
use ore_diamond::skew::{SkewPoly, SkewRing};
use ore_diamond::spectra::{is_special_for, special_product, Speciality};

/// 0: Q with q = 2, 1: F_7 with q = 3, 2: GF(8), 3: Q with q = -1/2,
/// 4: Q(q) with q symbolic.
fn config(which: u8) -> FieldConfig {
    match which {
        0 => FieldConfig::rationals_with_q(2),
        1 => FieldConfig::prime_with_q(7, 3).unwrap(),
        2 => FieldConfig::extension_with_generator(2, 3).unwrap(),
        3 => FieldConfig::rationals_with_q_rat("-1/2".parse().unwrap()).unwrap(),
        _ => FieldConfig::rationals_symbolic(),
    }
}

fn scalar(cfg: &FieldConfig, n: i64) -> Scalar {
    match cfg.elements() {
        Some(els) => els[n.rem_euclid(els.len() as i64) as usize].clone(),
        None => cfg.scalar(n),
    }
}

/// Numerator coefficients and an optional `d` for the denominator `1 + d X`.
type RatSpec = (Vec<i64>, Option<i64>);

fn rat_spec() -> impl Strategy<Value = RatSpec> {
    (prop::collection::vec(-4i64..=4, 1..=3), prop::option::of(1i64..=3))
}

fn skew_spec(max_len: usize) -> impl Strategy<Value = Vec<RatSpec>> {
    prop::collection::vec(rat_spec(), 1..=max_len)
}

fn ratx(cfg: &FieldConfig, (num, den): &RatSpec) -> RatX {
    let num = Poly::new(num.iter().map(|&c| scalar(cfg, c)).collect());
    let den = match den {
        Some(d) => Poly::new(vec![cfg.one(), scalar(cfg, *d)]),
        None => Poly::constant(cfg.one()),
    };
    RatX::new(num, den).unwrap()
}

fn skew(cfg: &FieldConfig, spec: &[RatSpec]) -> SkewPoly {
    SkewPoly::new(spec.iter().map(|s| ratx(cfg, s)).collect())
}

/// A unit of `k[X]_(X)`: numerator with nonzero constant term.
fn unit(cfg: &FieldConfig, spec: &RatSpec) -> RatX {
    let mut spec = spec.clone();
    if scalar(cfg, spec.0[0]).is_zero() {
        spec.0[0] = 1;
    }
    ratx(cfg, &spec)
}

fn nonzero_skew(cfg: &FieldConfig, spec: &[RatSpec]) -> SkewPoly {
    let p = skew(cfg, spec);
    if p.is_zero() {
        SkewPoly::one(cfg)
    } else {
        p
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn field_axioms(which in 0u8..5, a in -20i64..20, b in -20i64..20, c in -20i64..20) {
        let cfg = config(which);
        let (a, b, c) = (scalar(&cfg, a), scalar(&cfg, b), scalar(&cfg, c).add(&cfg.q()));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert!(a.sub(&a).is_zero());
        if !c.is_zero() {
            prop_assert!(c.mul(&c.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn alpha_is_a_valuation_preserving_automorphism(which in 0u8..5, a in rat_spec(), b in rat_spec(), n in -3i64..=3) {
        let cfg = config(which);
        let q = cfg.q();
        let (a, b) = (ratx(&cfg, &a), ratx(&cfg, &b));
        prop_assert_eq!(a.mul(&b).alpha(&q, n), a.alpha(&q, n).mul(&b.alpha(&q, n)));
        prop_assert_eq!(a.add(&b).alpha(&q, n), a.alpha(&q, n).add(&b.alpha(&q, n)));
        prop_assert_eq!(a.alpha(&q, n).alpha(&q, -n), a.clone());
        prop_assert_eq!(a.alpha(&q, n).x_valuation(), a.x_valuation());
        prop_assert_eq!(a.alpha(&q, n).at_zero(), a.at_zero());
        prop_assert_eq!(a.alpha(&q, 1).alpha(&q, 1), a.alpha(&q, 2));
    }

    #[test]
    fn valuation_is_a_valuation(which in 0u8..5, a in rat_spec(), b in rat_spec()) {
        let cfg = config(which);
        let (a, b) = (ratx(&cfg, &a), ratx(&cfg, &b));
        if let (Some(va), Some(vb)) = (a.x_valuation(), b.x_valuation()) {
            prop_assert_eq!(a.mul(&b).x_valuation(), Some(va + vb));
            if let Some(vs) = a.add(&b).x_valuation() {
                prop_assert!(vs >= va.min(vb));
            }
            prop_assert_eq!(a.in_local_ring(), va >= 0);
            prop_assert_eq!(a.is_local_unit(), va == 0);
        }
    }

    #[test]
    fn skew_ring_laws(which in 0u8..4, a in skew_spec(3), b in skew_spec(3), c in skew_spec(2), r in rat_spec()) {
        let cfg = config(which);
        let ring = SkewRing::new(cfg.clone());
        let (a, b, c) = (skew(&cfg, &a), skew(&cfg, &b), skew(&cfg, &c));
        prop_assert_eq!(ring.mul(&ring.mul(&a, &b), &c), ring.mul(&a, &ring.mul(&b, &c)));
        prop_assert_eq!(ring.mul(&a, &b.add(&c)), ring.mul(&a, &b).add(&ring.mul(&a, &c)));
        prop_assert_eq!(ring.mul(&a.add(&b), &c), ring.mul(&a, &c).add(&ring.mul(&b, &c)));
        let r = ratx(&cfg, &r);
        let theta = SkewPoly::theta(&cfg);
        prop_assert_eq!(
            ring.mul(&theta, &SkewPoly::constant(r.clone())),
            ring.mul(&SkewPoly::constant(ring.alpha(&r, 1)), &theta)
        );
        if let (Some(da), Some(db)) = (a.degree(), b.degree()) {
            prop_assert_eq!(ring.mul(&a, &b).degree(), Some(da + db));
        }
    }

    #[test]
    fn parser_round_trip(which in 0u8..5, a in skew_spec(4)) {
        let cfg = config(which);
        let ring = SkewRing::new(cfg.clone());
        let a = skew(&cfg, &a);
        let text = format_skew(&a);
        prop_assert_eq!(parse_skew(&text, &ring).unwrap(), a, "{}", text);
    }

    #[test]
    fn classification_is_unit_invariant(which in 0u8..5, z in skew_spec(4), u in rat_spec()) {
        let cfg = config(which);
        let z = skew(&cfg, &z);
        prop_assume!(!z.is_zero() && z.in_s());
        let u = unit(&cfg, &u);
        let a = normalize_and_classify(&z).unwrap();
        let b = normalize_and_classify(&z.scale_left(&u)).unwrap();
        prop_assert_eq!(a.tag, b.tag);
        prop_assert_eq!(&a.normalized, &b.normalized);
        prop_assert_eq!(a.normalized.scale_left(&a.unit), z);
    }

    #[test]
    fn special_product_valuation_law(which in 0u8..5, a in rat_spec(), n in 1usize..6) {
        let cfg = config(which);
        let a = ratx(&cfg, &a);
        prop_assume!(!a.is_zero());
        let v = a.x_valuation().unwrap();
        let p = special_product(&a, n, &cfg.q()).unwrap();
        prop_assert_eq!(p.x_valuation(), Some(n as i64 * v));
    }

    #[test]
    fn special_iff_positive_valuation(which in 0u8..5, a in rat_spec(), m in 1i64..8) {
        let cfg = config(which);
        let a = ratx(&cfg, &a);
        prop_assume!(!a.is_zero() && a.in_local_ring());
        let v = a.x_valuation().unwrap();
        let verdict = is_special_for(&a, m, m as usize, &cfg.q()).unwrap();
        if v >= 1 {
            // smallest n with n v >= m
            prop_assert_eq!(verdict, Speciality::Yes(((m + v - 1) / v) as usize));
        } else {
            prop_assert_eq!(verdict, Speciality::NoUpTo(m as usize));
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn division_round_trip(which in 0u8..4, a in skew_spec(4), b in skew_spec(3)) {
        let cfg = config(which);
        let ring = SkewRing::new(cfg.clone());
        let (a, b) = (skew(&cfg, &a), nonzero_skew(&cfg, &b));
        let db = b.degree().unwrap();
        let (q, r) = ring.right_divide(&a, &b).unwrap();
        prop_assert_eq!(ring.mul(&q, &b).add(&r), a.clone());
        prop_assert!(r.degree().is_none_or(|d| d < db));
        let (q, r) = ring.left_divide(&a, &b).unwrap();
        prop_assert_eq!(ring.mul(&b, &q).add(&r), a);
        prop_assert!(r.degree().is_none_or(|d| d < db));
    }

    #[test]
    fn gcrd_lclm_degrees(which in 0u8..4, a in skew_spec(3), b in skew_spec(3), common in skew_spec(2)) {
        let cfg = config(which);
        let ring = SkewRing::new(cfg.clone());
        let common = nonzero_skew(&cfg, &common);
        let a = ring.mul(&nonzero_skew(&cfg, &a), &common);
        let b = ring.mul(&nonzero_skew(&cfg, &b), &common);
        let g = ring.gcrd(&a, &b).unwrap();
        let l = ring.lclm(&a, &b).unwrap();
        prop_assert!(g.is_monic() && l.is_monic());
        prop_assert_eq!(g.degree().unwrap() + l.degree().unwrap(), a.degree().unwrap() + b.degree().unwrap());
        for x in [&a, &b] {
            prop_assert!(ring.right_divide(x, &g).unwrap().1.is_zero());
            prop_assert!(ring.right_divide(&l, x).unwrap().1.is_zero());
        }
        prop_assert!(ring.right_divide(&g, &common).unwrap().1.is_zero());
    }

    #[test]
    fn elimination_is_sound(which in 0u8..4, t in rat_spec(), co in prop::collection::vec(rat_spec(), 3)) {
        let cfg = config(which);
        let ring = SkewRing::new(cfg.clone());
        let one = RatX::scalar(cfg.one());
        let mut coeffs: Vec<RatX> = co.iter().map(|s| ratx(&cfg, s)).collect();
        coeffs[0] = unit(&cfg, &co[0]);
        let cofactor = SkewPoly::new(coeffs);
        prop_assume!(cofactor.degree() == Some(2));
        let t = ratx(&cfg, &t);

        let h = ring.mul(&SkewPoly::new(vec![one.clone(), RatX::x(&cfg).mul(&t)]), &cofactor);
        if h.degree() == Some(3) && h.in_s() {
            let el = eliminate_left_b1(&h, &ring).unwrap();
            prop_assert!(el.master.residual(&t, &ring).unwrap().is_zero());
        }
        let u = unit(&cfg, &(vec![1], None)).mul(&t.add(&one));
        prop_assume!(u.is_local_unit());
        let h = ring.mul(&cofactor, &SkewPoly::new(vec![one, u.clone()]));
        if h.degree() == Some(3) && h.in_s() {
            let master = eliminate_right_deg1(&h, &ring).unwrap();
            prop_assert!(master.residual(&u, &ring).unwrap().is_zero());
        }
    }

    #[test]
    fn presentation_invariants(
        g_roots in prop::collection::vec(1i64..13, 1..=4),
        picks in prop::collection::vec((any::<bool>(), any::<bool>()), 4),
    ) {
        let cfg = FieldConfig::prime_with_q(13, 2).unwrap();
        let xi = cfg.scalar(2);
        let xi2 = xi.mul(&xi);
        let roots: Vec<Scalar> = g_roots.iter().map(|&r| cfg.scalar(r)).collect();
        let g: PolyX = Poly::from_roots(&cfg.one(), &roots);
        let mut f_roots = Vec::new();
        for (z, (in_a, in_b)) in roots.iter().zip(&picks) {
            if *in_a {
                f_roots.push(z.mul(&xi));
            }
            if *in_b {
                f_roots.push(z.mul(&xi2));
            }
        }
        let f: PolyX = Poly::from_roots(&cfg.one(), &f_roots);
        let ps = find_presentations(&f, &g, &xi, &cfg).unwrap();
        prop_assert!(!ps.is_empty());
        for p in &ps {
            prop_assert!(p.is_consistent(&cfg));
            prop_assert_eq!(p.f_a.mul(&p.f_b), f.clone());
        }
        prop_assert!(ps.windows(2).all(|w| w[0].overlap() <= w[1].overlap()));
        prop_assert_eq!(&irreducible_presentation(&f, &g, &xi, &cfg).unwrap(), &ps[0]);
    }
}
