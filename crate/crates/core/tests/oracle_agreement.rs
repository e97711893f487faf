use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ore_diamond::diamond::{check_ansatz, check_monoid_commutativity, truncated_oracle, MasterKind, OracleOptions, SolveOptions, Status};
use ore_diamond::field::{Field, FieldConfig, Poly};
use ore_diamond::parse::parse_skew;
use ore_diamond::ratfunc::RatX;
use ore_diamond::reproduce::{V, W};
use ore_diamond::skew::{SkewPoly, SkewRing};

const PREC: usize = 6;

fn random_local(rng: &mut ChaCha8Rng, cfg: &FieldConfig, unit: bool) -> RatX {
    let mut num: Vec<i64> = (0..2).map(|_| rng.gen_range(0..3)).collect();
    if unit && num[0] == 0 {
        num[0] = 1;
    }
    let num = Poly::new(num.into_iter().map(|c| cfg.scalar(c)).collect());
    let den = Poly::new(vec![cfg.one(), cfg.scalar(rng.gen_range(0..3))]);
    RatX::new(num, den).unwrap()
}

/// First `len` coefficients of the expansion of `r` at `X = 0`, over `F_p`.
fn series(r: &RatX, len: usize) -> Vec<u32> {
    let v = |s: &ore_diamond::field::Scalar| s.as_ff().unwrap().v;
    let field = r.num().coeffs()[0].as_ff().unwrap().field;
    let coeff = |p: &Poly<_>, i: usize| p.coeff(i).map_or(0, v);
    let d0inv = field.inv(coeff(r.den(), 0)).unwrap();
    let mut out: Vec<u32> = Vec::with_capacity(len);
    for i in 0..len {
        // d_0 t_i = n_i - sum_{j >= 1} d_j t_{i-j}
        let mut acc = coeff(r.num(), i);
        for j in 1..=i {
            acc = field.sub(acc, field.mul(coeff(r.den(), j), out[i - j]));
        }
        out.push(field.mul(acc, d0inv));
    }
    out
}

#[test]
fn oracle_agrees_with_solver_on_planted_instances_over_f3() {
    let cfg = FieldConfig::prime_with_q(3, 2).unwrap();
    let ring = SkewRing::new(cfg.clone());
    let one = RatX::scalar(cfg.one());
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let sopts = SolveOptions { degree_bound: 1, ..Default::default() };
    let oopts = OracleOptions { prec: PREC, max_listed: usize::MAX, ..Default::default() };
    let mut done = 0;
    while done < 50 {
        let kind = if done % 2 == 0 { MasterKind::LeftB1 } else { MasterKind::RightDeg1 };
        let cofactor = SkewPoly::new(vec![
            random_local(&mut rng, &cfg, true),
            random_local(&mut rng, &cfg, false),
            random_local(&mut rng, &cfg, false),
        ]);
        let t = random_local(&mut rng, &cfg, kind == MasterKind::RightDeg1);
        let h = match kind {
            MasterKind::LeftB1 => ring.mul(&SkewPoly::new(vec![one.clone(), RatX::x(&cfg).mul(&t)]), &cofactor),
            MasterKind::RightDeg1 => ring.mul(&cofactor, &SkewPoly::new(vec![one.clone(), t.clone()])),
        };
        if h.degree() != Some(3) {
            continue;
        }
        done += 1;

        let report = check_ansatz(kind, &h, &ring, &sopts).unwrap();
        assert_eq!(report.status, Status::WitnessFound, "{}: planted instance not recovered", kind.name());
        let w = report.witness.unwrap();
        assert_eq!(ring.mul(&w.left, &w.right), h);

        let oracle = truncated_oracle(&h, kind, &ring, &oopts).unwrap();
        assert!(oracle.complete);
        assert!(oracle.truncations > 0, "{}: oracle finds nothing for a solvable instance", kind.name());
        for found in [&t, &w.t] {
            let trunc = series(found, PREC);
            assert!(oracle.listed.contains(&trunc), "{}: truncation {trunc:?} missing", kind.name());
        }
    }
}

#[test]
fn root_of_unity_regime_is_flagged_over_f5() {
    let ring = SkewRing::new(FieldConfig::prime_with_q(5, 2).unwrap());
    let h = ring.mul(&parse_skew(V, &ring).unwrap(), &parse_skew(W, &ring).unwrap());
    for kind in [MasterKind::LeftB1, MasterKind::RightDeg1] {
        let r = truncated_oracle(&h, kind, &ring, &OracleOptions { prec: 6, ..Default::default() }).unwrap();
        assert!(r.complete);
        assert!(r.regime_flags.iter().any(|f| f.contains("root-of-unity regime") && f.contains("theorem inapplicable")));
    }
    let (v, w) = (parse_skew(V, &ring).unwrap(), parse_skew(W, &ring).unwrap());
    let report = check_monoid_commutativity(&v, &w, &ring, &SolveOptions { degree_bound: 1, ..Default::default() }).unwrap();
    for side in [&report.left, &report.right] {
        assert!(side.regime_flags.iter().any(|f| f.contains("order 4")));
    }
}

#[test]
fn non_unit_right_factor_is_a_separate_regime() {
    // h = (1 + X theta)(1 + X theta): the right factor has t(0) = 0
    let ring = SkewRing::new(FieldConfig::prime_with_q(7, 3).unwrap());
    let f = parse_skew("1+X*theta", &ring).unwrap();
    let h = ring.mul(&ring.mul(&f, &f), &f);
    let base = OracleOptions { prec: 4, max_listed: usize::MAX, ..Default::default() };
    let units = truncated_oracle(&h, MasterKind::RightDeg1, &ring, &base).unwrap();
    let all = truncated_oracle(&h, MasterKind::RightDeg1, &ring, &OracleOptions { unit_right: false, ..base }).unwrap();
    assert!(units.listed.iter().all(|t| t[0] != 0));
    assert!(all.listed.contains(&vec![0, 1, 0, 0]));
    assert!(all.truncations > units.truncations);
}
