//! Shape classification of elements of `S`.
//!
//! Every `z` in `S` is uniquely `f + X s` with `f` a polynomial in `theta`
//! over `k` (the reduction of `z` modulo `X`) and `s` in `S`. After
//! multiplying by a unit of `k[X]_(X)` a nonzero `z` falls into one of the
//! shapes below. The tags describe the normalized *shape* only: a tag of
//! `B` or `C` does not certify that the element is irreducible.
//!
//! | tag | normalized form |
//! |-----|-----------------|
//! | `A` | `X` or `theta` |
//! | `B` | `1 + X s` with `s` of positive `theta`-degree |
//! | `C` | `f + X s` with `f` monic of positive degree, `z != theta` |
//! | `Unit` | a unit of `k[X]_(X)` |
//! | `Unnormalized` | `X` divides `z` and `z` is not `X` up to a unit |

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::field::{Field, Poly, Scalar};
use crate::ratfunc::RatX;
use crate::skew::SkewPoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum TypeTag {
    A,
    B,
    C,
    Unit,
    Zero,
    Unnormalized,
}

impl fmt::Display for TypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            TypeTag::A => "A",
            TypeTag::B => "B",
            TypeTag::C => "C",
            TypeTag::Unit => "unit",
            TypeTag::Zero => "zero",
            TypeTag::Unnormalized => "unnormalized",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("element is zero")]
    Zero,
    #[error("element has a coefficient outside k[X]_(X)")]
    NotInS,
}

/// `z = f + X s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub f: Poly<Scalar>,
    pub s: SkewPoly,
}

pub fn decompose(z: &SkewPoly) -> Result<Decomposition, ClassifyError> {
    if !z.in_s() {
        return Err(ClassifyError::NotInS);
    }
    let mut f = Vec::with_capacity(z.coeffs().len());
    let mut s = Vec::with_capacity(z.coeffs().len());
    for c in z.coeffs() {
        let c0 = c.at_zero().expect("in local ring");
        s.push(c.sub(&RatX::scalar(c0.clone())).div_x_pow(1));
        f.push(c0);
    }
    Ok(Decomposition { f: Poly::new(f), s: SkewPoly::new(s) })
}

/// `z = unit * normalized`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    pub unit: RatX,
    pub normalized: SkewPoly,
    pub tag: TypeTag,
}

/// Normalizes `z` by a unit of `k[X]_(X)` and reports its shape.
///
/// The unit is chosen canonically so that multiplying `z` by any unit of
/// `k[X]_(X)` leaves `normalized` unchanged: for shape `B` the `theta^0`
/// coefficient becomes `1`, for shape `C` the coefficient at
/// `theta^(deg f)` becomes `1`, and for shape `A` the single coefficient
/// becomes `X` or `1`.
pub fn normalize_and_classify(z: &SkewPoly) -> Result<Classification, ClassifyError> {
    if z.is_zero() {
        return Err(ClassifyError::Zero);
    }
    let Decomposition { f, s: _ } = decompose(z)?;
    let deg_z = z.degree().expect("nonzero");
    let by = |unit: RatX, tag| {
        let normalized = z.scale_left(&unit.inv().expect("unit"));
        Classification { unit, normalized, tag }
    };
    match f.degree() {
        None => {
            let c0 = &z.coeffs()[0];
            if deg_z == 0 && c0.x_valuation() == Some(1) {
                Ok(by(c0.div_x_pow(1), TypeTag::A))
            } else {
                let unit = z.lc().expect("nonzero").one_like();
                Ok(Classification { unit, normalized: z.clone(), tag: TypeTag::Unnormalized })
            }
        }
        Some(0) => {
            let u = z.coeffs()[0].clone();
            let tag = if deg_z == 0 { TypeTag::Unit } else { TypeTag::B };
            Ok(by(u, tag))
        }
        Some(d) => {
            let u = z.coeffs()[d].clone();
            let is_theta = d == 1 && deg_z == 1 && z.coeffs()[0].is_zero();
            Ok(by(u, if is_theta { TypeTag::A } else { TypeTag::C }))
        }
    }
}

/// Shape of any element, `Zero` and `Unnormalized` included; elements
/// outside `S` are reported as `Unnormalized`.
pub fn shape(z: &SkewPoly) -> TypeTag {
    match normalize_and_classify(z) {
        Ok(c) => c.tag,
        Err(ClassifyError::Zero) => TypeTag::Zero,
        Err(ClassifyError::NotInS) => TypeTag::Unnormalized,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::FieldConfig;
    use crate::parse::parse_skew;
    use crate::skew::SkewRing;

    fn ring() -> SkewRing {
        SkewRing::new(FieldConfig::rationals_symbolic())
    }

    fn p(text: &str) -> SkewPoly {
        parse_skew(text, &ring()).unwrap()
    }

    #[test]
    fn decompositions() {
        let cfg = FieldConfig::rationals_symbolic();
        let one = cfg.one();
        let d = decompose(&p("1-X+X*theta")).unwrap();
        assert_eq!(d.f, Poly::constant(one.clone()));
        assert_eq!(d.s, p("-1+theta"));
        let d = decompose(&p("1+X+theta+X*theta^2")).unwrap();
        assert_eq!(d.f, Poly::new(vec![one.clone(), one.clone()]));
        assert_eq!(d.s, p("1+theta^2"));
        let d = decompose(&p("X")).unwrap();
        assert!(d.f.is_zero());
        assert_eq!(d.s, p("1"));
        assert_eq!(decompose(&p("theta/X")), Err(ClassifyError::NotInS));
    }

    #[test]
    fn tags() {
        assert_eq!(shape(&p("theta")), TypeTag::A);
        assert_eq!(shape(&p("(2+X)*X")), TypeTag::A);
        assert_eq!(shape(&p("1-X+X*theta")), TypeTag::B);
        assert_eq!(shape(&p("1+X+theta+X*theta^2")), TypeTag::C);
        assert_eq!(shape(&p("2+X")), TypeTag::Unit);
        assert_eq!(shape(&p("X^2")), TypeTag::Unnormalized);
        assert_eq!(shape(&p("theta+X")), TypeTag::C);
        assert_eq!(shape(&SkewPoly::zero()), TypeTag::Zero);
    }

    #[test]
    fn unit_is_split_off() {
        let c = normalize_and_classify(&p("(1+X)*(1+X*theta)")).unwrap();
        assert_eq!(c.tag, TypeTag::B);
        assert_eq!(c.unit, p("1+X").coeffs()[0]);
        assert_eq!(c.normalized, p("1+X*theta"));
    }

    #[test]
    fn normalization_is_unit_invariant() {
        let r = ring();
        for z in ["1-X+X*theta", "1+X+theta+X*theta^2", "X", "theta", "3*theta^2+X*theta", "2+X"] {
            let z = p(z);
            let a = normalize_and_classify(&z).unwrap();
            let u = p("(1+q*X)/(2-X)");
            let b = normalize_and_classify(&r.mul(&u, &z)).unwrap();
            assert_eq!(a.tag, b.tag);
            assert_eq!(a.normalized, b.normalized);
            assert_eq!(r.mul(&SkewPoly::constant(a.unit.clone()), &a.normalized), z);
        }
    }

    #[test]
    fn errors() {
        assert_eq!(normalize_and_classify(&SkewPoly::zero()), Err(ClassifyError::Zero));
        assert_eq!(normalize_and_classify(&p("1/X")), Err(ClassifyError::NotInS));
    }
}
