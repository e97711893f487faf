use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::{Field, FieldError, FiniteField, Frac};

/// Element of a finite field, tagged with its field.
#[derive(Clone)]
pub struct FfElem {
    pub v: u32,
    pub field: Arc<FiniteField>,
}

impl PartialEq for FfElem {
    fn eq(&self, other: &Self) -> bool {
        self.v == other.v && *self.field == *other.field
    }
}
impl Eq for FfElem {}

impl Hash for FfElem {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.v.hash(state);
        self.field.p().hash(state);
        self.field.degree().hash(state);
    }
}

impl fmt::Debug for FfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{:?}", self.v, self.field)
    }
}

/// Element of a base field: `Q` or a finite field.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Base {
    Rat(BigRational),
    Ff(FfElem),
}

impl Base {
    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Base::Rat(r) => Some(r),
            Base::Ff(_) => None,
        }
    }

    pub fn as_ff(&self) -> Option<&FfElem> {
        match self {
            Base::Ff(e) => Some(e),
            Base::Rat(_) => None,
        }
    }

    fn ff_op(a: &FfElem, b: &FfElem, op: impl Fn(&FiniteField, u32, u32) -> u32) -> Base {
        assert!(*a.field == *b.field, "{}", FieldError::MixedFields);
        Base::Ff(FfElem { v: op(&a.field, a.v, b.v), field: a.field.clone() })
    }

    fn same_field(&self, other: &Base) -> bool {
        match (self, other) {
            (Base::Rat(_), Base::Rat(_)) => true,
            (Base::Ff(a), Base::Ff(b)) => *a.field == *b.field,
            _ => false,
        }
    }
}

impl PartialOrd for Base {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Base {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Base::Rat(a), Base::Rat(b)) => a.cmp(b),
            (Base::Ff(a), Base::Ff(b)) => a.v.cmp(&b.v),
            (Base::Rat(_), Base::Ff(_)) => Ordering::Less,
            (Base::Ff(_), Base::Rat(_)) => Ordering::Greater,
        }
    }
}

impl Field for Base {
    fn is_zero(&self) -> bool {
        match self {
            Base::Rat(r) => r.is_zero(),
            Base::Ff(e) => e.v == 0,
        }
    }
    fn zero_like(&self) -> Self {
        self.from_i64_like(0)
    }
    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        match self {
            Base::Rat(_) => Base::Rat(BigRational::from_integer(n.into())),
            Base::Ff(e) => Base::Ff(FfElem { v: e.field.from_i64(n), field: e.field.clone() }),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Base::Rat(a), Base::Rat(b)) => Base::Rat(a + b),
            (Base::Ff(a), Base::Ff(b)) => Base::ff_op(a, b, FiniteField::add),
            _ => panic!("{}", FieldError::MixedFields),
        }
    }
    fn sub(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Base::Rat(a), Base::Rat(b)) => Base::Rat(a - b),
            (Base::Ff(a), Base::Ff(b)) => Base::ff_op(a, b, FiniteField::sub),
            _ => panic!("{}", FieldError::MixedFields),
        }
    }
    fn mul(&self, rhs: &Self) -> Self {
        match (self, rhs) {
            (Base::Rat(a), Base::Rat(b)) => Base::Rat(a * b),
            (Base::Ff(a), Base::Ff(b)) => Base::ff_op(a, b, FiniteField::mul),
            _ => panic!("{}", FieldError::MixedFields),
        }
    }
    fn neg(&self) -> Self {
        match self {
            Base::Rat(a) => Base::Rat(-a),
            Base::Ff(e) => Base::Ff(FfElem { v: e.field.neg(e.v), field: e.field.clone() }),
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            Base::Rat(a) => (!a.is_zero()).then(|| Base::Rat(a.recip())),
            Base::Ff(e) => e.field.inv(e.v).map(|v| Base::Ff(FfElem { v, field: e.field.clone() })),
        }
    }
    fn characteristic(&self) -> u64 {
        match self {
            Base::Rat(_) => 0,
            Base::Ff(e) => e.field.p() as u64,
        }
    }
}

impl fmt::Display for Base {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Base::Rat(r) => write!(f, "{r}"),
            Base::Ff(e) if e.field.degree() == 1 => write!(f, "{} mod {}", e.v, e.field.p()),
            Base::Ff(e) => match e.field.log(e.v) {
                None => write!(f, "0 in GF({}^{})", e.field.p(), e.field.degree()),
                Some(k) => write!(f, "g^{k} in GF({}^{})", e.field.p(), e.field.degree()),
            },
        }
    }
}

/// A coefficient scalar: an element of the base field, or a rational
/// function in the symbolic `q` over it.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Scalar {
    Base(Base),
    Sym(Frac<Base>),
}

impl Scalar {
    fn lift(b: &Base) -> Frac<Base> {
        Frac::constant(b.clone())
    }

    fn binop(
        &self,
        rhs: &Self,
        base: impl Fn(&Base, &Base) -> Base,
        sym: impl Fn(&Frac<Base>, &Frac<Base>) -> Frac<Base>,
    ) -> Self {
        match (self, rhs) {
            (Scalar::Base(a), Scalar::Base(b)) => Scalar::Base(base(a, b)),
            (Scalar::Sym(a), Scalar::Sym(b)) => Scalar::Sym(sym(a, b)),
            (Scalar::Base(a), Scalar::Sym(b)) => Scalar::Sym(sym(&Self::lift(a), b)),
            (Scalar::Sym(a), Scalar::Base(b)) => Scalar::Sym(sym(a, &Self::lift(b))),
        }
    }

    fn base_sample(&self) -> Base {
        match self {
            Scalar::Base(b) => b.clone(),
            Scalar::Sym(f) => f.den().coeffs()[0].clone(),
        }
    }

    pub fn compatible(&self, other: &Scalar) -> bool {
        let kinds_match = matches!(
            (self, other),
            (Scalar::Base(_), Scalar::Base(_)) | (Scalar::Sym(_), Scalar::Sym(_))
        );
        kinds_match && self.base_sample().same_field(&other.base_sample())
    }

    fn check(&self, other: &Scalar) -> Result<(), FieldError> {
        if self.compatible(other) {
            Ok(())
        } else {
            Err(FieldError::MixedFields)
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        self.check(rhs).map(|_| self.add(rhs))
    }
    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        self.check(rhs).map(|_| self.sub(rhs))
    }
    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        self.check(rhs).map(|_| self.mul(rhs))
    }
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, FieldError> {
        self.check(rhs)?;
        self.div(rhs).ok_or(FieldError::DivisionByZero)
    }

    /// The value as an element of the base field, if it does not involve `q`.
    pub fn as_base(&self) -> Option<Base> {
        match self {
            Scalar::Base(b) => Some(b.clone()),
            Scalar::Sym(f) => f.as_constant(),
        }
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        self.as_base().and_then(|b| b.as_rational().cloned())
    }

    pub fn as_ff(&self) -> Option<FfElem> {
        self.as_base().and_then(|b| b.as_ff().cloned())
    }

    /// Substitutes a numeric value for the symbolic `q`.
    pub fn specialize_q(&self, q: &Base) -> Option<Base> {
        match self {
            Scalar::Base(b) => Some(b.clone()),
            Scalar::Sym(f) => f.eval(q),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Base(a), Scalar::Base(b)) => a.cmp(b),
            (Scalar::Sym(a), Scalar::Sym(b)) => a.cmp(b),
            (Scalar::Base(_), Scalar::Sym(_)) => Ordering::Less,
            (Scalar::Sym(_), Scalar::Base(_)) => Ordering::Greater,
        }
    }
}

impl Field for Scalar {
    fn is_zero(&self) -> bool {
        match self {
            Scalar::Base(b) => b.is_zero(),
            Scalar::Sym(f) => f.is_zero(),
        }
    }
    fn zero_like(&self) -> Self {
        self.from_i64_like(0)
    }
    fn one_like(&self) -> Self {
        self.from_i64_like(1)
    }
    fn from_i64_like(&self, n: i64) -> Self {
        match self {
            Scalar::Base(b) => Scalar::Base(b.from_i64_like(n)),
            Scalar::Sym(f) => Scalar::Sym(f.from_i64_like(n)),
        }
    }
    fn add(&self, rhs: &Self) -> Self {
        self.binop(rhs, Base::add, Frac::add)
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.binop(rhs, Base::sub, Frac::sub)
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.binop(rhs, Base::mul, Frac::mul)
    }
    fn neg(&self) -> Self {
        match self {
            Scalar::Base(b) => Scalar::Base(b.neg()),
            Scalar::Sym(f) => Scalar::Sym(f.neg()),
        }
    }
    fn inv(&self) -> Option<Self> {
        match self {
            Scalar::Base(b) => b.inv().map(Scalar::Base),
            Scalar::Sym(f) => f.inv().map(Scalar::Sym),
        }
    }
    fn characteristic(&self) -> u64 {
        self.base_sample().characteristic()
    }
}

/// Multiplicative order of `q`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QOrder {
    Finite(u64),
    Infinite,
    Symbolic,
}

impl fmt::Display for QOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QOrder::Finite(n) => write!(f, "{n}"),
            QOrder::Infinite => f.write_str("infinite"),
            QOrder::Symbolic => f.write_str("symbolic"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BaseField {
    Rationals,
    Finite(Arc<FiniteField>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QMode {
    Symbolic,
    Explicit(Base),
}

/// The working scalar field together with the value of `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldConfig {
    base: BaseField,
    q: QMode,
}

impl FieldConfig {
    pub fn new(base: BaseField, q: QMode) -> Result<Self, FieldError> {
        if let QMode::Explicit(v) = &q {
            let ok = match (&base, v) {
                (BaseField::Rationals, Base::Rat(_)) => true,
                (BaseField::Finite(f), Base::Ff(e)) => **f == *e.field,
                _ => false,
            };
            if !ok {
                return Err(FieldError::MixedFields);
            }
            if v.is_zero() {
                return Err(FieldError::InvalidConfig("q must be nonzero".into()));
            }
        }
        if let BaseField::Finite(f) = &base {
            if f.degree() > 1 {
                match &q {
                    QMode::Symbolic => {
                        return Err(FieldError::InvalidConfig(
                            "symbolic q is supported over Q and prime fields only".into(),
                        ))
                    }
                    QMode::Explicit(v) => {
                        let e = v.as_ff().expect("checked above");
                        if f.mult_order(e.v) != Some(f.size() as u64 - 1) {
                            return Err(FieldError::InvalidConfig(format!(
                                "q must generate GF({}^{})^* so that every element is a power of q",
                                f.p(),
                                f.degree()
                            )));
                        }
                    }
                }
            }
        }
        Ok(FieldConfig { base, q })
    }

    /// `Q(q)` with `q` an indeterminate.
    pub fn rationals_symbolic() -> Self {
        FieldConfig { base: BaseField::Rationals, q: QMode::Symbolic }
    }

    pub fn rationals_with_q(q: i64) -> Self {
        Self::rationals_with_q_rat(BigRational::from_integer(q.into())).expect("nonzero q")
    }

    pub fn rationals_with_q_rat(q: BigRational) -> Result<Self, FieldError> {
        Self::new(BaseField::Rationals, QMode::Explicit(Base::Rat(q)))
    }

    /// `F_p(q)` with `q` an indeterminate.
    pub fn prime_symbolic(p: u32) -> Result<Self, FieldError> {
        Self::new(BaseField::Finite(FiniteField::prime(p)?), QMode::Symbolic)
    }

    pub fn prime_with_q(p: u32, q: i64) -> Result<Self, FieldError> {
        let f = FiniteField::prime(p)?;
        let v = f.from_i64(q);
        Self::new(BaseField::Finite(f.clone()), QMode::Explicit(Base::Ff(FfElem { v, field: f })))
    }

    /// `GF(p^m)` with `q` the field's fixed primitive element.
    pub fn extension_with_generator(p: u32, m: u32) -> Result<Self, FieldError> {
        let f = FiniteField::new(p, m)?;
        let v = f.generator();
        Self::new(BaseField::Finite(f.clone()), QMode::Explicit(Base::Ff(FfElem { v, field: f })))
    }

    pub fn base(&self) -> &BaseField {
        &self.base
    }

    pub fn q_mode(&self) -> &QMode {
        &self.q
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self.q, QMode::Symbolic)
    }

    pub fn finite_field(&self) -> Option<&Arc<FiniteField>> {
        match &self.base {
            BaseField::Finite(f) => Some(f),
            BaseField::Rationals => None,
        }
    }

    pub fn characteristic(&self) -> u64 {
        match &self.base {
            BaseField::Rationals => 0,
            BaseField::Finite(f) => f.p() as u64,
        }
    }

    pub fn base_one(&self) -> Base {
        match &self.base {
            BaseField::Rationals => Base::Rat(BigRational::one()),
            BaseField::Finite(f) => Base::Ff(FfElem { v: 1, field: f.clone() }),
        }
    }

    pub fn base_from_big(&self, n: &BigInt) -> Base {
        match &self.base {
            BaseField::Rationals => Base::Rat(BigRational::from_integer(n.clone())),
            BaseField::Finite(f) => {
                let r = n.mod_floor_u32(f.p());
                Base::Ff(FfElem { v: r, field: f.clone() })
            }
        }
    }

    pub fn lift(&self, b: Base) -> Scalar {
        if self.is_symbolic() {
            Scalar::Sym(Frac::constant(b))
        } else {
            Scalar::Base(b)
        }
    }

    pub fn one(&self) -> Scalar {
        self.lift(self.base_one())
    }

    pub fn zero(&self) -> Scalar {
        self.one().zero_like()
    }

    pub fn scalar(&self, n: i64) -> Scalar {
        self.one().from_i64_like(n)
    }

    pub fn scalar_big(&self, n: &BigInt) -> Scalar {
        self.lift(self.base_from_big(n))
    }

    pub fn scalar_ratio(&self, num: i64, den: i64) -> Option<Scalar> {
        self.scalar(num).div(&self.scalar(den))
    }

    pub fn q(&self) -> Scalar {
        match &self.q {
            QMode::Symbolic => Scalar::Sym(Frac::var(&self.base_one())),
            QMode::Explicit(v) => Scalar::Base(v.clone()),
        }
    }

    /// The numeric value of `q`, if explicit.
    pub fn q_value(&self) -> Option<&Base> {
        match &self.q {
            QMode::Explicit(v) => Some(v),
            QMode::Symbolic => None,
        }
    }

    pub fn q_order(&self) -> QOrder {
        match &self.q {
            QMode::Symbolic => QOrder::Symbolic,
            QMode::Explicit(Base::Ff(e)) => QOrder::Finite(e.field.mult_order(e.v).expect("q nonzero")),
            QMode::Explicit(Base::Rat(r)) => {
                if r.is_one() {
                    QOrder::Finite(1)
                } else if (-r).is_one() {
                    QOrder::Finite(2)
                } else {
                    QOrder::Infinite
                }
            }
        }
    }

    /// Every element of the field, for finite fields with explicit `q`.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match (&self.base, &self.q) {
            (BaseField::Finite(f), QMode::Explicit(_)) => Some(
                f.elements()
                    .map(|v| Scalar::Base(Base::Ff(FfElem { v, field: f.clone() })))
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Short human-readable description such as `Q(q)` or `GF(13), q = 2`.
    pub fn describe(&self) -> String {
        let base = match &self.base {
            BaseField::Rationals => "Q".to_string(),
            BaseField::Finite(f) => format!("{f:?}"),
        };
        match &self.q {
            QMode::Symbolic => format!("{base}(q)"),
            QMode::Explicit(Base::Rat(r)) => format!("{base}, q = {r}"),
            QMode::Explicit(Base::Ff(e)) if e.field.degree() == 1 => format!("{base}, q = {}", e.v),
            QMode::Explicit(_) => format!("{base}, q = generator"),
        }
    }
}

trait ModFloorU32 {
    fn mod_floor_u32(&self, p: u32) -> u32;
}

impl ModFloorU32 for BigInt {
    fn mod_floor_u32(&self, p: u32) -> u32 {
        let m = BigInt::from(p);
        let r = ((self % &m) + &m) % &m;
        r.to_u32().expect("residue fits")
    }
}

/// Residue of a rational number modulo `p`; `None` if `p` divides the denominator.
pub fn rational_mod_p(r: &BigRational, p: u32) -> Option<u32> {
    let n = r.numer().mod_floor_u32(p) as u64;
    let d = r.denom().mod_floor_u32(p) as u64;
    if d == 0 {
        return None;
    }
    let f = FiniteField::prime(p).ok()?;
    Some(((n * f.inv(d as u32)? as u64) % p as u64) as u32)
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Base(b) => write!(f, "{b}"),
            Scalar::Sym(r) => {
                let coef = |b: &Base| match b {
                    Base::Rat(r) => r.to_string(),
                    Base::Ff(e) => e.v.to_string(),
                };
                let num = crate::parse::format_poly(r.num(), "q", &coef);
                if r.is_poly() {
                    f.write_str(&num)
                } else {
                    let den = crate::parse::format_poly(r.den(), "q", &coef);
                    write!(f, "{}/{}", crate::parse::wrap(&num), crate::parse::wrap(&den))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_times_inverse_is_one() {
        let cfg = FieldConfig::rationals_symbolic();
        let q = cfg.q();
        assert!(q.mul(&q.inv().unwrap()).is_one());
    }

    #[test]
    fn q_order_examples() {
        assert_eq!(FieldConfig::prime_with_q(5, 2).unwrap().q_order(), QOrder::Finite(4));
        assert_eq!(FieldConfig::rationals_with_q(2).q_order(), QOrder::Infinite);
        assert_eq!(FieldConfig::rationals_with_q(-1).q_order(), QOrder::Finite(2));
        assert_eq!(FieldConfig::rationals_symbolic().q_order(), QOrder::Symbolic);
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldConfig::rationals_with_q(2).scalar(3);
        let b = FieldConfig::prime_with_q(7, 2).unwrap().scalar(3);
        assert_eq!(a.checked_add(&b), Err(FieldError::MixedFields));
        let c = FieldConfig::prime_with_q(11, 2).unwrap().scalar(3);
        assert_eq!(b.checked_mul(&c), Err(FieldError::MixedFields));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let cfg = FieldConfig::prime_symbolic(3).unwrap();
        assert_eq!(cfg.q().checked_div(&cfg.zero()), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn rational_reduction() {
        let r = BigRational::new(3.into(), 4.into());
        assert_eq!(rational_mod_p(&r, 5), Some(2));
        assert_eq!(rational_mod_p(&BigRational::new(1.into(), 5.into()), 5), None);
    }

    #[test]
    fn explicit_gf_q_must_be_primitive() {
        let f = FiniteField::new(2, 2).unwrap();
        let one = Base::Ff(FfElem { v: 1, field: f.clone() });
        assert!(FieldConfig::new(BaseField::Finite(f), QMode::Explicit(one)).is_err());
        assert!(FieldConfig::extension_with_generator(2, 2).is_ok());
    }
}
