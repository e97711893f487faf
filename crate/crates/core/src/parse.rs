//! Text input and output for scalars, rational functions and skew
//! polynomials.
//!
//! Grammar (whitespace is ignored, implicit multiplication is rejected):
//!
//! ```text
//! expr   := term (("+" | "-") term)*
//! term   := factor (("*" | "/") factor)*
//! factor := "-" factor | atom ("^" uint)?
//! atom   := "X" | "theta" | "θ" | "q" | uint | "(" expr ")"
//! ```
//!
//! Products are evaluated left to right in the skew ring, so `theta*X`
//! and `X*theta` differ. A divisor must be free of `theta`; `a / b` means
//! `a * b^-1`.

use std::fmt::Write as _;

use num_bigint::BigInt;
use thiserror::Error;

use crate::field::{Base, Field, FieldConfig, Poly, Scalar};
use crate::ratfunc::RatX;
use crate::skew::{SkewPoly, SkewRing};

/// Largest accepted exponent.
pub const MAX_EXPONENT: u32 = 512;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("exponent {0} exceeds the limit of {MAX_EXPONENT}")]
    ExponentTooLarge(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor involves theta")]
    NonScalarDivisor,
    #[error("divisor is not a unit of the local ring")]
    NonLocalDivisor,
    #[error("expected {0}")]
    WrongKind(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Expr {
    Num(BigInt),
    X,
    Theta,
    Q,
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Neg(Box<Expr>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Num(BigInt),
    X,
    Theta,
    Q,
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
}

fn tokenize(text: &str) -> Result<Vec<(usize, Tok)>, ParseError> {
    let mut out = Vec::new();
    let mut it = text.char_indices().peekable();
    while let Some(&(pos, ch)) = it.peek() {
        if ch.is_whitespace() {
            it.next();
            continue;
        }
        let tok = match ch {
            '+' => Tok::Plus,
            '-' | '−' => Tok::Minus,
            '*' | '·' => Tok::Star,
            '/' => Tok::Slash,
            '^' => Tok::Caret,
            '(' => Tok::LParen,
            ')' => Tok::RParen,
            'X' | 'x' => Tok::X,
            'q' => Tok::Q,
            'θ' => Tok::Theta,
            c if c.is_ascii_digit() => {
                let mut end = pos;
                while let Some(&(i, d)) = it.peek() {
                    if !d.is_ascii_digit() {
                        break;
                    }
                    end = i + 1;
                    it.next();
                }
                out.push((pos, Tok::Num(text[pos..end].parse().expect("digits"))));
                continue;
            }
            't' if text[pos..].starts_with("theta") => {
                for _ in 0.."theta".len() {
                    it.next();
                }
                out.push((pos, Tok::Theta));
                continue;
            }
            c => {
                return Err(ParseError::Syntax { pos, msg: format!("unexpected character `{c}`") });
            }
        };
        it.next();
        out.push((pos, tok));
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    i: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.i).map(|(_, t)| t)
    }

    fn pos(&self) -> usize {
        self.toks.get(self.i).map_or(self.len, |(p, _)| *p)
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ParseError> {
        Err(ParseError::Syntax { pos: self.pos(), msg: msg.into() })
    }

    fn expr(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.term()?;
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.i += 1;
                    lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
                }
                Some(Tok::Minus) => {
                    self.i += 1;
                    lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.factor()?;
        loop {
            match self.peek() {
                Some(Tok::Star) => {
                    self.i += 1;
                    lhs = Expr::Mul(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::Slash) => {
                    self.i += 1;
                    lhs = Expr::Div(Box::new(lhs), Box::new(self.factor()?));
                }
                Some(Tok::X | Tok::Theta | Tok::Q | Tok::Num(_) | Tok::LParen) => {
                    return self.err("implicit multiplication is not allowed; use `*`")
                }
                _ => return Ok(lhs),
            }
        }
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        if self.peek() == Some(&Tok::Minus) {
            self.i += 1;
            return Ok(Expr::Neg(Box::new(self.factor()?)));
        }
        let base = self.atom()?;
        if self.peek() != Some(&Tok::Caret) {
            return Ok(base);
        }
        self.i += 1;
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                let e = u32::try_from(&n)
                    .ok()
                    .filter(|&e| e <= MAX_EXPONENT)
                    .ok_or_else(|| ParseError::ExponentTooLarge(n.to_string()))?;
                self.i += 1;
                Ok(Expr::Pow(Box::new(base), e))
            }
            Some(Tok::Minus) => self.err("negative exponents are not supported"),
            _ => self.err("expected a nonnegative integer exponent"),
        }
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let tok = match self.peek() {
            Some(t) => t.clone(),
            None => return self.err("unexpected end of input"),
        };
        self.i += 1;
        match tok {
            Tok::Num(n) => Ok(Expr::Num(n)),
            Tok::X => Ok(Expr::X),
            Tok::Theta => Ok(Expr::Theta),
            Tok::Q => Ok(Expr::Q),
            Tok::LParen => {
                let e = self.expr()?;
                if self.peek() != Some(&Tok::RParen) {
                    return self.err("expected `)`");
                }
                self.i += 1;
                Ok(e)
            }
            _ => {
                self.i -= 1;
                self.err("expected a number, `X`, `theta`, `q` or `(`")
            }
        }
    }
}

pub fn parse(text: &str) -> Result<Expr, ParseError> {
    let toks = tokenize(text)?;
    let mut p = Parser { toks, i: 0, len: text.len() };
    let e = p.expr()?;
    if p.i != p.toks.len() {
        return p.err("unexpected trailing input");
    }
    Ok(e)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct EvalOptions {
    /// Reject divisors that are not units of `k[X]_(X)`.
    pub require_local: bool,
}

pub fn evaluate(expr: &Expr, ring: &SkewRing, opts: EvalOptions) -> Result<SkewPoly, ParseError> {
    let cfg = ring.config();
    Ok(match expr {
        Expr::Num(n) => SkewPoly::constant(RatX::scalar(cfg.scalar_big(n))),
        Expr::X => SkewPoly::x(cfg),
        Expr::Theta => SkewPoly::theta(cfg),
        Expr::Q => SkewPoly::constant(RatX::scalar(cfg.q())),
        Expr::Add(a, b) => evaluate(a, ring, opts)?.add(&evaluate(b, ring, opts)?),
        Expr::Sub(a, b) => evaluate(a, ring, opts)?.sub(&evaluate(b, ring, opts)?),
        Expr::Mul(a, b) => ring.mul(&evaluate(a, ring, opts)?, &evaluate(b, ring, opts)?),
        Expr::Neg(a) => evaluate(a, ring, opts)?.neg(),
        Expr::Pow(a, e) => ring.pow(&evaluate(a, ring, opts)?, *e),
        Expr::Div(a, b) => {
            let d = evaluate(b, ring, opts)?;
            let r = match d.degree() {
                None => return Err(ParseError::DivisionByZero),
                Some(0) => d.coeffs()[0].clone(),
                Some(_) => return Err(ParseError::NonScalarDivisor),
            };
            if opts.require_local && !r.is_local_unit() {
                return Err(ParseError::NonLocalDivisor);
            }
            let inv = SkewPoly::constant(r.inv().expect("nonzero"));
            ring.mul(&evaluate(a, ring, opts)?, &inv)
        }
    })
}

/// Parses and evaluates a skew polynomial.
pub fn parse_skew(text: &str, ring: &SkewRing) -> Result<SkewPoly, ParseError> {
    evaluate(&parse(text)?, ring, EvalOptions::default())
}

/// Parses an element of `k(X)`.
pub fn parse_ratx(text: &str, ring: &SkewRing) -> Result<RatX, ParseError> {
    let p = parse_skew(text, ring)?;
    match p.degree() {
        None => Ok(ring.zero_coeff()),
        Some(0) => Ok(p.coeffs()[0].clone()),
        Some(_) => Err(ParseError::WrongKind("a rational function in X (no theta)")),
    }
}

/// Parses a scalar: an expression in `q` and integers, or one of the
/// printed forms `r mod p` and `g^k in GF(p^m)`.
pub fn parse_scalar(text: &str, cfg: &FieldConfig) -> Result<Scalar, ParseError> {
    let t = text.trim();
    if let Some((lhs, rhs)) = t.split_once(" in GF(") {
        let f = cfg.finite_field().ok_or(ParseError::WrongKind("a scalar of the configured field"))?;
        let expect = format!("{}^{})", f.p(), f.degree());
        if rhs.trim() != expect {
            return Err(ParseError::WrongKind("a scalar of the configured field"));
        }
        let lhs = lhs.trim();
        if lhs == "0" {
            return Ok(cfg.zero());
        }
        let k: u64 = lhs
            .strip_prefix("g^")
            .and_then(|k| k.parse().ok())
            .ok_or(ParseError::Syntax { pos: 0, msg: "expected `g^k`".into() })?;
        return Ok(Scalar::Base(Base::Ff(crate::field::FfElem { v: f.exp(k), field: f.clone() })));
    }
    if let Some((lhs, rhs)) = t.split_once(" mod ") {
        let p: u64 = rhs.trim().parse().map_err(|_| ParseError::Syntax { pos: 0, msg: "bad modulus".into() })?;
        if cfg.characteristic() != p {
            return Err(ParseError::WrongKind("a scalar of the configured field"));
        }
        return parse_scalar(lhs, cfg);
    }
    let ring = SkewRing::new(cfg.clone());
    let r = parse_ratx(t, &ring)?;
    r.as_constant().ok_or(ParseError::WrongKind("a scalar (no X or theta)"))
}

/// `true` if `s` needs parentheses when used as a factor.
fn is_compound(s: &str) -> bool {
    s.chars().skip(1).any(|c| matches!(c, '+' | '-' | '/' | ' '))
}

/// Parenthesizes compound text.
pub fn wrap(s: &str) -> String {
    if is_compound(s) {
        format!("({s})")
    } else {
        s.to_string()
    }
}

/// Prints a polynomial in ascending powers of `var`.
pub fn format_poly<F: Field>(p: &Poly<F>, var: &str, coef: &dyn Fn(&F) -> String) -> String {
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = coef(c);
        let (neg, body) = match cs.strip_prefix('-') {
            Some(rest) if !is_compound(&cs) => (true, rest.to_string()),
            _ => (false, cs.clone()),
        };
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        let term = if mono.is_empty() {
            body
        } else if body == "1" {
            mono
        } else {
            format!("{}*{mono}", wrap(&body))
        };
        match (out.is_empty(), neg) {
            (true, false) => out.push_str(&term),
            (true, true) => {
                out.push('-');
                out.push_str(&term)
            }
            (false, false) => {
                let _ = write!(out, " + {term}");
            }
            (false, true) => {
                let _ = write!(out, " - {term}");
            }
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// A scalar as it appears inside an expression: rationals as `a/b`,
/// prime-field residues as integers, extension-field elements as powers of
/// the generator `q`, symbolic values as rational functions of `q`.
pub fn scalar_expr(s: &Scalar) -> String {
    match s {
        Scalar::Base(Base::Rat(r)) => r.to_string(),
        Scalar::Base(Base::Ff(e)) if e.field.degree() == 1 => e.v.to_string(),
        Scalar::Base(Base::Ff(e)) => match e.field.log(e.v) {
            None => "0".into(),
            Some(0) => "1".into(),
            Some(1) => "q".into(),
            Some(k) => format!("q^{k}"),
        },
        Scalar::Sym(_) => s.to_string(),
    }
}

pub fn format_ratx(r: &RatX) -> String {
    let num = format_poly(r.num(), "X", &scalar_expr);
    if r.is_poly() {
        let d = &r.den().coeffs()[0];
        if d.is_one() {
            return num;
        }
        return format!("{}/{}", wrap(&num), wrap(&scalar_expr(d)));
    }
    let den = format_poly(r.den(), "X", &scalar_expr);
    format!("{}/{}", wrap(&num), wrap(&den))
}

/// Canonical text: ascending powers of `theta`, each coefficient in
/// parentheses, e.g. `(1 - X^2) + (q*X)*theta^1`.
pub fn format_skew(p: &SkewPoly) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            if i == 0 {
                format!("({})", format_ratx(c))
            } else {
                format!("({})*theta^{i}", format_ratx(c))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// Right-coefficient form `sum theta^i * d_i`, for display only.
pub fn format_skew_right(p: &SkewPoly, ring: &SkewRing) -> String {
    let terms: Vec<String> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| {
            let d = ring.alpha(c, -(i as i64));
            if i == 0 {
                format!("({})", format_ratx(&d))
            } else {
                format!("theta^{i}*({})", format_ratx(&d))
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

/// A polynomial in `theta` with scalar coefficients.
pub fn format_theta_poly(p: &Poly<Scalar>) -> String {
    format_poly(p, "theta", &scalar_expr)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym() -> SkewRing {
        SkewRing::new(FieldConfig::rationals_symbolic())
    }

    #[test]
    fn theta_x_is_not_x_theta() {
        let ring = sym();
        let a = parse_skew("theta*X", &ring).unwrap();
        let b = parse_skew("X*theta", &ring).unwrap();
        assert_ne!(a, b);
        assert_eq!(format_skew(&a), "(q*X)*theta^1");
        let d = parse_skew("X*theta - theta*X", &ring).unwrap();
        assert_eq!(d, parse_skew("(1-q)*X*theta", &ring).unwrap());
    }

    #[test]
    fn product_expands_to_known_coefficients() {
        let ring = sym();
        let h = parse_skew("(1+X+theta+X*theta^2)*(1-X+X*theta)", &ring).unwrap();
        assert_eq!(
            format_skew(&h),
            "(1 - X^2) + (1 + (1 - q)*X + X^2)*theta^1 + ((1 + q)*X - q^2*X^2)*theta^2 + (q^2*X^2)*theta^3"
        );
    }

    #[test]
    fn zero_prints_as_zero() {
        assert_eq!(format_skew(&SkewPoly::zero()), "0");
    }

    #[test]
    fn round_trip_rational_functions() {
        let ring = sym();
        for text in ["1/(1+q*X)", "X/(1-X)", "(1/2)*X^2 - 3/q", "theta^2/(q-X)", "(q^2+1)/(q-1)*theta"] {
            let p = parse_skew(text, &ring).unwrap();
            let back = parse_skew(&format_skew(&p), &ring).unwrap();
            assert_eq!(p, back, "{text}");
        }
    }

    #[test]
    fn errors_carry_positions() {
        let ring = sym();
        assert!(matches!(parse("1 + * X"), Err(ParseError::Syntax { pos: 4, .. })));
        assert!(matches!(parse("2X"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("X^-1"), Err(ParseError::Syntax { .. })));
        assert!(matches!(parse("X^100000"), Err(ParseError::ExponentTooLarge(_))));
        assert_eq!(parse_skew("1/(X-X)", &ring), Err(ParseError::DivisionByZero));
        assert_eq!(parse_skew("1/theta", &ring), Err(ParseError::NonScalarDivisor));
        let strict = EvalOptions { require_local: true };
        assert_eq!(evaluate(&parse("1/X").unwrap(), &ring, strict), Err(ParseError::NonLocalDivisor));
        assert!(evaluate(&parse("1/(1+q*X)").unwrap(), &ring, strict).is_ok());
    }

    #[test]
    fn scalar_forms_round_trip() {
        let f7 = FieldConfig::prime_with_q(7, 3).unwrap();
        let s = f7.scalar(5);
        assert_eq!(s.to_string(), "5 mod 7");
        assert_eq!(parse_scalar(&s.to_string(), &f7).unwrap(), s);
        let gf = FieldConfig::extension_with_generator(2, 3).unwrap();
        let g5 = gf.q().pow(5);
        assert_eq!(parse_scalar(&g5.to_string(), &gf).unwrap(), g5);
        let qq = FieldConfig::rationals_symbolic();
        let r = qq.q().add(&qq.one()).div(&qq.q().sub(&qq.scalar(2))).unwrap();
        assert_eq!(parse_scalar(&r.to_string(), &qq).unwrap(), r);
        let half = FieldConfig::rationals_with_q(2).scalar_ratio(-1, 2).unwrap();
        assert_eq!(half.to_string(), "-1/2");
    }
}
