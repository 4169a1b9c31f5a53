//! Displayable radical expressions, and a field wrapper that records them.
//!
//! A [`RadicalExpr`] is an immutable tree over integer and rational literals,
//! `+`, unary `-`, `*`, `/`, `sqrt`, `cbrt` and powers of `omega`. Every node
//! caches its complex value under principal branches, so `sqrt(x)` always
//! means the principal root of the value of `x`. Whenever a backend picks a
//! different root, [`Traced`] records the choice explicitly as `-sqrt(x)` or
//! `omega^k*cbrt(x)`; evaluating the tree then reproduces the backend value.
//!
//! Rendering is unambiguous and [`RadicalExpr::parse`] inverts it exactly.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use thiserror::Error;

use crate::complex::{ccbrt_principal, csqrt_principal, omega_pow};
use crate::field::{CbrtField, Field, FieldError, SqrtField};
use crate::rational::BigRational;

#[derive(Clone, Debug, PartialEq)]
pub enum ExprKind {
    Int(BigInt),
    /// Non-integer rational literal in lowest terms.
    Rat(BigRational),
    /// Inexact complex literal, used for float coefficients.
    Approx(Complex64),
    Add(RadicalExpr, RadicalExpr),
    Neg(RadicalExpr),
    Mul(RadicalExpr, RadicalExpr),
    Div(RadicalExpr, RadicalExpr),
    Sqrt(RadicalExpr),
    Cbrt(RadicalExpr),
    /// `omega^k` with `k` in `{1, 2}`.
    OmegaPow(u8),
}

#[derive(Debug)]
struct ExprNode {
    kind: ExprKind,
    value: Complex64,
}

#[derive(Clone)]
pub struct RadicalExpr(Arc<ExprNode>);

impl PartialEq for RadicalExpr {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.kind == other.0.kind
    }
}

impl fmt::Debug for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn shallow_value(kind: &ExprKind, child: impl Fn(&RadicalExpr) -> Complex64) -> Complex64 {
    match kind {
        ExprKind::Int(n) => Complex64::new(BigRational::from_integer(n.clone()).to_f64(), 0.0),
        ExprKind::Rat(q) => Complex64::new(q.to_f64(), 0.0),
        ExprKind::Approx(z) => *z,
        ExprKind::Add(a, b) => child(a) + child(b),
        ExprKind::Neg(a) => -child(a),
        ExprKind::Mul(a, b) => child(a) * child(b),
        ExprKind::Div(a, b) => child(a) / child(b),
        ExprKind::Sqrt(a) => csqrt_principal(child(a)),
        ExprKind::Cbrt(a) => ccbrt_principal(child(a)),
        ExprKind::OmegaPow(k) => omega_pow(*k),
    }
}

impl RadicalExpr {
    fn make(kind: ExprKind) -> Self {
        let value = shallow_value(&kind, |e| e.value());
        RadicalExpr(Arc::new(ExprNode { kind, value }))
    }

    pub fn kind(&self) -> &ExprKind {
        &self.0.kind
    }

    /// Cached principal-branch value.
    pub fn value(&self) -> Complex64 {
        self.0.value
    }

    /// Recomputes the value from the leaves, ignoring cached values.
    pub fn eval(&self) -> Complex64 {
        shallow_value(self.kind(), |e| e.eval())
    }

    pub fn literal(q: BigRational) -> Self {
        if q.is_integer() {
            Self::make(ExprKind::Int(q.numer().clone()))
        } else {
            Self::make(ExprKind::Rat(q))
        }
    }

    pub fn integer(n: i64) -> Self {
        Self::make(ExprKind::Int(BigInt::from(n)))
    }

    pub fn approx(z: Complex64) -> Self {
        Self::make(ExprKind::Approx(z))
    }

    pub fn omega_pow(k: u8) -> Self {
        match k % 3 {
            0 => Self::integer(1),
            k => Self::make(ExprKind::OmegaPow(k)),
        }
    }

    pub fn as_literal(&self) -> Option<BigRational> {
        match self.kind() {
            ExprKind::Int(n) => Some(BigRational::from_integer(n.clone())),
            ExprKind::Rat(q) => Some(q.clone()),
            _ => None,
        }
    }

    fn is_literal(&self, v: i64) -> bool {
        matches!(self.kind(), ExprKind::Int(n) if *n == BigInt::from(v))
    }

    pub fn add(a: Self, b: Self) -> Self {
        if let (Some(x), Some(y)) = (a.as_literal(), b.as_literal()) {
            return Self::literal(x + y);
        }
        if a.is_literal(0) {
            return b;
        }
        if b.is_literal(0) {
            return a;
        }
        Self::make(ExprKind::Add(a, b))
    }

    pub fn neg(a: Self) -> Self {
        if let Some(x) = a.as_literal() {
            return Self::literal(-x);
        }
        if let ExprKind::Neg(x) = a.kind() {
            return x.clone();
        }
        Self::make(ExprKind::Neg(a))
    }

    pub fn sub(a: Self, b: Self) -> Self {
        Self::add(a, Self::neg(b))
    }

    pub fn mul(a: Self, b: Self) -> Self {
        if let (Some(x), Some(y)) = (a.as_literal(), b.as_literal()) {
            return Self::literal(x * y);
        }
        if a.is_literal(0) || b.is_literal(0) {
            return Self::integer(0);
        }
        if a.is_literal(1) {
            return b;
        }
        if b.is_literal(1) {
            return a;
        }
        if let (ExprKind::OmegaPow(j), ExprKind::OmegaPow(k)) = (a.kind(), b.kind()) {
            return Self::omega_pow(j + k);
        }
        if let ExprKind::Div(one, y) = b.kind() {
            if one.is_literal(1) {
                return Self::div(a, y.clone());
            }
        }
        // x * (1/n) reads as x/n
        for (x, y) in [(&a, &b), (&b, &a)] {
            if let ExprKind::Rat(q) = y.kind() {
                if q.numer() == &BigInt::from(1) {
                    return Self::div(x.clone(), Self::make(ExprKind::Int(q.denom().clone())));
                }
            }
        }
        Self::make(ExprKind::Mul(a, b))
    }

    pub fn div(a: Self, b: Self) -> Self {
        if let (Some(x), Some(y)) = (a.as_literal(), b.as_literal()) {
            if let Ok(q) = x.checked_div(&y) {
                return Self::literal(q);
            }
        }
        if a.is_literal(0) {
            return Self::integer(0);
        }
        if b.is_literal(1) {
            return a;
        }
        Self::make(ExprKind::Div(a, b))
    }

    pub fn inverse(a: Self) -> Self {
        Self::div(Self::integer(1), a)
    }

    pub fn sqrt(a: Self) -> Self {
        Self::make(ExprKind::Sqrt(a))
    }

    pub fn cbrt(a: Self) -> Self {
        Self::make(ExprKind::Cbrt(a))
    }

    pub fn parse(text: &str) -> Result<Self, ExprParseError> {
        let mut p = ExprParser { s: text.as_bytes(), pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(e)
    }
}

// Binding strength, weakest first. Negative literals are only bare at the top.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Top,
    Sum,
    Product,
    Atom,
}

fn prec(e: &RadicalExpr) -> Prec {
    match e.kind() {
        ExprKind::Int(n) if n.sign() == num_bigint::Sign::Minus => Prec::Top,
        ExprKind::Rat(q) if q.is_negative() => Prec::Top,
        ExprKind::Add(..) => Prec::Sum,
        ExprKind::Rat(_) | ExprKind::Neg(_) | ExprKind::Mul(..) | ExprKind::Div(..) => Prec::Product,
        _ => Prec::Atom,
    }
}

fn render(e: &RadicalExpr, need: Prec) -> String {
    if prec(e) < need {
        return format!("({})", bare(e));
    }
    bare(e)
}

fn operand(e: &RadicalExpr) -> String {
    let s = render(e, Prec::Product);
    if s.starts_with('-') {
        format!("({s})")
    } else {
        s
    }
}

fn bare(e: &RadicalExpr) -> String {
    match e.kind() {
        ExprKind::Int(n) => n.to_string(),
        ExprKind::Rat(q) => q.to_string(),
        ExprKind::Approx(z) => format!("approx({:?}, {:?})", z.re, z.im),
        ExprKind::Add(a, b) => match b.kind() {
            ExprKind::Neg(x) => format!("{} - {}", render(a, Prec::Sum), operand(x)),
            _ => format!("{} + {}", render(a, Prec::Sum), operand(b)),
        },
        ExprKind::Neg(a) => format!("-{}", render(a, Prec::Atom)),
        ExprKind::Mul(a, b) => format!("{}*{}", render(a, Prec::Product), render(b, Prec::Atom)),
        ExprKind::Div(a, b) => format!("{}/{}", render(a, Prec::Product), render(b, Prec::Atom)),
        ExprKind::Sqrt(a) => format!("sqrt({})", bare(a)),
        ExprKind::Cbrt(a) => format!("cbrt({})", bare(a)),
        ExprKind::OmegaPow(1) => "omega".to_string(),
        ExprKind::OmegaPow(k) => format!("omega^{k}"),
    }
}

impl fmt::Display for RadicalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bare(self))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("{message} at offset {offset}")]
pub struct ExprParseError {
    pub offset: usize,
    pub message: String,
}

struct ExprParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> ExprParseError {
        ExprParseError {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, c: u8) -> bool {
        if self.peek() == Some(c) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: u8) -> Result<(), ExprParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.error(&format!("expected `{}`", c as char)))
        }
    }

    fn expr(&mut self) -> Result<RadicalExpr, ExprParseError> {
        let mut acc = self.term()?;
        loop {
            if self.eat(b'+') {
                acc = RadicalExpr::add(acc, self.term()?);
            } else if self.eat(b'-') {
                acc = RadicalExpr::sub(acc, self.term()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<RadicalExpr, ExprParseError> {
        let mut acc = self.unary()?;
        loop {
            if self.eat(b'*') {
                acc = RadicalExpr::mul(acc, self.atom()?);
            } else if self.eat(b'/') {
                acc = RadicalExpr::div(acc, self.atom()?);
            } else {
                return Ok(acc);
            }
        }
    }

    fn unary(&mut self) -> Result<RadicalExpr, ExprParseError> {
        if self.eat(b'-') {
            Ok(RadicalExpr::neg(self.unary()?))
        } else {
            self.atom()
        }
    }

    fn word(&mut self) -> &str {
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphabetic() {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("")
    }

    fn float_arg(&mut self, end: u8) -> Result<f64, ExprParseError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos] != end {
            self.pos += 1;
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
        let v = text.trim().parse::<f64>().map_err(|_| ExprParseError {
            offset: start,
            message: "invalid float".to_string(),
        })?;
        self.pos += 1;
        Ok(v)
    }

    fn atom(&mut self) -> Result<RadicalExpr, ExprParseError> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(b')')?;
                Ok(e)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.s[start..self.pos]).unwrap_or("0");
                let n: BigInt = digits.parse().map_err(|_| self.error("invalid integer"))?;
                Ok(RadicalExpr::make(ExprKind::Int(n)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                match self.word() {
                    "sqrt" => {
                        self.expect(b'(')?;
                        let e = self.expr()?;
                        self.expect(b')')?;
                        Ok(RadicalExpr::sqrt(e))
                    }
                    "cbrt" => {
                        self.expect(b'(')?;
                        let e = self.expr()?;
                        self.expect(b')')?;
                        Ok(RadicalExpr::cbrt(e))
                    }
                    "omega" => {
                        if self.eat(b'^') {
                            match self.peek() {
                                Some(d @ b'0'..=b'9') => {
                                    self.pos += 1;
                                    Ok(RadicalExpr::omega_pow(d - b'0'))
                                }
                                _ => Err(self.error("expected omega exponent")),
                            }
                        } else {
                            Ok(RadicalExpr::omega_pow(1))
                        }
                    }
                    "approx" => {
                        self.expect(b'(')?;
                        let re = self.float_arg(b',')?;
                        let im = self.float_arg(b')')?;
                        Ok(RadicalExpr::approx(Complex64::new(re, im)))
                    }
                    _ => Err(ExprParseError {
                        offset: start,
                        message: "unknown identifier".to_string(),
                    }),
                }
            }
            Some(_) => Err(self.error("unexpected character")),
            None => Err(self.error("unexpected end of input")),
        }
    }
}

/// A field whose elements carry the radical expression that produced them.
#[derive(Clone, Debug, Default)]
pub struct Traced<F> {
    inner: F,
}

impl<F> Traced<F> {
    pub fn new(inner: F) -> Self {
        Traced { inner }
    }

    pub fn inner(&self) -> &F {
        &self.inner
    }

    pub fn into_inner(self) -> F {
        self.inner
    }
}

impl<F: Field> Field for Traced<F> {
    type Elem = (F::Elem, RadicalExpr);

    fn zero(&self) -> Self::Elem {
        (self.inner.zero(), RadicalExpr::integer(0))
    }

    fn one(&self) -> Self::Elem {
        (self.inner.one(), RadicalExpr::integer(1))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (
            self.inner.add(&a.0, &b.0),
            RadicalExpr::add(a.1.clone(), b.1.clone()),
        )
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        (self.inner.neg(&a.0), RadicalExpr::neg(a.1.clone()))
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        (
            self.inner.mul(&a.0, &b.0),
            RadicalExpr::mul(a.1.clone(), b.1.clone()),
        )
    }

    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok((self.inner.inverse(&a.0)?, RadicalExpr::inverse(a.1.clone())))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.inner.is_zero(&a.0)
    }

    fn to_complex(&self, a: &Self::Elem) -> Complex64 {
        self.inner.to_complex(&a.0)
    }

    fn from_bigint(&self, n: &BigInt) -> Self::Elem {
        (
            self.inner.from_bigint(n),
            RadicalExpr::literal(BigRational::from_integer(n.clone())),
        )
    }

    fn from_rational(&self, q: &BigRational) -> Result<Self::Elem, FieldError> {
        Ok((self.inner.from_rational(q)?, RadicalExpr::literal(q.clone())))
    }
}

// Index of the candidate closest to `actual`.
fn closest(actual: Complex64, candidates: &[Complex64]) -> usize {
    let mut best = 0;
    for (i, c) in candidates.iter().enumerate() {
        if (actual - c).norm() < (actual - candidates[best]).norm() {
            best = i;
        }
    }
    best
}

impl<F: SqrtField> SqrtField for Traced<F> {
    fn sqrt(&mut self, a: &Self::Elem) -> Self::Elem {
        let r = self.inner.sqrt(&a.0);
        let e = RadicalExpr::sqrt(a.1.clone());
        let p = e.value();
        let e = match closest(self.inner.to_complex(&r), &[p, -p]) {
            0 => e,
            _ => RadicalExpr::neg(e),
        };
        (r, e)
    }

    fn omega(&mut self) -> Result<Self::Elem, FieldError> {
        let w = self.inner.omega()?;
        let k = closest(self.inner.to_complex(&w), &[omega_pow(1), omega_pow(2)]);
        Ok((w, RadicalExpr::omega_pow(k as u8 + 1)))
    }
}

impl<F: CbrtField> CbrtField for Traced<F> {
    fn cbrt(&mut self, a: &Self::Elem) -> Self::Elem {
        let r = self.inner.cbrt(&a.0);
        let e = RadicalExpr::cbrt(a.1.clone());
        let p = e.value();
        let k = closest(
            self.inner.to_complex(&r),
            &[p, p * omega_pow(1), p * omega_pow(2)],
        );
        (r, RadicalExpr::mul(RadicalExpr::omega_pow(k as u8), e))
    }
}
