//! Univariate polynomial input such as `x^3 - 6*x - 9` or `1/2 t^2 + 0.25`.
//!
//! Grammar (whitespace is ignored):
//!
//! ```text
//! poly  := sign? term (sign term)*
//! term  := coef ('*'? var ('^' exp)?)? | var ('^' exp)?
//! coef  := int | int '/' int | decimal
//! ```
//!
//! Offsets in errors are character positions in the source text.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use radica_core::BigRational;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("variable `{found}` at offset {offset} differs from `{expected}`")]
    InconsistentVariable {
        offset: usize,
        expected: String,
        found: String,
    },
    #[error("exponent too large at offset {offset}")]
    ExponentOverflow { offset: usize },
}

impl ParseError {
    pub fn offset(&self) -> usize {
        match self {
            ParseError::Syntax { offset, .. }
            | ParseError::InconsistentVariable { offset, .. }
            | ParseError::ExponentOverflow { offset } => *offset,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolynomialInput {
    /// `None` for constant input.
    pub variable: Option<String>,
    /// Nonzero coefficients by degree.
    pub coefficients: BTreeMap<u32, BigRational>,
    pub source: String,
    /// Some coefficient was written as a decimal.
    pub has_decimal: bool,
}

impl PolynomialInput {
    /// Highest degree with a nonzero coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.coefficients.keys().next_back().copied()
    }

    /// Dense coefficients, leading first.
    pub fn leading_first(&self) -> Vec<BigRational> {
        let Some(n) = self.degree() else {
            return Vec::new();
        };
        (0..=n)
            .rev()
            .map(|k| self.coefficients.get(&k).cloned().unwrap_or_else(BigRational::zero))
            .collect()
    }

    pub fn variable_name(&self) -> &str {
        self.variable.as_deref().unwrap_or("x")
    }
}

struct Parser {
    chars: Vec<char>,
    pos: usize,
    variable: Option<String>,
    has_decimal: bool,
}

impl Parser {
    fn syntax(&self, offset: usize, message: &str) -> ParseError {
        ParseError::Syntax {
            offset,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.pos).is_some_and(|c| c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn digits(&mut self) -> String {
        let start = self.pos;
        while self.chars.get(self.pos).is_some_and(|c| c.is_ascii_digit()) {
            self.pos += 1;
        }
        self.chars[start..self.pos].iter().collect()
    }

    fn coefficient(&mut self) -> Result<BigRational, ParseError> {
        let start = self.pos;
        let int_part = self.digits();
        if self.chars.get(self.pos) == Some(&'.') {
            self.pos += 1;
            let frac = self.digits();
            if int_part.is_empty() && frac.is_empty() {
                return Err(self.syntax(start, "expected digits"));
            }
            self.has_decimal = true;
            let numer: BigInt = format!("{int_part}{frac}0").parse().expect("digits");
            let denom = BigInt::from(10).pow(frac.len() as u32 + 1);
            return Ok(BigRational::new(numer, denom).expect("positive denominator"));
        }
        let numer: BigInt = int_part.parse().expect("digits");
        if self.peek() == Some('/') {
            self.pos += 1;
            self.skip_ws();
            let at = self.pos;
            let den = self.digits();
            if den.is_empty() {
                return Err(self.syntax(at, "expected denominator"));
            }
            let den: BigInt = den.parse().expect("digits");
            return BigRational::new(numer, den).map_err(|_| self.syntax(at, "zero denominator"));
        }
        Ok(BigRational::from_integer(numer))
    }

    fn identifier(&mut self) -> Result<(), ParseError> {
        let start = self.pos;
        while self
            .chars
            .get(self.pos)
            .is_some_and(|c| c.is_alphanumeric() || *c == '_')
        {
            self.pos += 1;
        }
        let name: String = self.chars[start..self.pos].iter().collect();
        match &self.variable {
            Some(v) if *v != name => Err(ParseError::InconsistentVariable {
                offset: start,
                expected: v.clone(),
                found: name,
            }),
            Some(_) => Ok(()),
            None => {
                self.variable = Some(name);
                Ok(())
            }
        }
    }

    fn exponent(&mut self) -> Result<u32, ParseError> {
        if self.peek() != Some('^') {
            return Ok(1);
        }
        self.pos += 1;
        self.skip_ws();
        let at = self.pos;
        let digits = self.digits();
        if digits.is_empty() {
            return Err(self.syntax(at, "expected exponent"));
        }
        digits
            .parse::<u32>()
            .map_err(|_| ParseError::ExponentOverflow { offset: at })
    }

    fn is_ident_start(c: char) -> bool {
        c.is_alphabetic() || c == '_'
    }

    /// One unsigned term: its coefficient and degree.
    fn term(&mut self) -> Result<(BigRational, u32), ParseError> {
        let at = match self.peek() {
            Some(_) => self.pos,
            None => return Err(self.syntax(self.pos, "expected term")),
        };
        let c = self.chars[at];
        if Self::is_ident_start(c) {
            self.identifier()?;
            return Ok((BigRational::one(), self.exponent()?));
        }
        if !(c.is_ascii_digit() || c == '.') {
            return Err(self.syntax(at, "expected term"));
        }
        let coef = self.coefficient()?;
        let star = self.peek() == Some('*');
        if star {
            self.pos += 1;
        }
        match self.peek() {
            Some(c) if Self::is_ident_start(c) => {
                self.identifier()?;
                Ok((coef, self.exponent()?))
            }
            _ if star => Err(self.syntax(self.pos, "expected variable")),
            _ => Ok((coef, 0)),
        }
    }

    fn sign(&mut self) -> Option<bool> {
        match self.peek() {
            Some('+') => {
                self.pos += 1;
                Some(false)
            }
            Some('-') => {
                self.pos += 1;
                Some(true)
            }
            _ => None,
        }
    }
}

pub fn parse_polynomial(text: &str) -> Result<PolynomialInput, ParseError> {
    let mut p = Parser {
        chars: text.chars().collect(),
        pos: 0,
        variable: None,
        has_decimal: false,
    };
    let mut coefficients: BTreeMap<u32, BigRational> = BTreeMap::new();
    let mut negative = p.sign().unwrap_or(false);
    loop {
        let (coef, deg) = p.term()?;
        let coef = if negative { -coef } else { coef };
        let entry = coefficients.entry(deg).or_insert_with(BigRational::zero);
        *entry = &*entry + &coef;
        match p.sign() {
            Some(s) => negative = s,
            None if p.peek().is_none() => break,
            None => return Err(p.syntax(p.pos, "expected `+` or `-`")),
        }
    }
    coefficients.retain(|_, c| !c.is_zero());
    Ok(PolynomialInput {
        variable: p.variable,
        coefficients,
        source: text.to_string(),
        has_decimal: p.has_decimal,
    })
}
