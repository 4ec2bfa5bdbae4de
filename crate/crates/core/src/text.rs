//! Parsers for command-line and JSON input: exact rationals, decimal
//! tolerances, polynomial expressions in the rendered form, and the
//! polynomial JSON record.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numerics::{format_rational, Rational};
use crate::poly::Polynomial;
use crate::sequences::{BuildMethod, SequenceKind};

/// Exponents beyond this are rejected rather than allocated.
pub const MAX_PARSED_DEGREE: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("empty input")]
    Empty,
    #[error("invalid rational `{0}`")]
    InvalidRational(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("invalid number `{0}`")]
    InvalidNumber(String),
    #[error("at byte {pos}: {msg}")]
    InvalidPolynomial { pos: usize, msg: String },
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("bad shape: {0}")]
    Shape(String),
    #[error("{0}")]
    UnknownName(String),
}

fn digits_only(s: &str) -> bool {
    !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit())
}

fn parse_signed_int(s: &str) -> Option<BigInt> {
    let body = s.strip_prefix(['-', '+']).unwrap_or(s);
    if !digits_only(body) {
        return None;
    }
    s.parse().ok()
}

/// `p/q` or an integer literal, optionally signed; never through floats.
pub fn parse_rational(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    let bad = || ParseError::InvalidRational(s.to_string());
    match s.split_once('/') {
        None => Ok(Rational::from_integer(parse_signed_int(s).ok_or_else(bad)?)),
        Some((p, q)) => {
            let p = parse_signed_int(p.trim()).ok_or_else(bad)?;
            let q = q.trim();
            if !digits_only(q) {
                return Err(bad());
            }
            let q: BigInt = q.parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(ParseError::ZeroDenominator);
            }
            Ok(Rational::new(p, q))
        }
    }
}

/// Decimal or scientific literal (`0.001`, `1e-10`, `2.5E3`) as an exact
/// rational; also accepts anything `parse_rational` does.
pub fn parse_decimal(s: &str) -> Result<Rational, ParseError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseError::Empty);
    }
    if let Ok(r) = parse_rational(s) {
        return Ok(r);
    }
    let bad = || ParseError::InvalidNumber(s.to_string());
    let (mantissa, exp) = match s.find(['e', 'E']) {
        Some(i) => {
            let e: i64 = s[i + 1..].parse().map_err(|_| bad())?;
            (&s[..i], e)
        }
        None => (s, 0),
    };
    if exp.unsigned_abs() > 10_000 {
        return Err(bad());
    }
    let (neg, body) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
    if (int_part.is_empty() && frac_part.is_empty())
        || !(int_part.is_empty() || digits_only(int_part))
        || !(frac_part.is_empty() || digits_only(frac_part))
    {
        return Err(bad());
    }
    let digits: BigInt = format!("{int_part}{frac_part}0").parse().map_err(|_| bad())?;
    let scale = exp - frac_part.len() as i64 - 1;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Rational::from_integer(digits * num_traits::pow(ten, scale as usize))
    } else {
        Rational::new(digits, num_traits::pow(ten, scale.unsigned_abs() as usize))
    };
    Ok(if neg { -value } else { value })
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> Lexer<'a> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn err(&self, msg: impl Into<String>) -> ParseError {
        ParseError::InvalidPolynomial {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).expect("ascii"))
    }

    /// `digits` or `digits/digits`.
    fn unsigned_rational(&mut self) -> Result<Option<Rational>, ParseError> {
        let Some(p) = self.digits() else {
            return Ok(None);
        };
        let p: BigInt = p.parse().expect("digits");
        if self.eat(b'/') {
            let q = self.digits().ok_or_else(|| self.err("expected denominator"))?;
            let q: BigInt = q.parse().expect("digits");
            if q.is_zero() {
                return Err(ParseError::ZeroDenominator);
            }
            return Ok(Some(Rational::new(p, q)));
        }
        Ok(Some(Rational::from_integer(p)))
    }
}

/// Parses sums of terms `c`, `c x`, `c*x^k`, `(p/q)x^k`, `x^k`, as
/// produced by `Polynomial`'s `Display`.
pub fn parse_polynomial(s: &str) -> Result<Polynomial, ParseError> {
    let mut lx = Lexer { src: s.as_bytes(), pos: 0 };
    if lx.peek().is_none() {
        return Err(ParseError::Empty);
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    let mut first = true;
    loop {
        let mut negative = false;
        if lx.eat(b'-') {
            negative = true;
        } else if !lx.eat(b'+') && !first {
            return Err(lx.err("expected `+` or `-`"));
        }
        first = false;

        let mut coeff: Option<Rational> = None;
        if lx.eat(b'(') {
            let inner_neg = lx.eat(b'-');
            let r = lx.unsigned_rational()?.ok_or_else(|| lx.err("expected number"))?;
            if !lx.eat(b')') {
                return Err(lx.err("expected `)`"));
            }
            coeff = Some(if inner_neg { -r } else { r });
        } else if let Some(r) = lx.unsigned_rational()? {
            coeff = Some(r);
        }
        if coeff.is_some() {
            lx.eat(b'*');
        }
        let mut degree = 0usize;
        if lx.eat(b'x') {
            degree = 1;
            if lx.eat(b'^') {
                let d = lx.digits().ok_or_else(|| lx.err("expected exponent"))?;
                degree = d
                    .parse::<usize>()
                    .ok()
                    .filter(|d| *d <= MAX_PARSED_DEGREE)
                    .ok_or_else(|| lx.err("exponent too large"))?;
            }
        } else if coeff.is_none() {
            return Err(lx.err("expected a term"));
        }
        let mut c = coeff.unwrap_or_else(Rational::one);
        if negative {
            c = -c;
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, Rational::zero());
        }
        coeffs[degree] += c;
        if lx.peek().is_none() {
            break;
        }
    }
    Ok(Polynomial::new(coeffs))
}

/// `{"kind":"beta","n":5,"method":"recurrence","coeffs":["0","6",...]}`,
/// coefficients ascending by degree as canonical rational strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub kind: String,
    pub n: usize,
    pub method: String,
    pub coeffs: Vec<String>,
}

impl PolyRecord {
    pub fn new(kind: SequenceKind, n: usize, method: BuildMethod, poly: &Polynomial) -> Self {
        PolyRecord {
            kind: kind.name().to_string(),
            n,
            method: method.name().to_string(),
            coeffs: poly.coeff_strings(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let rec: PolyRecord = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        rec.kind()?;
        rec.method()?;
        rec.polynomial()?;
        Ok(rec)
    }

    pub fn kind(&self) -> Result<SequenceKind, ParseError> {
        self.kind.parse().map_err(ParseError::UnknownName)
    }

    pub fn method(&self) -> Result<BuildMethod, ParseError> {
        self.method.parse().map_err(ParseError::UnknownName)
    }

    pub fn polynomial(&self) -> Result<Polynomial, ParseError> {
        if self.coeffs.is_empty() {
            return Err(ParseError::Shape("coeffs must be nonempty".into()));
        }
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| parse_rational(c))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Polynomial::new(coeffs))
    }

    /// True when every coefficient string is already canonical and there
    /// are no trailing zeros.
    pub fn is_canonical(&self) -> bool {
        match self.polynomial() {
            Ok(p) => p.coeff_strings() == self.coeffs,
            Err(_) => false,
        }
    }
}

/// Canonical rendering of a parsed rational.
pub fn canonical_rational(s: &str) -> Result<String, ParseError> {
    parse_rational(s).map(|r| format_rational(&r))
}
