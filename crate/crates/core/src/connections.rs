//! `tan(n arctan x)` as a ratio of the two families, Fibonacci and Lucas
//! polynomials in closed form, and matching polynomials of paths and
//! cycles.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::chebyshev::{chebyshev, ChebyshevKind};
use crate::error::{Error, Result};
use crate::hp::{atan_rational, tan, HpReal};
use crate::numerics::{binomial, pow2, rat, rat_big, Rational};
use crate::poly::Polynomial;
use crate::sequences::{build, BuildMethod, SequenceKind};

/// Exhaustive matching enumeration is capped here.
pub const ENUMERATION_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "tag", content = "n")]
pub enum GraphKind {
    Path(usize),
    Cycle(usize),
}

impl GraphKind {
    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Domain("a path needs at least one vertex".into()));
        }
        Ok(GraphKind::Path(n))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Domain(format!("a cycle needs at least 3 vertices, got {n}")));
        }
        Ok(GraphKind::Cycle(n))
    }

    pub fn vertices(&self) -> usize {
        match *self {
            GraphKind::Path(n) | GraphKind::Cycle(n) => n,
        }
    }

    /// Edges in canonical order: `(i, i+1)` and, for a cycle, `(n-1, 0)`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.vertices();
        let mut edges: Vec<(usize, usize)> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
        if let GraphKind::Cycle(_) = self {
            edges.push((n - 1, 0));
        }
        edges
    }

    fn validate(&self) -> Result<()> {
        match *self {
            GraphKind::Path(n) => GraphKind::path(n).map(|_| ()),
            GraphKind::Cycle(n) => GraphKind::cycle(n).map(|_| ()),
        }
    }
}

impl fmt::Display for GraphKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphKind::Path(n) => write!(f, "P{n}"),
            GraphKind::Cycle(n) => write!(f, "C{n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TanRatio {
    pub n: usize,
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    pub parity: Parity,
}

impl TanRatio {
    /// `None` at a pole.
    pub fn evaluate(&self, x: &Rational) -> Option<Rational> {
        let d = self.denominator.evaluate(x);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.evaluate(x) / d)
    }
}

impl fmt::Display for TanRatio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator)
    }
}

fn beta(n: usize) -> Polynomial {
    build(SequenceKind::Beta, n, BuildMethod::Recurrence).expect("beta recurrence")
}

fn alpha(n: usize) -> Polynomial {
    build(SequenceKind::Alpha, n, BuildMethod::Recurrence).expect("alpha recurrence")
}

/// Even `n`: `-beta_(n-1) / alpha_n`; odd `n`: `alpha_n / beta_(n-1)`.
pub fn tan_multiple(n: usize) -> Result<TanRatio> {
    if n == 0 {
        return Err(Error::Domain("tan_multiple needs n >= 1".into()));
    }
    let (numerator, denominator, parity) = if n % 2 == 0 {
        (-beta(n - 1), alpha(n), Parity::Even)
    } else {
        (alpha(n), beta(n - 1), Parity::Odd)
    };
    Ok(TanRatio {
        n,
        numerator,
        denominator,
        parity,
    })
}

/// `tan(n arctan x)` in high precision.
pub fn tan_reference(n: usize, x: &Rational, bits: u32) -> HpReal {
    tan(&atan_rational(x, bits).mul_int(&BigInt::from(n)))
}

/// Even `n`: `-beta_(n-1) = x alpha_n - (1+x^2) alpha_(n-1)`, i.e. the ratio
/// is `x - (1+x^2) alpha_(n-1) / alpha_n`. Odd `n`: `alpha_n = beta_n - x beta_(n-1)`,
/// i.e. the ratio is `beta_n / beta_(n-1) - x`.
pub fn tan_alternative_form_holds(n: usize) -> bool {
    if n == 0 {
        return false;
    }
    let x = Polynomial::x();
    if n % 2 == 0 {
        -beta(n - 1) == &x * &alpha(n) - Polynomial::one_plus_x_squared() * alpha(n - 1)
    } else {
        alpha(n) == beta(n) - &x * &beta(n - 1)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FibonacciMethod {
    RecurrenceOracle,
    ClosedForm,
}

fn h_sq_plus_4_pows(h: &Polynomial, k_max: usize) -> Vec<Polynomial> {
    let base = h * h + Polynomial::constant(rat(4, 1));
    let mut out = vec![Polynomial::one()];
    for k in 1..=k_max {
        let next = &out[k - 1] * &base;
        out.push(next);
    }
    out
}

fn two_pow_neg(e: usize) -> Rational {
    Rational::new(BigInt::one(), pow2(e as u64))
}

/// `F_1 = 1, F_2 = h, F_k = h F_(k-1) + F_(k-2)`, or the closed form
/// `2^(1-n) sum_k C(n, 2k+1) h^(n-1-2k) (h^2+4)^k`.
pub fn fibonacci_poly(n: usize, h: &Polynomial, method: FibonacciMethod) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Domain("fibonacci_poly needs n >= 1".into()));
    }
    Ok(match method {
        FibonacciMethod::RecurrenceOracle => linear_recurrence(Polynomial::one(), h.clone(), h, n),
        FibonacciMethod::ClosedForm => fibonacci_closed(n, h, n),
    })
}

/// The closed form with upper binomial index `n + 1` instead of `n`; kept
/// only to show that it disagrees with the recurrence.
pub fn fibonacci_upper_index_variant(n: usize, h: &Polynomial) -> Polynomial {
    fibonacci_closed(n, h, n + 1)
}

fn fibonacci_closed(n: usize, h: &Polynomial, upper: usize) -> Polynomial {
    let pows = h_sq_plus_4_pows(h, n / 2);
    let mut total = Polynomial::zero();
    for k in 0..=(n - 1) / 2 {
        let c = binomial(upper as u64, 2 * k as u64 + 1);
        if c.is_zero() {
            continue;
        }
        let term = (h.pow((n - 1 - 2 * k) as u32) * &pows[k]).scale(&rat_big(c));
        total = total + term;
    }
    total.scale(&two_pow_neg(n - 1))
}

/// `L_1 = h, L_2 = h^2 + 2, L_k = h L_(k-1) + L_(k-2)`, or the closed form
/// `2^(1-n) sum_k C(n, 2k) h^(n-2k) (h^2+4)^k`.
pub fn lucas_poly(n: usize, h: &Polynomial, method: FibonacciMethod) -> Result<Polynomial> {
    if n == 0 {
        return Err(Error::Domain("lucas_poly needs n >= 1".into()));
    }
    Ok(match method {
        FibonacciMethod::RecurrenceOracle => {
            let l2 = h * h + Polynomial::constant(rat(2, 1));
            linear_recurrence(h.clone(), l2, h, n)
        }
        FibonacciMethod::ClosedForm => {
            let pows = h_sq_plus_4_pows(h, n / 2);
            let mut total = Polynomial::zero();
            for k in 0..=n / 2 {
                let c = rat_big(binomial(n as u64, 2 * k as u64));
                total = total + (h.pow((n - 2 * k) as u32) * &pows[k]).scale(&c);
            }
            total.scale(&two_pow_neg(n - 1))
        }
    })
}

fn linear_recurrence(first: Polynomial, second: Polynomial, h: &Polynomial, n: usize) -> Polynomial {
    if n == 1 {
        return first;
    }
    let (mut prev, mut cur) = (first, second);
    for _ in 3..=n {
        let next = h * &cur + &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MatchingMethod {
    Enumeration,
    ClosedForm,
    ChebyshevTransform,
}

/// `sum_k (-1)^k m(G, k) x^(n-2k)` with `m(G, k)` the number of `k`-edge
/// matchings.
pub fn matching_poly(g: GraphKind, method: MatchingMethod) -> Result<Polynomial> {
    g.validate()?;
    let n = g.vertices();
    Ok(match method {
        MatchingMethod::Enumeration => {
            if n > ENUMERATION_LIMIT {
                return Err(Error::SizeLimit {
                    what: "matching enumeration",
                    n,
                    max: ENUMERATION_LIMIT,
                });
            }
            let counts = matching_counts(&g);
            let mut coeffs = vec![Rational::zero(); n + 1];
            for (k, m) in counts.iter().enumerate() {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                coeffs[n - 2 * k] = Rational::from_integer(BigInt::from(sign * *m as i64));
            }
            Polynomial::new(coeffs)
        }
        MatchingMethod::ClosedForm => matching_closed_form(&g),
        MatchingMethod::ChebyshevTransform => {
            let half_x = Polynomial::monomial(rat(1, 2), 1);
            match g {
                GraphKind::Path(_) => chebyshev(ChebyshevKind::SecondKind, n).compose(&half_x),
                GraphKind::Cycle(_) => chebyshev(ChebyshevKind::FirstKind, n)
                    .compose(&half_x)
                    .scale(&rat(2, 1)),
            }
        }
    })
}

/// `m(G, k)` for `k = 0..=n/2`, by "skip edge / take edge" recursion over
/// the canonical edge order.
pub fn matching_counts(g: &GraphKind) -> Vec<u64> {
    fn walk(edges: &[(usize, usize)], idx: usize, used: u64, size: usize, counts: &mut [u64]) {
        if idx == edges.len() {
            counts[size] += 1;
            return;
        }
        walk(edges, idx + 1, used, size, counts);
        let (a, b) = edges[idx];
        let mask = (1u64 << a) | (1u64 << b);
        if used & mask == 0 {
            walk(edges, idx + 1, used | mask, size + 1, counts);
        }
    }
    let edges = g.edges();
    let mut counts = vec![0u64; g.vertices() / 2 + 1];
    walk(&edges, 0, 0, 0, &mut counts);
    counts
}

/// Path: `2^(-n) sum_k (-1)^k C(n+1, 2k+1) x^(n-2k) (4-x^2)^k`.
/// Cycle: `2^(1-n) sum_k (-1)^k C(n, 2k) x^(n-2k) (4-x^2)^k`.
fn matching_closed_form(g: &GraphKind) -> Polynomial {
    let n = g.vertices();
    let four_minus = Polynomial::from_ints(&[4, 0, -1]);
    let mut pow = Polynomial::one();
    let mut total = Polynomial::zero();
    for k in 0..=n / 2 {
        let c = match g {
            GraphKind::Path(_) => binomial(n as u64 + 1, 2 * k as u64 + 1),
            GraphKind::Cycle(_) => binomial(n as u64, 2 * k as u64),
        };
        let mut c = rat_big(c);
        if k % 2 == 1 {
            c = -c;
        }
        total = total + pow.shift(n - 2 * k).scale(&c);
        pow = &pow * &four_minus;
    }
    match g {
        GraphKind::Path(_) => total.scale(&two_pow_neg(n)),
        GraphKind::Cycle(_) => total.scale(&two_pow_neg(n - 1)),
    }
}
