//! Two arctangent expansions in powers of `x / (1 + x^2)`:
//!
//! * Euler: `sum_n 4^n (n!)^2 / (2n+1)! * x^(2n+1) / (1+x^2)^(n+1)`
//! * beta expansion: `sum_n beta_n(x) / (n+1) * x^(n+1) / (1+x^2)^(n+1)`
//!
//! Partial sums are exact rationals for the first [`EXACT_TERM_LIMIT`]
//! terms and fixed-point beyond that.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hp::{atan_rational, pi, HpReal};
use crate::numerics::{factorial, format_rational, pow2, rat_big, rat_int, Rational};
use crate::sequences::{build, BuildMethod, SequenceKind};

pub const EXACT_TERM_LIMIT: usize = 500;
/// Beyond this `|x|` the expansions still converge but slowly.
pub const SLOW_CONVERGENCE_ABS_X: i64 = 4;
const REFERENCE_BITS: u32 = 256;
const MAX_TERMS: usize = 200_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesKind {
    Euler,
    BetaExpansion,
}

impl SeriesKind {
    pub const ALL: [SeriesKind; 2] = [SeriesKind::Euler, SeriesKind::BetaExpansion];

    pub fn name(self) -> &'static str {
        match self {
            SeriesKind::Euler => "euler",
            SeriesKind::BetaExpansion => "beta",
        }
    }
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "euler" => Ok(SeriesKind::Euler),
            "beta" | "beta-expansion" | "betaexpansion" => Ok(SeriesKind::BetaExpansion),
            other => Err(format!("unknown series `{other}` (expected euler or beta)")),
        }
    }
}

/// The `n`-th term of the chosen expansion at `x`, exactly.
pub fn series_term(kind: SeriesKind, n: usize, x: &Rational) -> Rational {
    let q = Rational::one() + x * x;
    match kind {
        SeriesKind::Euler => {
            let n64 = n as u64;
            let f = factorial(n64);
            let c = Rational::new(pow2(2 * n64) * &f * &f, factorial(2 * n64 + 1));
            c * num_traits::pow(x.clone(), 2 * n + 1) / num_traits::pow(q, n + 1)
        }
        SeriesKind::BetaExpansion => {
            let beta = build(SequenceKind::Beta, n, BuildMethod::Explicit)
                .expect("beta explicit is supported")
                .evaluate(x);
            beta / rat_int(n as i64 + 1) * num_traits::pow(x / q, n + 1)
        }
    }
}

/// Sequential exact term generator; each step is O(1) rational work.
struct Terms {
    kind: SeriesKind,
    x: Rational,
    w: Rational,
    n: usize,
    euler: Rational,
    beta_prev: Rational,
    beta_cur: Rational,
    w_pow: Rational,
}

impl Terms {
    fn new(kind: SeriesKind, x: &Rational) -> Self {
        let w = x / (Rational::one() + x * x);
        Terms {
            kind,
            x: x.clone(),
            euler: w.clone(),
            beta_prev: Rational::zero(),
            beta_cur: Rational::one(),
            w_pow: w.clone(),
            w,
            n: 0,
        }
    }
}

impl Iterator for Terms {
    type Item = Rational;
    fn next(&mut self) -> Option<Rational> {
        let n = self.n;
        let q = Rational::one() + &self.x * &self.x;
        let term = match self.kind {
            SeriesKind::Euler => {
                let t = self.euler.clone();
                let ratio = Rational::new(BigInt::from(2 * n + 2), BigInt::from(2 * n + 3));
                self.euler = &self.euler * ratio * &self.x * &self.w;
                t
            }
            SeriesKind::BetaExpansion => {
                let t = &self.beta_cur / rat_int(n as i64 + 1) * &self.w_pow;
                let next = &self.beta_cur * &self.x * rat_int(2) - &q * &self.beta_prev;
                self.beta_prev = std::mem::replace(&mut self.beta_cur, next);
                self.w_pow *= &self.w;
                t
            }
        };
        self.n += 1;
        Some(term)
    }
}

/// Fixed-point continuation of [`Terms`] past the exact limit.
///
/// The beta expansion iterates `s_n = beta_n(x) w^(n+1)`, which satisfies
/// `s_(n+1) = 2q s_n - q s_(n-1)` with `q = x^2/(1+x^2)` and stays of the
/// size of the terms, so nothing underflows the fixed-point scale.
struct ApproxTerms {
    kind: SeriesKind,
    q: HpReal,
    n: usize,
    euler: HpReal,
    s_prev: HpReal,
    s_cur: HpReal,
}

impl ApproxTerms {
    /// Resumes at index `n >= 1` from exact state.
    fn resume(kind: SeriesKind, x: &Rational, n: usize, bits: u32) -> Self {
        let one = Rational::one();
        let w = x / (&one + x * x);
        let q = x * &w;
        let euler = series_term(SeriesKind::Euler, n, x);
        let (s_prev, s_cur) = if kind == SeriesKind::BetaExpansion {
            let prev = build(SequenceKind::Beta, n - 1, BuildMethod::Explicit).expect("supported");
            let cur = build(SequenceKind::Beta, n, BuildMethod::Explicit).expect("supported");
            let w_n = num_traits::pow(w.clone(), n);
            (prev.evaluate(x) * &w_n, cur.evaluate(x) * &w_n * &w)
        } else {
            (Rational::zero(), Rational::zero())
        };
        ApproxTerms {
            kind,
            q: HpReal::from_rational(&q, bits),
            n,
            euler: HpReal::from_rational(&euler, bits),
            s_prev: HpReal::from_rational(&s_prev, bits),
            s_cur: HpReal::from_rational(&s_cur, bits),
        }
    }

    fn next_term(&mut self) -> HpReal {
        let n = self.n;
        let bits = self.q.bits();
        let term = match self.kind {
            SeriesKind::Euler => {
                let t = self.euler.clone();
                let ratio = HpReal::from_rational(
                    &Rational::new(BigInt::from(2 * n + 2), BigInt::from(2 * n + 3)),
                    bits,
                );
                self.euler = &(&self.euler * &ratio) * &self.q;
                t
            }
            SeriesKind::BetaExpansion => {
                let t = self.s_cur.div_int(&BigInt::from(n + 1));
                let next = &(&self.q * &self.s_cur).mul_pow2(1) - &(&self.q * &self.s_prev);
                self.s_prev = std::mem::replace(&mut self.s_cur, next);
                t
            }
        };
        self.n += 1;
        term
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum SeriesValue {
    Exact(Rational),
    Approx(HpReal),
}

impl SeriesValue {
    pub fn to_hp(&self, bits: u32) -> HpReal {
        match self {
            SeriesValue::Exact(r) => HpReal::from_rational(r, bits),
            SeriesValue::Approx(h) => h.with_bits(bits),
        }
    }

    pub fn as_exact(&self) -> Option<&Rational> {
        match self {
            SeriesValue::Exact(r) => Some(r),
            SeriesValue::Approx(_) => None,
        }
    }
}

impl fmt::Display for SeriesValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesValue::Exact(r) => f.write_str(&format_rational(r)),
            SeriesValue::Approx(h) => f.write_str(&h.to_decimal(40)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesRow {
    pub n: usize,
    pub term: SeriesValue,
    pub partial_sum: SeriesValue,
    pub abs_error: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SeriesReport {
    pub kind: SeriesKind,
    pub x: Rational,
    pub rows: Vec<SeriesRow>,
    /// High-precision `arctan(x)`.
    pub target: f64,
    /// `|x|` lies past the region where convergence is fast.
    pub slow_convergence: bool,
    /// Bound on accumulated rounding in the fixed-point rows (0 when every
    /// row is exact).
    pub rounding_bound: f64,
}

impl SeriesReport {
    pub fn final_error(&self) -> f64 {
        self.rows.last().map_or(f64::INFINITY, |r| r.abs_error)
    }

    /// `abs_error` is non-increasing from row `start` on.
    pub fn error_monotone_from(&self, start: usize) -> bool {
        self.first_error_increase(start).is_none()
    }

    /// First `n >= start` with `abs_error(n+1) > abs_error(n)`.
    pub fn first_error_increase(&self, start: usize) -> Option<usize> {
        self.rows
            .windows(2)
            .skip(start)
            .find(|w| w[1].abs_error > w[0].abs_error)
            .map(|w| w[0].n)
    }

    /// Geometric decay rate `(err_last / err_start)^(1/(last - start))`,
    /// where `last` is the final row whose error is still above the
    /// reference precision.
    pub fn measured_decay_rate(&self, start: usize) -> Option<f64> {
        let floor = 2f64.powi(-(REFERENCE_BITS as i32) + 16);
        let first = self.rows.get(start)?;
        let last = self.rows.iter().rev().find(|r| r.abs_error > floor)?;
        if last.n <= first.n || first.abs_error <= floor {
            return None;
        }
        Some((last.abs_error / first.abs_error).powf(1.0 / (last.n - first.n) as f64))
    }

    /// CSV with header `n,term,partial_sum,abs_error`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,term,partial_sum,abs_error\n");
        for row in &self.rows {
            let _ = writeln!(out, "{},{},{},{:e}", row.n, row.term, row.partial_sum, row.abs_error);
        }
        out
    }
}

fn abs_error(sum: &HpReal, target: &HpReal) -> f64 {
    (sum - target).abs().to_f64()
}

/// Partial sums of the first `terms` terms, all rows recorded.
pub fn partial_sum(kind: SeriesKind, x: &Rational, terms: usize) -> Result<SeriesReport> {
    if terms == 0 {
        return Err(Error::Domain("at least one term is required".into()));
    }
    let target = atan_rational(x, REFERENCE_BITS);
    let mut rows = Vec::with_capacity(terms);
    let mut sum = Rational::zero();
    for (n, term) in Terms::new(kind, x).take(terms.min(EXACT_TERM_LIMIT)).enumerate() {
        sum += &term;
        rows.push(SeriesRow {
            n,
            abs_error: abs_error(&HpReal::from_rational(&sum, REFERENCE_BITS), &target),
            term: SeriesValue::Exact(term),
            partial_sum: SeriesValue::Exact(sum.clone()),
        });
    }
    let mut rounding_bound = 0.0;
    if terms > EXACT_TERM_LIMIT {
        let mut approx = ApproxTerms::resume(kind, x, EXACT_TERM_LIMIT, REFERENCE_BITS);
        let mut hp_sum = HpReal::from_rational(&sum, REFERENCE_BITS);
        let ulp = 2f64.powi(-(REFERENCE_BITS as i32));
        for n in EXACT_TERM_LIMIT..terms {
            let term = approx.next_term();
            hp_sum = &hp_sum + &term;
            // each step rounds a handful of products
            rounding_bound += 8.0 * ulp * (n as f64 + 1.0);
            rows.push(SeriesRow {
                n,
                abs_error: abs_error(&hp_sum, &target),
                term: SeriesValue::Approx(term),
                partial_sum: SeriesValue::Approx(hp_sum.clone()),
            });
        }
    }
    Ok(SeriesReport {
        kind,
        x: x.clone(),
        rows,
        target: target.to_f64(),
        slow_convergence: x.abs() > rat_int(SLOW_CONVERGENCE_ABS_X),
        rounding_bound,
    })
}

fn to_f64(r: &Rational) -> f64 {
    match (r.numer().to_f64(), r.denom().to_f64()) {
        (Some(n), Some(d)) if n.is_finite() && d.is_finite() => n / d,
        _ => HpReal::from_rational(r, 1100).to_f64(),
    }
}

/// Upper bound on `|sum_{n >= terms} t_n|`.
///
/// Euler terms are positive with ratio below `q = x^2 / (1+x^2)`, so the
/// tail is at most `t_N / (1 - q)`. For the beta expansion
/// `|beta_n(x)| <= (1+x^2)^((n+1)/2)`, giving `|t_n| <= r^(n+1) / (n+1)`
/// with `r = |x| / sqrt(1+x^2)`.
pub fn remainder_bound(kind: SeriesKind, x: &Rational, terms: usize) -> f64 {
    let xf = to_f64(x);
    let q = xf * xf / (1.0 + xf * xf);
    match kind {
        SeriesKind::Euler => {
            let t = to_f64(&series_term(SeriesKind::Euler, terms, x)).abs();
            t / (1.0 - q)
        }
        SeriesKind::BetaExpansion => {
            let r = q.sqrt();
            let n1 = terms as f64 + 1.0;
            (n1 * r.ln()).exp() / (n1 * (1.0 - r))
        }
    }
}

/// Smallest `N >= 1` with `scale * remainder_bound(N) < tolerance`.
fn terms_for(kind: SeriesKind, x: &Rational, tolerance: f64, scale: f64) -> Result<usize> {
    if !(tolerance > 0.0) {
        return Err(Error::Domain("tolerance must be positive".into()));
    }
    // remainder bounds are monotone in N, so bisect after doubling
    let ok = |n: usize| scale * remainder_bound(kind, x, n) < tolerance;
    if ok(1) {
        return Ok(1);
    }
    let mut hi = 2;
    while !ok(hi) {
        hi *= 2;
        if hi > MAX_TERMS {
            return Err(Error::Domain(format!(
                "{kind} series needs more than {MAX_TERMS} terms at x = {}",
                format_rational(x)
            )));
        }
    }
    let mut lo = hi / 2;
    while hi - lo > 1 {
        let mid = (lo + hi) / 2;
        if ok(mid) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

fn sum_terms(kind: SeriesKind, x: &Rational, terms: usize) -> HpReal {
    let exact: Rational = Terms::new(kind, x).take(terms.min(EXACT_TERM_LIMIT)).sum();
    let mut hp = HpReal::from_rational(&exact, REFERENCE_BITS);
    if terms > EXACT_TERM_LIMIT {
        let mut approx = ApproxTerms::resume(kind, x, EXACT_TERM_LIMIT, REFERENCE_BITS);
        for _ in EXACT_TERM_LIMIT..terms {
            hp = &hp + &approx.next_term();
        }
    }
    hp
}

#[derive(Debug, Clone, Serialize)]
pub struct PiApprox {
    pub kind: SeriesKind,
    pub value: f64,
    pub decimal: String,
    pub terms_used: usize,
    pub abs_error: f64,
}

/// `4 * S_N(1)`, with `N` the first count whose remainder bound (times 4)
/// is below `tolerance`.
pub fn pi_approx(kind: SeriesKind, tolerance: f64) -> Result<PiApprox> {
    let one = Rational::one();
    let terms = terms_for(kind, &one, tolerance, 4.0)?;
    let value = sum_terms(kind, &one, terms).mul_pow2(2);
    let abs_error = (&value - &pi(REFERENCE_BITS)).abs().to_f64();
    Ok(PiApprox {
        kind,
        value: value.to_f64(),
        decimal: value.to_decimal(10),
        terms_used: terms,
        abs_error,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct CompareRow {
    pub kind: SeriesKind,
    pub terms_to_tolerance: usize,
    pub final_error: f64,
}

/// Terms each expansion needs at `x` for the tail bound to drop below
/// `tolerance`, with the realised error.
pub fn compare_series(x: &Rational, tolerance: f64) -> Result<Vec<CompareRow>> {
    let target = atan_rational(x, REFERENCE_BITS);
    SeriesKind::ALL
        .iter()
        .map(|&kind| {
            let terms = terms_for(kind, x, tolerance, 1.0)?;
            let sum = sum_terms(kind, x, terms);
            Ok(CompareRow {
                kind,
                terms_to_tolerance: terms,
                final_error: abs_error(&sum, &target),
            })
        })
        .collect()
}

/// `4^n (n!)^2 / (2n+1)!`, exposed for reporting.
pub fn euler_coefficient(n: usize) -> Rational {
    let f = rat_big(factorial(n as u64));
    rat_big(pow2(2 * n as u64)) * &f * &f / rat_big(factorial(2 * n as u64 + 1))
}
