//! The derivative polynomials `P_n`, their normalisation `beta_n`, the
//! companion family `alpha_n` and the monic `pi_n = beta_n / (n + 1)`,
//! each constructible through several independent routes.
//!
//! | family | defining property                              |
//! |--------|------------------------------------------------|
//! | beta   | `Im((x + i)^(n+1))`                            |
//! | alpha  | `Re((x + i)^n)`                                |
//! | P      | `d^n/dx^n arctan = P_(n-1) / (1 + x^2)^n`      |
//! | pi     | `beta_n / (n + 1)`, monic                      |

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::chebyshev::tridiagonal_prefix;
use crate::error::{Error, Result};
use crate::hessenberg::bracket;
use crate::numerics::{bernoulli, binomial, factorial, gaussian_pow, pow2, rat, rat_big, rat_int, Gaussian, Rational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SequenceKind {
    Beta,
    Alpha,
    P,
    MonicPi,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BuildMethod {
    Recurrence,
    Explicit,
    ComplexPower,
    MatrixPower,
    Determinant,
    MonicBernoulli,
    Hypergeometric,
    DerivativeRecurrence,
}

/// The two families with a generating function, root formula and ODE.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Beta,
    Alpha,
}

impl From<Family> for SequenceKind {
    fn from(f: Family) -> Self {
        match f {
            Family::Beta => SequenceKind::Beta,
            Family::Alpha => SequenceKind::Alpha,
        }
    }
}

impl SequenceKind {
    pub const ALL: [SequenceKind; 4] = [
        SequenceKind::Beta,
        SequenceKind::Alpha,
        SequenceKind::P,
        SequenceKind::MonicPi,
    ];

    /// Supported construction routes; the first entry is the reference.
    pub fn methods(self) -> &'static [BuildMethod] {
        use BuildMethod::*;
        match self {
            SequenceKind::Beta => &[
                Recurrence,
                Explicit,
                ComplexPower,
                MatrixPower,
                Determinant,
                Hypergeometric,
                DerivativeRecurrence,
            ],
            SequenceKind::Alpha => &[
                Recurrence,
                Explicit,
                ComplexPower,
                MatrixPower,
                Determinant,
                MonicBernoulli,
                Hypergeometric,
            ],
            SequenceKind::P => &[Explicit, DerivativeRecurrence, ComplexPower],
            // `Recurrence` here is the quotient beta_n / (n + 1).
            SequenceKind::MonicPi => &[MonicBernoulli, Recurrence],
        }
    }

    pub fn supports(self, method: BuildMethod) -> bool {
        self.methods().contains(&method)
    }

    pub fn default_method(self) -> BuildMethod {
        self.methods()[0]
    }

    pub fn name(self) -> &'static str {
        match self {
            SequenceKind::Beta => "beta",
            SequenceKind::Alpha => "alpha",
            SequenceKind::P => "p",
            SequenceKind::MonicPi => "pi",
        }
    }
}

impl BuildMethod {
    pub const ALL: [BuildMethod; 8] = [
        BuildMethod::Recurrence,
        BuildMethod::Explicit,
        BuildMethod::ComplexPower,
        BuildMethod::MatrixPower,
        BuildMethod::Determinant,
        BuildMethod::MonicBernoulli,
        BuildMethod::Hypergeometric,
        BuildMethod::DerivativeRecurrence,
    ];

    pub fn name(self) -> &'static str {
        match self {
            BuildMethod::Recurrence => "recurrence",
            BuildMethod::Explicit => "explicit",
            BuildMethod::ComplexPower => "complex-power",
            BuildMethod::MatrixPower => "matrix-power",
            BuildMethod::Determinant => "determinant",
            BuildMethod::MonicBernoulli => "monic-bernoulli",
            BuildMethod::Hypergeometric => "hypergeometric",
            BuildMethod::DerivativeRecurrence => "derivative-recurrence",
        }
    }

    /// Methods that naturally produce the whole prefix `0..=n` at once.
    fn is_sequential(self) -> bool {
        matches!(
            self,
            BuildMethod::Recurrence
                | BuildMethod::Determinant
                | BuildMethod::MonicBernoulli
                | BuildMethod::DerivativeRecurrence
        )
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for BuildMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        SequenceKind::from(*self).fmt(f)
    }
}

impl FromStr for SequenceKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "beta" => Ok(SequenceKind::Beta),
            "alpha" => Ok(SequenceKind::Alpha),
            "p" => Ok(SequenceKind::P),
            "pi" | "monic-pi" | "monicpi" => Ok(SequenceKind::MonicPi),
            other => Err(format!("unknown sequence kind `{other}`")),
        }
    }
}

impl FromStr for BuildMethod {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let key = s.to_ascii_lowercase().replace('_', "-");
        BuildMethod::ALL
            .into_iter()
            .find(|m| m.name() == key || m.name().replace('-', "") == key)
            .ok_or_else(|| format!("unknown build method `{s}`"))
    }
}

impl FromStr for Family {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "beta" => Ok(Family::Beta),
            "alpha" => Ok(Family::Alpha),
            other => Err(format!("unknown family `{other}` (expected beta or alpha)")),
        }
    }
}

/// Builds the `n`-th member of `kind` by the given route.
pub fn build(kind: SequenceKind, n: usize, method: BuildMethod) -> Result<Polynomial> {
    if !kind.supports(method) {
        return Err(Error::UnsupportedPair { kind, method });
    }
    if method.is_sequential() {
        return Ok(build_prefix(kind, n, method)?.pop().expect("nonempty prefix"));
    }
    Ok(build_direct(kind, n, method))
}

/// Members `0..=n_max` of `kind` by the given route.
pub fn build_prefix(kind: SequenceKind, n_max: usize, method: BuildMethod) -> Result<Vec<Polynomial>> {
    if !kind.supports(method) {
        return Err(Error::UnsupportedPair { kind, method });
    }
    use BuildMethod::*;
    use SequenceKind::*;
    let out = match (kind, method) {
        (Beta, Recurrence) => three_term(Polynomial::from_ints(&[0, 2]), n_max),
        (Alpha, Recurrence) => three_term(Polynomial::x(), n_max),
        (MonicPi, Recurrence) => three_term(Polynomial::from_ints(&[0, 2]), n_max)
            .into_iter()
            .enumerate()
            .map(|(n, b)| b.div_scalar(&rat_int(n as i64 + 1)))
            .collect(),
        (Beta, Determinant) => determinant(Polynomial::from_ints(&[0, 2]), n_max),
        (Alpha, Determinant) => determinant(Polynomial::x(), n_max),
        (MonicPi, MonicBernoulli) => monic_extended(n_max, bracket),
        (Alpha, MonicBernoulli) => monic_extended(n_max, alpha_bracket),
        (Beta, DerivativeRecurrence) => beta_derivative_recurrence(n_max),
        (P, DerivativeRecurrence) => p_derivative_recurrence(n_max),
        _ => (0..=n_max)
            .into_par_iter()
            .map(|n| build_direct(kind, n, method))
            .collect(),
    };
    Ok(out)
}

fn build_direct(kind: SequenceKind, n: usize, method: BuildMethod) -> Polynomial {
    use BuildMethod::*;
    use SequenceKind::*;
    match (kind, method) {
        (Beta, Explicit) => beta_explicit(n),
        (Alpha, Explicit) => alpha_explicit(n),
        (P, Explicit) => beta_explicit(n).scale(&p_factor(n)),
        (Beta, ComplexPower) => x_plus_i_pow(n as u64 + 1).im,
        (Alpha, ComplexPower) => x_plus_i_pow(n as u64).re,
        (P, ComplexPower) => x_plus_i_pow(n as u64 + 1).im.scale(&p_factor(n)),
        (Beta, MatrixPower) => matrix_power(Polynomial::from_ints(&[0, 2]), n),
        (Alpha, MatrixPower) => matrix_power(Polynomial::x(), n),
        (Beta, Hypergeometric) => beta_hypergeometric(n),
        (Alpha, Hypergeometric) => alpha_hypergeometric(n),
        _ => {
            let prefix = build_prefix(kind, n, method).expect("supported pair");
            prefix.into_iter().last().expect("nonempty prefix")
        }
    }
}

/// `(-1)^n n!`, the factor relating `P_n` to `beta_n` in the explicit
/// binomial form.
fn p_factor(n: usize) -> Rational {
    let f = rat_big(factorial(n as u64));
    if n % 2 == 1 {
        -f
    } else {
        f
    }
}

/// `q_(n+1) = 2x q_n - (1 + x^2) q_(n-1)`, `q_0 = 1`.
fn three_term(first: Polynomial, n_max: usize) -> Vec<Polynomial> {
    let two_x = Polynomial::from_ints(&[0, 2]);
    let q = Polynomial::one_plus_x_squared();
    let mut out = vec![Polynomial::one()];
    if n_max >= 1 {
        out.push(first);
    }
    for n in 2..=n_max {
        let next = &two_x * &out[n - 1] - &q * &out[n - 2];
        out.push(next);
    }
    out
}

/// Tridiagonal determinant with diagonal `(first, 2x, ..., 2x)`,
/// subdiagonal `-1` and superdiagonal `-(1 + x^2)`.
fn determinant(first: Polynomial, n_max: usize) -> Vec<Polynomial> {
    tridiagonal_prefix(
        &first,
        &Polynomial::from_ints(&[0, 2]),
        &Polynomial::from_ints(&[-1]),
        &-Polynomial::one_plus_x_squared(),
        n_max,
    )
}

fn x_plus_i_pow(e: u64) -> Gaussian<Polynomial> {
    gaussian_pow(&Gaussian::new(Polynomial::x(), Polynomial::one()), e)
}

/// `sum_k (-1)^k C(n+1, 2k+1) x^(n-2k)`.
fn beta_explicit(n: usize) -> Polynomial {
    let n64 = n as u64;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        let c = binomial(n64 + 1, 2 * k as u64 + 1);
        coeffs[n - 2 * k] = if k % 2 == 1 { -c } else { c };
    }
    Polynomial::from_bigints(coeffs)
}

/// `sum_k (-1)^k C(n, 2k) x^(n-2k)`.
fn alpha_explicit(n: usize) -> Polynomial {
    let n64 = n as u64;
    let mut coeffs = vec![BigInt::zero(); n + 1];
    for k in 0..=n / 2 {
        let c = binomial(n64, 2 * k as u64);
        coeffs[n - 2 * k] = if k % 2 == 1 { -c } else { c };
    }
    Polynomial::from_bigints(coeffs)
}

#[derive(Clone)]
struct Mat2([Polynomial; 4]);

impl Mat2 {
    fn identity() -> Self {
        Mat2([Polynomial::one(), Polynomial::zero(), Polynomial::zero(), Polynomial::one()])
    }

    fn mul(&self, o: &Mat2) -> Mat2 {
        let [a, b, c, d] = &self.0;
        let [e, f, g, h] = &o.0;
        Mat2([a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h])
    }

    fn pow(&self, mut e: usize) -> Mat2 {
        let mut result = Mat2::identity();
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        result
    }
}

/// `(1, second) M^n (1, 0)^T` with `M = [[0, -(1 + x^2)], [1, 2x]]`.
fn matrix_power(second: Polynomial, n: usize) -> Polynomial {
    let m = Mat2([
        Polynomial::zero(),
        -Polynomial::one_plus_x_squared(),
        Polynomial::one(),
        Polynomial::from_ints(&[0, 2]),
    ]);
    let p = m.pow(n);
    &p.0[0] + &(&second * &p.0[2])
}

/// Coefficients `t_m = (a)_m (b)_m / ((c)_m m!)` of a terminating 2F1;
/// the list ends at the first vanishing Pochhammer product.
fn hypergeometric_terms(a: &Rational, b: &Rational, c: &Rational, max_terms: usize) -> Vec<Rational> {
    let mut terms = vec![Rational::one()];
    let mut t = Rational::one();
    for m in 0..max_terms {
        let mr = rat_int(m as i64);
        t = t * (a + &mr) * (b + &mr) / ((c + &mr) * (&mr + Rational::one()));
        if t.is_zero() {
            break;
        }
        terms.push(t.clone());
    }
    terms
}

/// `x^n 2F1(-n/2, 1/2 - n/2; c; -1/x^2)` with the argument cleared:
/// term `m` contributes `t_m (-1)^m x^(n-2m)`. One upper parameter is a
/// non-positive integer for either parity of `n`, so `m <= n/2`.
fn hypergeometric_poly(n: usize, c: Rational) -> Polynomial {
    let a = rat(-(n as i64), 2);
    let b = rat(1 - n as i64, 2);
    let terms = hypergeometric_terms(&a, &b, &c, n / 2 + 1);
    let mut coeffs = vec![Rational::zero(); n + 1];
    for (m, t) in terms.into_iter().enumerate() {
        assert!(2 * m <= n, "non-terminating hypergeometric sum");
        coeffs[n - 2 * m] = if m % 2 == 1 { -t } else { t };
    }
    Polynomial::new(coeffs)
}

fn beta_hypergeometric(n: usize) -> Polynomial {
    hypergeometric_poly(n, rat(3, 2)).scale(&rat_int(n as i64 + 1))
}

fn alpha_hypergeometric(n: usize) -> Polynomial {
    hypergeometric_poly(n, rat(1, 2))
}

/// Coefficient of `alpha_(n-j)` in the extended monic recurrence for
/// `alpha`: `2^(j+1) (2^(j+1) - 1) / (j+1) C(n, j) |B_(j+1)|` for `j >= 1`.
pub fn alpha_bracket(n: usize, j: usize) -> Rational {
    if j == 0 || j > n {
        return Rational::zero();
    }
    let p = pow2(j as u64 + 1);
    let factor = Rational::new(&p * (&p - BigInt::one()), BigInt::from(j + 1));
    factor * rat_big(binomial(n as u64, j as u64)) * bernoulli(j + 1).abs()
}

/// `p_0 = 1`, `p_(m+1) = x p_m - sum_(j=1)^m c(m, j) p_(m-j)`.
///
/// Each `p_m` is kept as integer numerators over one denominator so the
/// inner sums run in integers; only the final division reduces.
fn monic_extended(n_max: usize, coeff: fn(usize, usize) -> Rational) -> Vec<Polynomial> {
    let mut out: Vec<Polynomial> = vec![Polynomial::one()];
    let mut cleared: Vec<(Vec<BigInt>, BigInt)> = vec![(vec![BigInt::one()], BigInt::one())];
    for m in 0..n_max {
        // B_(j+1) = 0 for odd j + 1 >= 3, so only odd j contribute
        let terms: Vec<(usize, Rational)> = (1..=m)
            .step_by(2)
            .map(|j| (j, coeff(m, j)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        // common denominator of c(m, j) / den(p_(m-j)) over all j
        let common = terms.iter().fold(BigInt::one(), |acc, (j, c)| {
            acc.lcm(&(c.denom() * &cleared[m - j].1))
        });
        let mut sum = vec![BigInt::zero(); m + 1];
        for (j, c) in &terms {
            let (ints, den) = &cleared[m - j];
            let w = c.numer() * (&common / (c.denom() * den));
            for (k, a) in ints.iter().enumerate() {
                if !a.is_zero() {
                    sum[k] += &w * a;
                }
            }
        }
        let (ints_m, den_m) = &cleared[m];
        // next = x p_m - sum / common, over lcm(den_m, common)
        let den = den_m.lcm(&common);
        let shift_factor = &den / den_m;
        let sum_factor = &den / &common;
        let mut next = vec![BigInt::zero(); m + 2];
        for (k, a) in ints_m.iter().enumerate() {
            next[k + 1] = a * &shift_factor;
        }
        for (k, s) in sum.iter().enumerate() {
            if !s.is_zero() {
                next[k] -= s * &sum_factor;
            }
        }
        let poly = if den.is_one() {
            Polynomial::from_bigints(next)
        } else {
            Polynomial::new(next.into_iter().map(|c| Rational::new(c, den.clone())).collect())
        };
        cleared.push(clear_poly(&poly));
        out.push(poly);
    }
    out
}

fn clear_poly(p: &Polynomial) -> (Vec<BigInt>, BigInt) {
    let den = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints = p.coeffs().iter().map(|c| c.numer() * (&den / c.denom())).collect();
    (ints, den)
}

/// `beta_(n+1) = 2x beta_n - (1 + x^2) beta_n' / (n + 1)`.
fn beta_derivative_recurrence(n_max: usize) -> Vec<Polynomial> {
    let two_x = Polynomial::from_ints(&[0, 2]);
    let q = Polynomial::one_plus_x_squared();
    let mut out = vec![Polynomial::one()];
    for n in 0..n_max {
        let cur = &out[n];
        let next = &two_x * cur - (&q * &cur.differentiate()).div_scalar(&rat_int(n as i64 + 1));
        out.push(next);
    }
    out
}

/// `P_0 = 1`, `P_(n+1) = (1 + x^2) P_n' - 2(n+1) x P_n`.
fn p_derivative_recurrence(n_max: usize) -> Vec<Polynomial> {
    let q = Polynomial::one_plus_x_squared();
    let mut out = vec![Polynomial::one()];
    for n in 0..n_max {
        let cur = &out[n];
        let next = &q * &cur.differentiate() - (Polynomial::x() * cur).scale(&rat_int(2 * (n as i64 + 1)));
        out.push(next);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossRow {
    pub n: usize,
    pub method_a: BuildMethod,
    pub method_b: BuildMethod,
    pub equal: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrossReport {
    pub kind: SequenceKind,
    pub n_max: usize,
    pub rows: Vec<CrossRow>,
}

impl CrossReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.equal)
    }

    pub fn first_mismatch(&self) -> Option<&CrossRow> {
        self.rows.iter().find(|r| !r.equal)
    }
}

/// Builds `kind` for `n <= n_max` by every supported route and compares
/// every pair of routes at every `n`. Stops at the first mismatch.
pub fn cross_validate(kind: SequenceKind, n_max: usize) -> CrossReport {
    let methods = kind.methods();
    let prefixes: Vec<Vec<Polynomial>> = methods
        .par_iter()
        .map(|&m| build_prefix(kind, n_max, m).expect("supported pair"))
        .collect();
    let mut rows = Vec::new();
    'outer: for n in 0..=n_max {
        for i in 0..methods.len() {
            for j in i + 1..methods.len() {
                let equal = prefixes[i][n] == prefixes[j][n];
                rows.push(CrossRow {
                    n,
                    method_a: methods[i],
                    method_b: methods[j],
                    equal,
                });
                if !equal {
                    break 'outer;
                }
            }
        }
    }
    CrossReport { kind, n_max, rows }
}

/// Family members `0..order` evaluated at `x`, via the explicit binomial
/// forms (independent of the generating functions).
fn family_values(family: Family, x: &Rational, order: usize) -> Vec<Rational> {
    let kind = SequenceKind::from(family);
    (0..order)
        .map(|n| build_direct(kind, n, BuildMethod::Explicit).evaluate(x))
        .collect()
}

/// Power-series quotient `num / den` truncated to `order` terms.
fn series_divide(num: &[Rational], den: &[Rational], order: usize) -> Vec<Rational> {
    assert!(!den[0].is_zero(), "series denominator must have a nonzero constant term");
    let mut out: Vec<Rational> = Vec::with_capacity(order);
    for k in 0..order {
        let mut acc = num.get(k).cloned().unwrap_or_else(Rational::zero);
        for j in 1..=k.min(den.len() - 1) {
            acc -= &den[j] * &out[k - j];
        }
        out.push(acc / &den[0]);
    }
    out
}

/// Truncated power-series coefficients of the ordinary generating function
/// `1 / (1 - 2xz + (1+x^2) z^2)` (beta) or `(1 - xz) / (...)` (alpha).
pub fn ogf_coefficients(family: Family, x: &Rational, order: usize) -> Vec<Rational> {
    let den = [Rational::one(), -(x * rat_int(2)), Rational::one() + x * x];
    let num = match family {
        Family::Beta => vec![Rational::one()],
        Family::Alpha => vec![Rational::one(), -x.clone()],
    };
    series_divide(&num, &den, order)
}

pub fn verify_ogf(family: Family, x: &Rational, order: usize) -> bool {
    order >= 1 && ogf_coefficients(family, x, order) == family_values(family, x, order)
}

fn truncated_mul(a: &[Rational], b: &[Rational], order: usize) -> Vec<Rational> {
    (0..order)
        .map(|k| {
            (0..=k).fold(Rational::zero(), |acc, i| match (a.get(i), b.get(k - i)) {
                (Some(x), Some(y)) => acc + x * y,
                _ => acc,
            })
        })
        .collect()
}

/// `n! [z^n]` of `(cos z + x sin z) e^(xz)` (beta) or `cos z e^(xz)`
/// (alpha), from exact truncated Taylor series.
pub fn egf_values(family: Family, x: &Rational, order: usize) -> Vec<Rational> {
    let inv_fact: Vec<Rational> = (0..order)
        .map(|k| Rational::new(BigInt::one(), factorial(k as u64)))
        .collect();
    let cos: Vec<Rational> = (0..order)
        .map(|k| match k % 4 {
            0 => inv_fact[k].clone(),
            2 => -inv_fact[k].clone(),
            _ => Rational::zero(),
        })
        .collect();
    let sin: Vec<Rational> = (0..order)
        .map(|k| match k % 4 {
            1 => inv_fact[k].clone(),
            3 => -inv_fact[k].clone(),
            _ => Rational::zero(),
        })
        .collect();
    let mut x_pow = Rational::one();
    let exp: Vec<Rational> = (0..order)
        .map(|k| {
            let v = &x_pow * &inv_fact[k];
            x_pow *= x;
            v
        })
        .collect();
    let left: Vec<Rational> = match family {
        Family::Beta => cos.iter().zip(&sin).map(|(c, s)| c + x * s).collect(),
        Family::Alpha => cos,
    };
    truncated_mul(&left, &exp, order)
        .into_iter()
        .enumerate()
        .map(|(n, c)| c * rat_big(factorial(n as u64)))
        .collect()
}

pub fn verify_egf(family: Family, x: &Rational, order: usize) -> bool {
    order >= 1 && egf_values(family, x, order) == family_values(family, x, order)
}

/// Exact polynomial identities relating the families. Each takes the
/// prefixes `beta_0..` and `alpha_0..` and the index to check.
pub mod identities {
    use super::*;

    /// `q(-x) = (-1)^n q(x)`.
    pub fn parity(q: &Polynomial, n: usize) -> bool {
        let r = q.reflect();
        if n % 2 == 0 {
            &r == q
        } else {
            r == -q
        }
    }

    /// `alpha_n = beta_n - x beta_(n-1)`, `n >= 1`.
    pub fn alpha_from_beta(beta: &[Polynomial], alpha: &[Polynomial], n: usize) -> bool {
        alpha[n] == &beta[n] - &(Polynomial::x() * &beta[n - 1])
    }

    /// `beta_n = x (1 + x^2) alpha_(n-1) - (x^2 - 1) alpha_n`, `n >= 1`.
    pub fn beta_from_alpha(beta: &[Polynomial], alpha: &[Polynomial], n: usize) -> bool {
        let x_q = Polynomial::from_ints(&[0, 1, 0, 1]);
        let x2_m1 = Polynomial::from_ints(&[-1, 0, 1]);
        beta[n] == &x_q * &alpha[n - 1] - &x2_m1 * &alpha[n]
    }

    /// `q_n^2 - q_(n-1) q_(n+1) = (1 + x^2)^e`; `q_(-1) = 0`.
    pub fn turan(seq: &[Polynomial], n: usize, exponent: u32) -> bool {
        let prev = if n == 0 { Polynomial::zero() } else { seq[n - 1].clone() };
        &seq[n] * &seq[n] - &prev * &seq[n + 1] == Polynomial::one_plus_x_squared().pow(exponent)
    }

    /// `P_n(x) = n! beta_n(-x)`.
    pub fn p_from_beta(p: &Polynomial, beta: &Polynomial, n: usize) -> bool {
        *p == beta.reflect().scale(&rat_big(factorial(n as u64)))
    }

    /// Every coefficient with `n - k` odd vanishes.
    pub fn alternating_zeros(q: &Polynomial, n: usize) -> bool {
        q.coeffs()
            .iter()
            .enumerate()
            .all(|(k, c)| (n - k) % 2 == 0 || c.is_zero())
    }
}
