//! High-order derivatives of `arctan` and `artanh`, root certificates,
//! ODE residuals and the derivative identities.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::chebyshev::{chebyshev, ChebyshevKind};
use crate::error::{Error, Result};
use crate::hp::{cot_rational_pi, decimal_digits, eval_abs_poly, eval_poly, HpReal};
use crate::numerics::{factorial, rat_big, rat_int, Rational};
use crate::poly::Polynomial;
use crate::sequences::{build, build_prefix, BuildMethod, Family, SequenceKind};

fn require_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("derivative order must be at least 1".into()));
    }
    Ok(())
}

/// `d^n/dx^n arctan(x) = P_(n-1)(x) / (1 + x^2)^n`, exactly.
pub fn arctan_nth_derivative(n: usize, x: &Rational) -> Result<Rational> {
    require_order(n)?;
    let p = build(SequenceKind::P, n - 1, BuildMethod::Explicit)?;
    let denom = num_traits::pow(Rational::one() + x * x, n);
    Ok(p.evaluate(x) / denom)
}

/// `d^n/dx^n artanh(x) = (n-1)! ((x+1)^n - (x-1)^n) / (2 (1 - x^2)^n)`.
pub fn artanh_nth_derivative(n: usize, x: &Rational) -> Result<Rational> {
    require_order(n)?;
    let one = Rational::one();
    let gap = &one - x * x;
    if gap.is_zero() {
        return Err(Error::PoleAt(x.clone()));
    }
    let diff = num_traits::pow(x + &one, n) - num_traits::pow(x - &one, n);
    let fact = rat_big(factorial(n as u64 - 1));
    Ok(fact * diff / (rat_int(2) * num_traits::pow(gap, n)))
}

/// `(n-1)! / (1 + x^2)^((n+1)/2) U_(n-1)(-x / sqrt(1 + x^2))`, evaluated
/// in fixed point at `bits` of precision.
pub fn chebyshev_derivative_form(n: usize, x: &Rational, bits: u32) -> Result<HpReal> {
    require_order(n)?;
    let wb = bits + 32;
    let q = HpReal::from_rational(&(Rational::one() + x * x), wb);
    let root = q.sqrt();
    let arg = &(-HpReal::from_rational(x, wb)) / &root;
    let u = eval_poly(&chebyshev(ChebyshevKind::SecondKind, n - 1), &arg);
    // (1 + x^2)^((n+1)/2) = root^(n+1)
    let denom = root.powi(n as u32 + 1);
    let fact = HpReal::from_int(factorial(n as u64 - 1), wb);
    Ok((&(&fact * &u) / &denom).with_bits(bits))
}

/// Numerical evidence that `value` approximates a simple zero of `poly`.
#[derive(Debug, Clone, Serialize)]
pub struct RootCertificate {
    /// `|p(r)| / sum_k |c_k| |r|^k`
    pub residual: f64,
    /// `|p'(r)| / sum_k |k c_k| |r|^(k-1)`
    pub derivative: f64,
    /// `p` takes opposite nonzero signs at `r - d` and `r + d`,
    /// `d = 2^(-bits/2) max(1, |r|)`, evaluated exactly.
    pub bracketed: bool,
    /// Threshold the residual is held to.
    pub tolerance: f64,
}

impl RootCertificate {
    pub fn is_simple_root(&self) -> bool {
        self.bracketed && self.residual <= self.tolerance && self.derivative > self.tolerance
    }
}

/// `10^-(digits(bits) - 10)`.
pub fn certificate_tolerance(bits: u32) -> f64 {
    10f64.powi(-(decimal_digits(bits) as i32 - 10))
}

pub fn certify_simple_root(poly: &Polynomial, value: &HpReal) -> RootCertificate {
    let bits = value.bits();
    let tiny = HpReal::ten_pow_neg(decimal_digits(bits) + 20, bits);
    let relative = |num: HpReal, den: HpReal| -> f64 {
        if den <= tiny {
            if num <= tiny {
                0.0
            } else {
                f64::INFINITY
            }
        } else {
            (&num / &den).to_f64()
        }
    };
    let residual = relative(eval_poly(poly, value).abs(), eval_abs_poly(poly, value));
    let dp = poly.differentiate();
    let derivative = relative(eval_poly(&dp, value).abs(), eval_abs_poly(&dp, value));

    let m = value.mantissa();
    let half = (bits / 2) as usize;
    let (lo, hi, k) = if m.abs() > (BigInt::one() << bits as usize) {
        // |r| > 1: r +- |r| 2^-half
        let base = m << half;
        (&base - m.abs(), &base + m.abs(), bits as usize + half)
    } else {
        let d = BigInt::one() << (bits as usize - half);
        (m - &d, m + &d, bits as usize)
    };
    let lo = sign_at_dyadic(poly, &lo, k);
    let hi = sign_at_dyadic(poly, &hi, k);
    let bracketed = lo != Sign::NoSign && hi != Sign::NoSign && lo != hi;
    RootCertificate {
        residual,
        derivative,
        bracketed,
        tolerance: certificate_tolerance(bits),
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Root {
    pub k: usize,
    pub closed_form: String,
    #[serde(skip)]
    pub value: HpReal,
    pub decimal: String,
    pub certificate: RootCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct RootSet {
    pub kind: Family,
    pub n: usize,
    pub roots: Vec<Root>,
}

impl RootSet {
    /// Every entry is certified and the values strictly decrease in `k`.
    pub fn is_certified(&self) -> bool {
        self.roots.len() == self.n
            && self.roots.iter().all(|r| r.certificate.is_simple_root())
            && self.roots.windows(2).all(|w| w[0].value > w[1].value)
    }

    /// `poly` changes sign strictly between consecutive roots, checked
    /// exactly at the rational midpoints.
    pub fn midpoint_signs_alternate(&self, poly: &Polynomial) -> bool {
        let mids: Vec<Rational> = self
            .roots
            .windows(2)
            .map(|w| (w[0].value.to_rational() + w[1].value.to_rational()) / rat_int(2))
            .collect();
        let signs: Vec<Rational> = mids.iter().map(|m| poly.evaluate(m)).collect();
        signs.iter().all(|s| !s.is_zero())
            && signs.windows(2).all(|w| w[0].is_negative() != w[1].is_negative())
    }
}

fn pi_fraction(p: u64, q: u64) -> String {
    let num = if p == 1 { "pi".to_string() } else { format!("{p}pi") };
    if q == 1 {
        format!("cot({num})")
    } else {
        format!("cot({num}/{q})")
    }
}

/// Sign of `p(m / 2^k)`, exactly, by integer Horner on the cleared and
/// homogenised polynomial `sum_j a_j m^j 2^(k (d - j))`.
fn sign_at_dyadic(p: &Polynomial, m: &BigInt, k: usize) -> Sign {
    let Some(d) = p.degree() else {
        return Sign::NoSign;
    };
    let lcm = p
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let coeffs: Vec<BigInt> = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&lcm / c.denom()))
        .collect();
    let mut acc = coeffs[d].clone();
    for j in (0..d).rev() {
        acc = acc * m + (&coeffs[j] << (k * (d - j)));
    }
    acc.sign()
}

/// Closed-form zeros `cot(k pi / (n+1))` (beta) or `cot((2k-1) pi / (2n))`
/// (alpha), each certified against the exactly built polynomial.
pub fn roots(kind: Family, n: usize, bits: u32) -> Result<RootSet> {
    if n == 0 {
        return Err(Error::Domain("roots need degree n >= 1".into()));
    }
    let poly = build(kind.into(), n, BuildMethod::Explicit)?;
    let digits = (decimal_digits(bits) as usize).saturating_sub(2).max(1);
    let roots = (1..=n)
        .map(|k| {
            let (p, q) = match kind {
                Family::Beta => (k as u64, n as u64 + 1),
                Family::Alpha => (2 * k as u64 - 1, 2 * n as u64),
            };
            let value = cot_rational_pi(p, q, bits);
            Root {
                k,
                closed_form: pi_fraction(p, q),
                decimal: value.to_decimal(digits),
                certificate: certify_simple_root(&poly, &value),
                value,
            }
        })
        .collect();
    Ok(RootSet { kind, n, roots })
}

/// `(1+x^2) q'' - 2 m x q' + c q` with `(m, c) = (n, n(n+1))` for beta and
/// `(n-1, n(n-1))` for alpha. Identically zero when the ODE holds.
pub fn ode_residual(kind: Family, n: usize) -> Result<Polynomial> {
    let q = build(kind.into(), n, BuildMethod::Explicit)?;
    Ok(ode_residual_of(kind, n, &q))
}

pub fn ode_residual_of(kind: Family, n: usize, q: &Polynomial) -> Polynomial {
    let n_i = n as i64;
    let (m, c) = match kind {
        Family::Beta => (n_i, n_i * (n_i + 1)),
        Family::Alpha => (n_i - 1, n_i * (n_i - 1)),
    };
    let d1 = q.differentiate();
    let d2 = d1.differentiate();
    &Polynomial::one_plus_x_squared() * &d2 - (Polynomial::x() * &d1).scale(&rat_int(2 * m))
        + q.scale(&rat_int(c))
}

/// `q_n' = (n+1) q_(n-1)` (beta) or `n q_(n-1)` (alpha), `n >= 1`.
pub fn derivative_identity_check(kind: Family, n: usize) -> Result<bool> {
    require_order(n)?;
    let seq = build_prefix(kind.into(), n, BuildMethod::Explicit)?;
    Ok(derivative_identity_holds(kind, &seq, n))
}

pub fn derivative_identity_holds(kind: Family, seq: &[Polynomial], n: usize) -> bool {
    let factor = match kind {
        Family::Beta => n as i64 + 1,
        Family::Alpha => n as i64,
    };
    seq[n].differentiate() == seq[n - 1].scale(&rat_int(factor))
}
