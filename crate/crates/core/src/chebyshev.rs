//! Chebyshev polynomials, the homogenised bridges
//! `beta_n = (1+x^2)^(n/2) U_n(x / sqrt(1+x^2))` and
//! `alpha_n = (1+x^2)^(n/2) T_n(x / sqrt(1+x^2))`, and tridiagonal
//! determinants.

use std::fmt;
use std::ops::{Mul, Sub};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hp::{cot_rational_pi, eval_abs_poly, eval_poly, HpReal};
use crate::numerics::{rat, rational_sqrt, Rational};
use crate::poly::Polynomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ChebyshevKind {
    FirstKind,
    SecondKind,
}

impl fmt::Display for ChebyshevKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ChebyshevKind::FirstKind => "T",
            ChebyshevKind::SecondKind => "U",
        })
    }
}

impl FromStr for ChebyshevKind {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "T" | "t" | "first" => Ok(ChebyshevKind::FirstKind),
            "U" | "u" | "second" => Ok(ChebyshevKind::SecondKind),
            other => Err(format!("unknown Chebyshev kind `{other}`")),
        }
    }
}

/// `T_0..T_n` or `U_0..U_n` via `p_(k+1) = 2x p_k - p_(k-1)`.
pub fn chebyshev_prefix(kind: ChebyshevKind, n_max: usize) -> Vec<Polynomial> {
    let two_x = Polynomial::from_ints(&[0, 2]);
    let first = match kind {
        ChebyshevKind::FirstKind => Polynomial::x(),
        ChebyshevKind::SecondKind => two_x.clone(),
    };
    let mut out = vec![Polynomial::one()];
    if n_max >= 1 {
        out.push(first);
    }
    for k in 2..=n_max {
        let next = &two_x * &out[k - 1] - &out[k - 2];
        out.push(next);
    }
    out
}

pub fn chebyshev(kind: ChebyshevKind, n: usize) -> Polynomial {
    chebyshev_prefix(kind, n).pop().expect("nonempty prefix")
}

/// `(1+x^2)^(n/2) c(x / sqrt(1+x^2))` for a degree-`n` polynomial `c`
/// whose monomials all have the parity of `n`: each `z^m` becomes
/// `x^m (1+x^2)^((n-m)/2)`.
fn homogenize(c: &Polynomial, n: usize) -> Polynomial {
    let q = Polynomial::one_plus_x_squared();
    let mut q_pows = vec![Polynomial::one()];
    for k in 1..=n / 2 {
        let next = &q_pows[k - 1] * &q;
        q_pows.push(next);
    }
    let mut out = Polynomial::zero();
    for (m, coeff) in c.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        assert_eq!((n - m) % 2, 0, "mixed-parity Chebyshev polynomial");
        let term = q_pows[(n - m) / 2].shift(m).scale(coeff);
        out = out + term;
    }
    out
}

pub fn beta_from_chebyshev(n: usize) -> Polynomial {
    homogenize(&chebyshev(ChebyshevKind::SecondKind, n), n)
}

pub fn alpha_from_chebyshev(n: usize) -> Polynomial {
    homogenize(&chebyshev(ChebyshevKind::FirstKind, n), n)
}

/// Determinants `D_0..D_n` of the leading `k x k` blocks of a tridiagonal
/// matrix with top-left entry `first`, remaining diagonal `diag`,
/// subdiagonal `sub` and superdiagonal `sup`:
/// `D_0 = 1`, `D_1 = first`, `D_k = diag D_(k-1) - sub sup D_(k-2)`.
pub fn tridiagonal_prefix<T>(first: &T, diag: &T, sub: &T, sup: &T, n_max: usize) -> Vec<T>
where
    T: Clone + One + Mul<Output = T> + Sub<Output = T>,
{
    let off = sub.clone() * sup.clone();
    let mut out = vec![T::one()];
    if n_max >= 1 {
        out.push(first.clone());
    }
    for k in 2..=n_max {
        let next = diag.clone() * out[k - 1].clone() - off.clone() * out[k - 2].clone();
        out.push(next);
    }
    out
}

/// `n x n` determinant with constant diagonal `b`, superdiagonal `c` and
/// subdiagonal `a`.
pub fn tridiag_det(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Result<Rational> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(Error::ZeroParameter);
    }
    Ok(tridiagonal_prefix(b, b, a, c, n).pop().expect("nonempty prefix"))
}

/// `s^n U_n(b / (2s))` with `s = sqrt(ac)`, available when `ac` is the
/// square of a nonzero rational.
pub fn tridiag_chebyshev_form(a: &Rational, b: &Rational, c: &Rational, n: usize) -> Option<Rational> {
    let s = rational_sqrt(&(a * c))?;
    if s.is_zero() {
        return None;
    }
    let arg = b / (&s * rat(2, 1));
    let u = chebyshev(ChebyshevKind::SecondKind, n).evaluate(&arg);
    Some(num_traits::pow(s, n) * u)
}

/// Checks `beta_n(cot(k pi / (n+1))) ~ 0`: the residual must fall below
/// `1e-9` times `max(1, sum_j |j c_j| |r|^(j-1))`.
pub fn trig_spot_check(n: usize, k: usize) -> bool {
    trig_spot_check_at(n, k, crate::hp::DEFAULT_BITS)
}

pub fn trig_spot_check_at(n: usize, k: usize, bits: u32) -> bool {
    if k == 0 || k > n {
        return false;
    }
    let beta = beta_from_chebyshev(n);
    let r = cot_rational_pi(k as u64, n as u64 + 1, bits);
    let value = eval_poly(&beta, &r).abs();
    let one = HpReal::from_int(1, bits);
    let scale = eval_abs_poly(&beta.differentiate(), &r).max(one);
    value <= &HpReal::ten_pow_neg(9, bits) * &scale
}
