//! Binary fixed-point reals for the places where irrational values appear
//! (cotangent roots, reference arctangent, Chebyshev forms). A value is an
//! integer mantissa scaled by `2^-bits`; all elementary functions run with
//! extra guard bits and round back to the caller's precision.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::numerics::Rational;
use crate::poly::Polynomial;

pub const DEFAULT_BITS: u32 = 128;
const GUARD_BITS: u32 = 48;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HpReal {
    mantissa: BigInt,
    bits: u32,
}

impl HpReal {
    pub fn zero(bits: u32) -> Self {
        HpReal {
            mantissa: BigInt::zero(),
            bits,
        }
    }

    pub fn from_int(v: impl Into<BigInt>, bits: u32) -> Self {
        HpReal {
            mantissa: v.into() << bits as usize,
            bits,
        }
    }

    /// Nearest representable value (ties away from zero).
    pub fn from_rational(r: &Rational, bits: u32) -> Self {
        let scaled = r.numer() << bits as usize;
        HpReal {
            mantissa: div_round(&scaled, r.denom()),
            bits,
        }
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// The integer `m` with `self = m / 2^bits`.
    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    /// The exact dyadic rational this value represents.
    pub fn to_rational(&self) -> Rational {
        Rational::new(self.mantissa.clone(), BigInt::one() << self.bits as usize)
    }

    pub fn to_f64(&self) -> f64 {
        let mag_bits = self.mantissa.bits() as i64;
        let shift = mag_bits - 60;
        if shift > 0 {
            let m = (&self.mantissa >> shift as usize).to_f64().unwrap_or(0.0);
            m * 2f64.powi((shift - self.bits as i64) as i32)
        } else {
            self.mantissa.to_f64().unwrap_or(0.0) * 2f64.powi(-(self.bits as i32))
        }
    }

    pub fn with_bits(&self, bits: u32) -> Self {
        let mantissa = match bits.cmp(&self.bits) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (bits - self.bits) as usize,
            Ordering::Less => shr_round(&self.mantissa, self.bits - bits),
        };
        HpReal { mantissa, bits }
    }

    pub fn abs(&self) -> Self {
        HpReal {
            mantissa: self.mantissa.abs(),
            bits: self.bits,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.mantissa.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// `self * 2^k` for signed `k`.
    pub fn mul_pow2(&self, k: i64) -> Self {
        let mantissa = if k >= 0 {
            &self.mantissa << k as usize
        } else {
            shr_round(&self.mantissa, (-k) as u32)
        };
        HpReal {
            mantissa,
            bits: self.bits,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Self {
        HpReal {
            mantissa: &self.mantissa * k,
            bits: self.bits,
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Self {
        HpReal {
            mantissa: div_round(&self.mantissa, k),
            bits: self.bits,
        }
    }

    pub fn sqrt(&self) -> Self {
        assert!(!self.is_negative(), "square root of a negative value");
        let g = self.with_bits(self.bits + GUARD_BITS);
        let root = (&g.mantissa << g.bits as usize).sqrt();
        HpReal {
            mantissa: root,
            bits: g.bits,
        }
        .with_bits(self.bits)
    }

    pub fn powi(&self, e: u32) -> Self {
        let mut acc = HpReal::from_int(1, self.bits);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Decimal rendering with `digits` fractional digits (truncated toward
    /// zero after rounding the last place).
    pub fn to_decimal(&self, digits: usize) -> String {
        let ten_pow = num_traits::pow(BigInt::from(10), digits);
        let scaled = div_round(&(&self.mantissa * &ten_pow), &(BigInt::one() << self.bits as usize));
        let negative = scaled.is_negative();
        let (int_part, frac_part) = scaled.abs().div_rem(&ten_pow);
        let sign = if negative { "-" } else { "" };
        if digits == 0 {
            format!("{sign}{int_part}")
        } else {
            format!("{sign}{int_part}.{:0>width$}", frac_part.to_string(), width = digits)
        }
    }

    /// `10^-d` at the given precision.
    pub fn ten_pow_neg(d: u32, bits: u32) -> Self {
        HpReal::from_rational(
            &Rational::new(BigInt::one(), num_traits::pow(BigInt::from(10), d as usize)),
            bits,
        )
    }
}

impl PartialOrd for HpReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for HpReal {
    fn cmp(&self, other: &Self) -> Ordering {
        let bits = self.bits.max(other.bits);
        self.with_bits(bits)
            .mantissa
            .cmp(&other.with_bits(bits).mantissa)
    }
}

impl fmt::Display for HpReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(12);
        write!(f, "{}", self.to_decimal(digits))
    }
}

fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = a.div_rem(b);
    if (r.abs() << 1usize) >= b.abs() {
        if (a.sign() == Sign::Minus) != (b.sign() == Sign::Minus) {
            q - 1
        } else {
            q + 1
        }
    } else {
        q
    }
}

fn shr_round(a: &BigInt, k: u32) -> BigInt {
    if k == 0 {
        return a.clone();
    }
    div_round(a, &(BigInt::one() << k as usize))
}

fn check_bits(a: &HpReal, b: &HpReal) {
    assert_eq!(a.bits, b.bits, "mixed-precision arithmetic");
}

impl<'a> Add<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn add(self, rhs: &'a HpReal) -> HpReal {
        check_bits(self, rhs);
        HpReal {
            mantissa: &self.mantissa + &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl<'a> Sub<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn sub(self, rhs: &'a HpReal) -> HpReal {
        check_bits(self, rhs);
        HpReal {
            mantissa: &self.mantissa - &rhs.mantissa,
            bits: self.bits,
        }
    }
}

impl<'a> Mul<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn mul(self, rhs: &'a HpReal) -> HpReal {
        check_bits(self, rhs);
        HpReal {
            mantissa: shr_round(&(&self.mantissa * &rhs.mantissa), self.bits),
            bits: self.bits,
        }
    }
}

impl<'a> Div<&'a HpReal> for &'a HpReal {
    type Output = HpReal;
    fn div(self, rhs: &'a HpReal) -> HpReal {
        check_bits(self, rhs);
        assert!(!rhs.is_zero(), "division by zero");
        HpReal {
            mantissa: div_round(&(&self.mantissa << self.bits as usize), &rhs.mantissa),
            bits: self.bits,
        }
    }
}

impl Neg for &HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        HpReal {
            mantissa: -&self.mantissa,
            bits: self.bits,
        }
    }
}

impl Neg for HpReal {
    type Output = HpReal;
    fn neg(self) -> HpReal {
        -&self
    }
}

/// `atan(1/k)` for integer `k >= 2` by its alternating Taylor series, in
/// pure integer arithmetic.
fn atan_inv(k: u64, bits: u32) -> BigInt {
    let one = BigInt::one() << bits as usize;
    let k = BigInt::from(k);
    let k2 = &k * &k;
    let mut power = one / &k;
    let mut sum = power.clone();
    let mut n = 1u64;
    loop {
        power /= &k2;
        if power.is_zero() {
            break;
        }
        let term = &power / BigInt::from(2 * n + 1);
        if n % 2 == 1 {
            sum -= term;
        } else {
            sum += term;
        }
        n += 1;
    }
    sum
}

/// π by Machin's formula `16 atan(1/5) - 4 atan(1/239)`.
pub fn pi(bits: u32) -> HpReal {
    let wb = bits + GUARD_BITS;
    let m = atan_inv(5, wb) * 16 - atan_inv(239, wb) * 4;
    HpReal { mantissa: m, bits: wb }.with_bits(bits)
}

/// `(sin t, cos t)`; the argument is halved until small, Taylor series are
/// summed, then the double-angle formulas restore it.
pub fn sin_cos(t: &HpReal) -> (HpReal, HpReal) {
    let bits = t.bits;
    let wb = bits + GUARD_BITS + 16;
    let mut arg = t.with_bits(wb);
    let mut halvings = 0u32;
    let limit = HpReal::from_rational(&Rational::new(BigInt::one(), BigInt::from(8)), wb);
    while arg.abs() > limit {
        arg = arg.mul_pow2(-1);
        halvings += 1;
    }
    let x2 = &arg * &arg;
    let mut sin = arg.clone();
    let mut cos = HpReal::from_int(1, wb);
    let mut term = arg.clone();
    let mut k = 1u64;
    loop {
        term = (&term * &x2).div_int(&BigInt::from((2 * k) * (2 * k + 1)));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            sin = &sin - &term;
        } else {
            sin = &sin + &term;
        }
        k += 1;
    }
    let mut term = HpReal::from_int(1, wb);
    let mut k = 1u64;
    loop {
        term = (&term * &x2).div_int(&BigInt::from((2 * k - 1) * (2 * k)));
        if term.is_zero() {
            break;
        }
        if k % 2 == 1 {
            cos = &cos - &term;
        } else {
            cos = &cos + &term;
        }
        k += 1;
    }
    let one = HpReal::from_int(1, wb);
    for _ in 0..halvings {
        let s = (&sin * &cos).mul_pow2(1);
        let c = &(&cos * &cos).mul_pow2(1) - &one;
        sin = s;
        cos = c;
    }
    (sin.with_bits(bits), cos.with_bits(bits))
}

pub fn cot(t: &HpReal) -> HpReal {
    let g = t.with_bits(t.bits + GUARD_BITS);
    let (s, c) = sin_cos(&g);
    (&c / &s).with_bits(t.bits)
}

pub fn tan(t: &HpReal) -> HpReal {
    let g = t.with_bits(t.bits + GUARD_BITS);
    let (s, c) = sin_cos(&g);
    (&s / &c).with_bits(t.bits)
}

/// `cot(p π / q)` for integers with `0 < p/q < 1`.
pub fn cot_rational_pi(p: u64, q: u64, bits: u32) -> HpReal {
    let wb = bits + GUARD_BITS;
    let angle = pi(wb).mul_int(&BigInt::from(p)).div_int(&BigInt::from(q));
    cot(&angle).with_bits(bits)
}

/// Arctangent: reflection to `|x| <= 1`, three half-angle reductions
/// `x -> x / (1 + sqrt(1 + x^2))`, then the Taylor series.
pub fn atan(x: &HpReal) -> HpReal {
    let bits = x.bits;
    let wb = bits + GUARD_BITS + 16;
    let one = HpReal::from_int(1, wb);
    let mut v = x.with_bits(wb);
    let negative = v.is_negative();
    v = v.abs();
    let invert = v > one;
    if invert {
        v = &one / &v;
    }
    const REDUCTIONS: i64 = 3;
    for _ in 0..REDUCTIONS {
        let root = (&one + &(&v * &v)).sqrt();
        v = &v / &(&one + &root);
    }
    let v2 = &v * &v;
    let mut sum = v.clone();
    let mut power = v.clone();
    let mut k = 1u64;
    loop {
        power = &power * &v2;
        if power.is_zero() {
            break;
        }
        let term = power.div_int(&BigInt::from(2 * k + 1));
        if k % 2 == 1 {
            sum = &sum - &term;
        } else {
            sum = &sum + &term;
        }
        k += 1;
    }
    let mut result = sum.mul_pow2(REDUCTIONS);
    if invert {
        result = &pi(wb).mul_pow2(-1) - &result;
    }
    if negative {
        result = -result;
    }
    result.with_bits(bits)
}

pub fn atan_rational(x: &Rational, bits: u32) -> HpReal {
    atan(&HpReal::from_rational(x, bits + GUARD_BITS)).with_bits(bits)
}

/// Horner evaluation of an exact polynomial at a fixed-point argument.
pub fn eval_poly(p: &Polynomial, x: &HpReal) -> HpReal {
    let bits = x.bits;
    p.coeffs().iter().rev().fold(HpReal::zero(bits), |acc, c| {
        &(&acc * x) + &HpReal::from_rational(c, bits)
    })
}

/// `sum_k |c_k| |x|^k`, the natural scale for a residual `p(x)`.
pub fn eval_abs_poly(p: &Polynomial, x: &HpReal) -> HpReal {
    let bits = x.bits;
    let ax = x.abs();
    p.coeffs().iter().rev().fold(HpReal::zero(bits), |acc, c| {
        &(&acc * &ax) + &HpReal::from_rational(&c.abs(), bits)
    })
}

/// `log10(2) * bits`, rounded down: the decimal digits a precision carries.
pub fn decimal_digits(bits: u32) -> u32 {
    (bits as f64 * std::f64::consts::LOG10_2).floor() as u32
}
