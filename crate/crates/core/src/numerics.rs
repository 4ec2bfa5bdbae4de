//! Exact integer and rational arithmetic helpers, Bernoulli numbers and
//! Gaussian (a + bi) values over an arbitrary commutative ring.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision fraction, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn rat_big(v: BigInt) -> Rational {
    Rational::from_integer(v)
}

pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// Binomial coefficient `C(n, k)`, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn pow2(e: u64) -> BigInt {
    BigInt::one() << e as usize
}

/// Canonical text form: `p/q` with `q > 0`, or `p` when `q = 1`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exact square root of a rational, if it is a perfect square.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Bernoulli numbers `B_0..B_{len-1}` defined by
/// `sum_{k=0}^{n} C(n+1, k) B_k = 0` for `n >= 1`, `B_0 = 1`.
///
/// The sign of `B_1` under this recurrence is `-1/2`; nothing in this crate
/// consumes `B_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    /// Generates the table from scratch through index `max_index`.
    pub fn generate(max_index: usize) -> Self {
        let mut table = BernoulliTable {
            values: vec![Rational::one()],
        };
        table.extend_to(max_index);
        table
    }

    fn extend_to(&mut self, max_index: usize) {
        while self.values.len() <= max_index {
            let m = self.values.len() as u64;
            let sum = self
                .values
                .iter()
                .enumerate()
                .fold(Rational::zero(), |acc, (k, b)| {
                    acc + rat_big(binomial(m + 1, k as u64)) * b
                });
            self.values.push(-sum / rat_big(BigInt::from(m + 1)));
        }
    }

    pub fn get(&self, n: usize) -> Option<&Rational> {
        self.values.get(n)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }
}

fn shared_table() -> &'static RwLock<BernoulliTable> {
    static TABLE: OnceLock<RwLock<BernoulliTable>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(BernoulliTable::generate(32)))
}

/// Returns `B_n`, extending the process-wide cache as needed.
///
/// Extension happens under the write lock, so readers never see a partial
/// entry.
pub fn bernoulli(n: usize) -> Rational {
    {
        let table = shared_table().read().expect("bernoulli cache poisoned");
        if let Some(b) = table.get(n) {
            return b.clone();
        }
    }
    let mut table = shared_table().write().expect("bernoulli cache poisoned");
    table.extend_to(n);
    table.values[n].clone()
}

/// Snapshot of the cached Bernoulli numbers.
pub fn bernoulli_cache_snapshot() -> BernoulliTable {
    shared_table()
        .read()
        .expect("bernoulli cache poisoned")
        .clone()
}

/// `a + b i` over a commutative ring `T`.
///
/// With `T = BigInt` this is a Gaussian integer; with `T = Polynomial` it
/// carries the real and imaginary parts of `(x + i)^n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gaussian<T> {
    pub re: T,
    pub im: T,
}

pub type GaussianInt = Gaussian<BigInt>;

impl<T> Gaussian<T> {
    pub fn new(re: T, im: T) -> Self {
        Gaussian { re, im }
    }
}

impl<T: Zero + One> Gaussian<T> {
    pub fn one() -> Self {
        Gaussian::new(T::one(), T::zero())
    }
}

impl<T> Gaussian<T>
where
    T: Clone + Neg<Output = T>,
{
    pub fn conj(&self) -> Self {
        Gaussian::new(self.re.clone(), -self.im.clone())
    }
}

impl<T> Mul for &Gaussian<T>
where
    T: Clone + Mul<Output = T> + Add<Output = T> + Sub<Output = T>,
{
    type Output = Gaussian<T>;

    fn mul(self, rhs: &Gaussian<T>) -> Gaussian<T> {
        let (a, b) = (self.re.clone(), self.im.clone());
        let (c, d) = (rhs.re.clone(), rhs.im.clone());
        Gaussian::new(
            a.clone() * c.clone() - b.clone() * d.clone(),
            a * d + b * c,
        )
    }
}

impl<T> Add for &Gaussian<T>
where
    T: Clone + Add<Output = T>,
{
    type Output = Gaussian<T>;

    fn add(self, rhs: &Gaussian<T>) -> Gaussian<T> {
        Gaussian::new(self.re.clone() + rhs.re.clone(), self.im.clone() + rhs.im.clone())
    }
}

/// `base^n` by binary exponentiation.
pub fn gaussian_pow<T>(base: &Gaussian<T>, n: u64) -> Gaussian<T>
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T>,
{
    let mut result = Gaussian::<T>::one();
    let mut square = base.clone();
    let mut e = n;
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &square;
        }
        e >>= 1;
        if e > 0 {
            square = &square * &square;
        }
    }
    result
}
