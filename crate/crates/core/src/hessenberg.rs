//! The Hessenberg matrix of the extended monic recurrence
//! `pi_(n+1) = x pi_n - sum_j [n, j] pi_(n-j)`, whose characteristic
//! polynomial is `pi_n` and whose eigenvalues are `cot(k pi / (n+1))`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::calculus::{certify_simple_root, RootCertificate};
use crate::hp::cot_rational_pi;
use crate::numerics::{bernoulli, binomial, format_rational, pow2, rat_big, rat_int, Rational};
use crate::poly::Polynomial;
use crate::text::{parse_rational, ParseError};

/// Default largest `n` for exact Hessenberg verification.
pub const DEFAULT_MAX_N: usize = 12;

/// Bracket coefficient `[n, j] = 2^(j+1) / (j+1) C(n, j) |B_(j+1)|` for
/// `1 <= j <= n`, and `0` for `j = 0`. Vanishes for even `j >= 2`.
pub fn bracket(n: usize, j: usize) -> Rational {
    if j == 0 || j > n {
        return Rational::zero();
    }
    debug_assert!(j + 1 >= 2, "B_1 is never consumed");
    let factor = Rational::new(pow2(j as u64 + 1), BigInt::from(j + 1));
    factor * rat_big(binomial(n as u64, j as u64)) * bernoulli(j + 1).abs()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    n: usize,
    entries: Vec<Vec<Rational>>,
}

impl RationalMatrix {
    pub fn new(entries: Vec<Vec<Rational>>) -> Option<Self> {
        let n = entries.len();
        if entries.iter().any(|row| row.len() != n) {
            return None;
        }
        Some(RationalMatrix { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        RationalMatrix {
            n,
            entries: vec![vec![Rational::zero(); n]; n],
        }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rational>] {
        &self.entries
    }

    pub fn trace(&self) -> Rational {
        (0..self.n).fold(Rational::zero(), |acc, i| acc + &self.entries[i][i])
    }

    /// Zero below the first subdiagonal.
    pub fn is_hessenberg(&self) -> bool {
        (0..self.n).all(|i| (0..i.saturating_sub(1)).all(|j| self.entries[i][j].is_zero()))
    }

    pub fn has_unit_subdiagonal(&self) -> bool {
        (1..self.n).all(|i| self.entries[i][i - 1].is_one())
    }

    pub fn to_json(&self) -> String {
        let doc = MatrixJson {
            n: self.n,
            entries: self
                .entries
                .iter()
                .map(|row| row.iter().map(format_rational).collect())
                .collect(),
        };
        serde_json::to_string(&doc).expect("matrix serialises")
    }

    pub fn from_json(text: &str) -> Result<Self, ParseError> {
        let doc: MatrixJson = serde_json::from_str(text).map_err(|e| ParseError::Json(e.to_string()))?;
        if doc.entries.len() != doc.n {
            return Err(ParseError::Shape(format!(
                "declared n = {} but {} rows",
                doc.n,
                doc.entries.len()
            )));
        }
        let entries = doc
            .entries
            .iter()
            .map(|row| {
                if row.len() != doc.n {
                    return Err(ParseError::Shape(format!("row of length {} in {}x{} matrix", row.len(), doc.n, doc.n)));
                }
                row.iter().map(|s| parse_rational(s)).collect()
            })
            .collect::<Result<Vec<Vec<Rational>>, ParseError>>()?;
        Ok(RationalMatrix { n: doc.n, entries })
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct MatrixJson {
    n: usize,
    entries: Vec<Vec<String>>,
}

/// `H_n`: column `k` holds `[k, 0]` on the diagonal and `[k, k - i]` in
/// row `i < k` above it; ones on the subdiagonal.
pub fn build_h(n: usize) -> RationalMatrix {
    let mut m = RationalMatrix::zeros(n);
    for k in 0..n {
        for i in 0..=k {
            m.entries[i][k] = bracket(k, k - i);
        }
        if k + 1 < n {
            m.entries[k + 1][k] = Rational::one();
        }
    }
    m
}

/// `det(xI - M)`. Hessenberg input uses the `O(n^3)` recurrence
/// `p_(k+1) = (x - h_kk) p_k - sum_(i<k) h_ik (prod_(m=i+1)^k h_(m,m-1)) p_i`;
/// anything else falls back to Faddeev-LeVerrier.
pub fn charpoly(m: &RationalMatrix) -> Polynomial {
    if m.is_hessenberg() {
        hessenberg_charpoly(m)
    } else {
        faddeev_leverrier(m)
    }
}

fn hessenberg_charpoly(m: &RationalMatrix) -> Polynomial {
    let h = &m.entries;
    let mut p = vec![Polynomial::one()];
    for k in 0..m.n {
        let mut next = (Polynomial::x() - Polynomial::constant(h[k][k].clone())) * &p[k];
        let mut sub_prod = Rational::one();
        for i in (0..k).rev() {
            sub_prod *= &h[i + 1][i];
            if sub_prod.is_zero() {
                break;
            }
            let c = &h[i][k] * &sub_prod;
            if !c.is_zero() {
                next = next - p[i].scale(&c);
            }
        }
        p.push(next);
    }
    p.pop().expect("nonempty")
}

/// `c_(n-k) = -tr(M M_k) / k` with `M_0 = I`, `M_k = M M_(k-1) + c_(n-k+1) I`.
pub fn faddeev_leverrier(m: &RationalMatrix) -> Polynomial {
    let n = m.n;
    let mul = |a: &[Vec<Rational>], b: &[Vec<Rational>]| -> Vec<Vec<Rational>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(Rational::zero(), |acc, l| acc + &a[i][l] * &b[l][j]))
                    .collect()
            })
            .collect()
    };
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk: Vec<Vec<Rational>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }).collect())
        .collect();
    for k in 1..=n {
        let am = mul(&m.entries, &mk);
        let tr = (0..n).fold(Rational::zero(), |acc, i| acc + &am[i][i]);
        let c = -tr / rat_int(k as i64);
        mk = am;
        for (i, row) in mk.iter_mut().enumerate() {
            row[i] += &c;
        }
        coeffs[n - k] = c;
    }
    Polynomial::new(coeffs)
}

#[derive(Debug, Clone, Serialize)]
pub struct EigenReport {
    pub n: usize,
    pub certificates: Vec<RootCertificate>,
}

impl EigenReport {
    pub fn passed(&self) -> bool {
        self.certificates.len() == self.n && self.certificates.iter().all(RootCertificate::is_simple_root)
    }
}

/// Certifies each `cot(k pi / (n+1))` as a simple root of
/// `charpoly(H_n)`.
pub fn eigen_report(n: usize, bits: u32) -> EigenReport {
    let p = charpoly(&build_h(n));
    let certificates = (1..=n)
        .map(|k| certify_simple_root(&p, &cot_rational_pi(k as u64, n as u64 + 1, bits)))
        .collect();
    EigenReport { n, certificates }
}

pub fn eigen_check(n: usize, bits: u32) -> bool {
    n >= 1 && eigen_report(n, bits).passed()
}

/// Largest absolute entry, for reporting growth.
pub fn max_abs_entry(m: &RationalMatrix) -> Rational {
    m.entries
        .iter()
        .flatten()
        .map(|e| e.abs())
        .max()
        .unwrap_or_else(Rational::zero)
}
