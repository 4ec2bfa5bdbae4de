//! Verification driver: runs every identity and cross-check up to a
//! chosen index and collects one row per (check, n).

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::calculus::{
    arctan_nth_derivative, chebyshev_derivative_form, derivative_identity_holds, ode_residual_of, roots,
};
use crate::chebyshev::{alpha_from_chebyshev, beta_from_chebyshev, tridiag_chebyshev_form, tridiag_det};
use crate::connections::{
    fibonacci_poly, fibonacci_upper_index_variant, lucas_poly, matching_poly, tan_alternative_form_holds,
    tan_multiple, tan_reference, FibonacciMethod, GraphKind, MatchingMethod,
};
use crate::error::{Error, Result};
use crate::hessenberg::{bracket, build_h, charpoly, eigen_check};
use crate::hp::{HpReal, DEFAULT_BITS};
use crate::numerics::{rat, rat_int, Rational};
use crate::poly::Polynomial;
use crate::sequences::{
    build_prefix, cross_validate, identities, verify_egf, verify_ogf, BuildMethod, Family, SequenceKind,
};
use crate::series::{partial_sum, pi_approx, remainder_bound, SeriesKind};

pub const HESSENBERG_CAP: usize = 12;
pub const EIGEN_CAP: usize = 8;
pub const ENUMERATION_CAP: usize = 14;
pub const FIBONACCI_CAP: usize = 12;
pub const GF_ORDER_CAP: usize = 40;
pub const DERIVATIVE_FORM_CAP: usize = 30;
pub const TAN_SPOT_CAP: usize = 30;
pub const SERIES_TERMS: usize = 120;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    All,
    Identities,
    Cross,
    Connections,
    Hessenberg,
    Series,
}

impl Suite {
    pub const PARTS: [Suite; 5] = [
        Suite::Identities,
        Suite::Cross,
        Suite::Connections,
        Suite::Hessenberg,
        Suite::Series,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::Identities => "identities",
            Suite::Cross => "cross",
            Suite::Connections => "connections",
            Suite::Hessenberg => "hessenberg",
            Suite::Series => "series",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [Suite::All]
            .into_iter()
            .chain(Suite::PARTS)
            .find(|suite| suite.name() == s.to_ascii_lowercase())
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckRow {
    pub suite: Suite,
    pub check: String,
    pub n: usize,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub suite: Suite,
    pub max_n: usize,
    pub passed: bool,
    pub rows: Vec<CheckRow>,
}

impl VerifyReport {
    pub fn failures(&self) -> impl Iterator<Item = &CheckRow> {
        self.rows.iter().filter(|r| !r.pass)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let _ = writeln!(
                out,
                "{} {:<12} {:<36} n={:<4} {}",
                if r.pass { "PASS" } else { "FAIL" },
                r.suite,
                r.check,
                r.n,
                r.detail
            );
        }
        let failed = self.failures().count();
        let _ = writeln!(
            out,
            "suite {} max-n {}: {} checks, {} failed",
            self.suite,
            self.max_n,
            self.rows.len(),
            failed
        );
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialises")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("suite,check,n,pass,detail\n");
        for r in &self.rows {
            let _ = writeln!(out, "{},{},{},{},{}", r.suite, r.check, r.n, r.pass, csv_field(&r.detail));
        }
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

struct Rows {
    suite: Suite,
    rows: Vec<CheckRow>,
}

impl Rows {
    fn new(suite: Suite) -> Self {
        Rows { suite, rows: Vec::new() }
    }

    fn push(&mut self, check: &str, n: usize, pass: bool, detail: impl Into<String>) {
        self.rows.push(CheckRow {
            suite: self.suite,
            check: check.to_string(),
            n,
            pass,
            detail: detail.into(),
        });
    }

    fn exact(&mut self, check: &str, n: usize, pass: bool) {
        self.push(check, n, pass, if pass { "exact" } else { "mismatch" });
    }
}

/// Runs `suite` (every part, for `All`) up to index `max_n`. Parts run in
/// parallel; rows come back in a fixed order.
pub fn run(suite: Suite, max_n: usize) -> Result<VerifyReport> {
    if max_n == 0 {
        return Err(Error::Domain("max-n must be at least 1".into()));
    }
    let parts: Vec<Suite> = match suite {
        Suite::All => Suite::PARTS.to_vec(),
        one => vec![one],
    };
    let chunks: Vec<Vec<CheckRow>> = parts
        .par_iter()
        .map(|&part| match part {
            Suite::Identities => identities_suite(max_n),
            Suite::Cross => cross_suite(max_n),
            Suite::Connections => connections_suite(max_n),
            Suite::Hessenberg => hessenberg_suite(max_n),
            Suite::Series => series_suite(max_n),
            Suite::All => unreachable!("expanded above"),
        })
        .collect();
    let rows: Vec<CheckRow> = chunks.into_iter().flatten().collect();
    Ok(VerifyReport {
        suite,
        max_n,
        passed: rows.iter().all(|r| r.pass),
        rows,
    })
}

fn prefix(kind: SequenceKind, n_max: usize) -> Vec<Polynomial> {
    build_prefix(kind, n_max, kind.default_method()).expect("default method")
}

pub(crate) fn printed_beta_table() -> Vec<Polynomial> {
    [
        &[1][..],
        &[0, 2],
        &[-1, 0, 3],
        &[0, -4, 0, 4],
        &[1, 0, -10, 0, 5],
        &[0, 6, 0, -20, 0, 6],
    ]
    .iter()
    .map(|c| Polynomial::from_ints(c))
    .collect()
}

pub(crate) fn printed_alpha_table() -> Vec<Polynomial> {
    [
        &[1][..],
        &[0, 1],
        &[-1, 0, 1],
        &[0, -3, 0, 1],
        &[1, 0, -6, 0, 1],
        &[0, 5, 0, -10, 0, 1],
    ]
    .iter()
    .map(|c| Polynomial::from_ints(c))
    .collect()
}

fn identities_suite(max_n: usize) -> Vec<CheckRow> {
    let mut out = Rows::new(Suite::Identities);
    let beta = prefix(SequenceKind::Beta, max_n + 1);
    let alpha = prefix(SequenceKind::Alpha, max_n + 1);
    let p = prefix(SequenceKind::P, max_n);

    for (n, (b, a)) in printed_beta_table().iter().zip(printed_alpha_table()).enumerate() {
        if n <= max_n {
            out.exact("table-beta", n, &beta[n] == b);
            out.exact("table-alpha", n, alpha[n] == a);
        }
    }

    let per_n: Vec<Vec<(&'static str, bool)>> = (0..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut checks = vec![
                ("parity-beta", identities::parity(&beta[n], n)),
                ("parity-alpha", identities::parity(&alpha[n], n)),
                ("alternating-zeros-beta", identities::alternating_zeros(&beta[n], n)),
                ("ode-beta", ode_residual_of(Family::Beta, n, &beta[n]).is_zero()),
                ("ode-alpha", ode_residual_of(Family::Alpha, n, &alpha[n]).is_zero()),
                ("turan-beta", identities::turan(&beta, n, n as u32)),
                ("p-from-beta", identities::p_from_beta(&p[n], &beta[n], n)),
                ("chebyshev-bridge-beta", beta_from_chebyshev(n) == beta[n]),
                ("chebyshev-bridge-alpha", alpha_from_chebyshev(n) == alpha[n]),
            ];
            if n >= 1 {
                checks.extend([
                    ("derivative-beta", derivative_identity_holds(Family::Beta, &beta, n)),
                    ("derivative-alpha", derivative_identity_holds(Family::Alpha, &alpha, n)),
                    ("alpha-from-beta", identities::alpha_from_beta(&beta, &alpha, n)),
                    ("beta-from-alpha", identities::beta_from_alpha(&beta, &alpha, n)),
                    ("turan-alpha", identities::turan(&alpha, n, n as u32 - 1)),
                ]);
            }
            checks
        })
        .collect();
    for (n, checks) in per_n.into_iter().enumerate() {
        for (name, pass) in checks {
            out.exact(name, n, pass);
        }
    }

    let order = max_n.min(GF_ORDER_CAP);
    for x in gf_points() {
        for family in [Family::Beta, Family::Alpha] {
            out.push(
                &format!("ogf-{}", SequenceKind::from(family)),
                order,
                verify_ogf(family, &x, order),
                format!("x = {x}"),
            );
            out.push(
                &format!("egf-{}", SequenceKind::from(family)),
                order,
                verify_egf(family, &x, order),
                format!("x = {x}"),
            );
        }
    }

    for (a, b, c) in tridiag_samples() {
        let n_top = max_n.min(20);
        let pass = (1..=n_top).all(|n| tridiag_det(&a, &b, &c, n).ok() == tridiag_chebyshev_form(&a, &b, &c, n));
        out.push("tridiagonal-chebyshev", n_top, pass, format!("a = {a}, b = {b}, c = {c}"));
    }

    let derivative_rows: Vec<(usize, bool, String)> = (1..=max_n.min(DERIVATIVE_FORM_CAP))
        .into_par_iter()
        .map(|n| {
            let mut worst: f64 = 0.0;
            for x in [rat_int(0), rat(1, 2), rat_int(1), rat_int(2), rat(-3, 4)] {
                let exact = arctan_nth_derivative(n, &x).expect("n >= 1");
                let form = chebyshev_derivative_form(n, &x, DEFAULT_BITS).expect("n >= 1");
                let e = HpReal::from_rational(&exact, DEFAULT_BITS);
                let scale = e.abs().to_f64().max(1.0);
                worst = worst.max((&form - &e).abs().to_f64() / scale);
            }
            (n, worst <= 1e-12, format!("max relative gap {worst:.3e}"))
        })
        .collect();
    for (n, pass, detail) in derivative_rows {
        out.push("derivative-chebyshev-form", n, pass, detail);
    }

    let root_rows: Vec<(&'static str, usize, bool, String)> = (1..=max_n)
        .into_par_iter()
        .flat_map_iter(|n| {
            [Family::Beta, Family::Alpha].into_iter().map(move |family| {
                let set = roots(family, n, DEFAULT_BITS).expect("n >= 1");
                let worst = set
                    .roots
                    .iter()
                    .map(|r| r.certificate.residual)
                    .fold(0.0f64, f64::max);
                let name = match family {
                    Family::Beta => "roots-beta",
                    Family::Alpha => "roots-alpha",
                };
                (name, n, set.is_certified() && worst < 1e-9, format!("max residual {worst:.3e}"))
            })
        })
        .collect();
    for (name, n, pass, detail) in root_rows {
        out.push(name, n, pass, detail);
    }
    out.rows
}

pub(crate) fn gf_points() -> [Rational; 5] {
    [rat_int(0), rat_int(1), rat_int(-1), rat(1, 2), rat_int(3)]
}

/// `(a, b, c)` with `ac` a perfect square.
pub(crate) fn tridiag_samples() -> Vec<(Rational, Rational, Rational)> {
    [
        (1, 3, 4),
        (1, 2, 1),
        (2, 5, 8),
        (-1, 3, -9),
        (4, 1, 1),
        (3, -7, 12),
        (1, 1, 1),
        (-2, 4, -2),
        (5, 2, 5),
        (9, -6, 1),
    ]
    .iter()
    .map(|&(a, b, c)| (rat_int(a), rat_int(b), rat_int(c)))
    .collect()
}

fn cross_suite(max_n: usize) -> Vec<CheckRow> {
    let mut out = Rows::new(Suite::Cross);
    let reports: Vec<_> = SequenceKind::ALL
        .par_iter()
        .map(|&kind| cross_validate(kind, max_n))
        .collect();
    for report in reports {
        for n in 0..=max_n {
            let at_n: Vec<_> = report.rows.iter().filter(|r| r.n == n).collect();
            let mismatch = at_n.iter().find(|r| !r.equal);
            let expected_pairs = report.kind.methods().len() * (report.kind.methods().len() - 1) / 2;
            let pass = mismatch.is_none() && at_n.len() == expected_pairs;
            let detail = match mismatch {
                Some(r) => format!("{} != {}", r.method_a, r.method_b),
                None if at_n.len() == expected_pairs => format!("{} methods agree", report.kind.methods().len()),
                None => "not reached".to_string(),
            };
            out.push(&format!("cross-{}", report.kind), n, pass, detail);
        }
    }
    out.rows
}

/// Deterministic sample points in `(-1, 1)` for the tan spot checks.
pub(crate) fn tan_points() -> Vec<Rational> {
    (1..=10).flat_map(|k| [rat(2 * k - 1, 21), rat(-(3 * k - 1), 31)]).collect()
}

fn connections_suite(max_n: usize) -> Vec<CheckRow> {
    let mut out = Rows::new(Suite::Connections);
    let hs = [
        ("x", Polynomial::x()),
        ("2x", Polynomial::from_ints(&[0, 2])),
        ("x^2 + 1", Polynomial::one_plus_x_squared()),
    ];
    for (label, h) in &hs {
        for n in 1..=max_n.min(FIBONACCI_CAP) {
            let oracle = fibonacci_poly(n, h, FibonacciMethod::RecurrenceOracle).expect("n >= 1");
            let closed = fibonacci_poly(n, h, FibonacciMethod::ClosedForm).expect("n >= 1");
            out.push("fibonacci-closed-form", n, closed == oracle, format!("h = {label}"));
            let oracle = lucas_poly(n, h, FibonacciMethod::RecurrenceOracle).expect("n >= 1");
            let closed = lucas_poly(n, h, FibonacciMethod::ClosedForm).expect("n >= 1");
            out.push("lucas-closed-form", n, closed == oracle, format!("h = {label}"));
        }
    }
    // the C(n+1, 2k+1) variant already fails at n = 2 for h = x
    let x = Polynomial::x();
    let oracle = fibonacci_poly(2, &x, FibonacciMethod::RecurrenceOracle).expect("n >= 1");
    let variant = fibonacci_upper_index_variant(2, &x);
    out.push(
        "fibonacci-upper-index-variant-rejected",
        2,
        variant != oracle,
        format!("C(n+1, 2k+1) gives {variant}, recurrence gives {oracle}"),
    );

    let one = rat_int(1);
    let fib: Vec<Rational> = (1..=6)
        .map(|n| fibonacci_poly(n, &x, FibonacciMethod::ClosedForm).unwrap().evaluate(&one))
        .collect();
    out.exact("fibonacci-numbers", 6, fib == [1, 1, 2, 3, 5, 8].map(rat_int));
    let luc: Vec<Rational> = (1..=5)
        .map(|n| lucas_poly(n, &x, FibonacciMethod::ClosedForm).unwrap().evaluate(&one))
        .collect();
    out.exact("lucas-numbers", 5, luc == [1, 3, 4, 7, 11].map(rat_int));

    let graphs: Vec<GraphKind> = (1..=max_n.min(ENUMERATION_CAP))
        .flat_map(|n| {
            let mut g = vec![GraphKind::Path(n)];
            if n >= 3 {
                g.push(GraphKind::Cycle(n));
            }
            g
        })
        .collect();
    let matching: Vec<(GraphKind, bool)> = graphs
        .par_iter()
        .map(|&g| {
            let e = matching_poly(g, MatchingMethod::Enumeration).expect("within cap");
            let c = matching_poly(g, MatchingMethod::ClosedForm).expect("valid graph");
            let t = matching_poly(g, MatchingMethod::ChebyshevTransform).expect("valid graph");
            (g, e == c && c == t)
        })
        .collect();
    for (g, pass) in matching {
        let name = match g {
            GraphKind::Path(_) => "matching-path",
            GraphKind::Cycle(_) => "matching-cycle",
        };
        out.exact(name, g.vertices(), pass);
    }

    for n in 1..=max_n {
        out.exact("tan-alternative-form", n, tan_alternative_form_holds(n));
    }
    let spot: Vec<(usize, bool, String)> = (1..=max_n.min(TAN_SPOT_CAP))
        .into_par_iter()
        .map(|n| {
            let ratio = tan_multiple(n).expect("n >= 1");
            let mut worst: f64 = 0.0;
            let mut used = 0;
            for x in tan_points() {
                let den = ratio.denominator.evaluate(&x);
                if HpReal::from_rational(&den, DEFAULT_BITS).abs().to_f64() <= 1e-3 {
                    continue;
                }
                let exact = HpReal::from_rational(&(ratio.numerator.evaluate(&x) / den), DEFAULT_BITS);
                let reference = tan_reference(n, &x, DEFAULT_BITS);
                let scale = reference.abs().to_f64().max(1.0);
                worst = worst.max((&exact - &reference).abs().to_f64() / scale);
                used += 1;
            }
            (n, worst <= 1e-10, format!("{used} points, max gap {worst:.3e}"))
        })
        .collect();
    for (n, pass, detail) in spot {
        out.push("tan-multiple-spot", n, pass, detail);
    }
    out.rows
}

fn hessenberg_suite(max_n: usize) -> Vec<CheckRow> {
    let mut out = Rows::new(Suite::Hessenberg);
    for (n, expect) in [(1, rat(1, 3)), (3, rat(2, 15)), (5, rat(16, 63))] {
        let got = bracket(n, n);
        out.push("bracket-printed", n, got == expect, format!("[{n}, {n}] = {got}"));
    }
    for n in 0..=max_n {
        let pass = (2..=n).step_by(2).all(|j| bracket(n, j) == rat_int(0));
        out.exact("bracket-even-vanish", n, pass);
    }
    let cap = max_n.min(HESSENBERG_CAP);
    let pis = build_prefix(SequenceKind::MonicPi, cap, BuildMethod::MonicBernoulli).expect("supported");
    let rows: Vec<Vec<(&'static str, usize, bool)>> = (1..=cap)
        .into_par_iter()
        .map(|n| {
            let h = build_h(n);
            let mut rows = vec![
                ("hessenberg-shape", n, h.is_hessenberg() && h.has_unit_subdiagonal()),
                ("hessenberg-trace-zero", n, h.trace() == rat_int(0)),
                ("charpoly-equals-pi", n, charpoly(&h) == pis[n]),
            ];
            if n <= EIGEN_CAP {
                rows.push(("eigenvalues-cot", n, eigen_check(n, DEFAULT_BITS)));
            }
            rows
        })
        .collect();
    for (name, n, pass) in rows.into_iter().flatten() {
        out.exact(name, n, pass);
    }
    out.rows
}

fn series_suite(_max_n: usize) -> Vec<CheckRow> {
    let mut out = Rows::new(Suite::Series);
    let points = [rat(1, 5), rat(1, 2), rat_int(1)];
    let jobs: Vec<(SeriesKind, Rational)> = SeriesKind::ALL
        .iter()
        .flat_map(|&k| points.iter().map(move |x| (k, x.clone())))
        .collect();
    let results: Vec<Vec<(String, usize, bool, String)>> = jobs
        .par_iter()
        .map(|(kind, x)| {
            let report = partial_sum(*kind, x, SERIES_TERMS).expect("terms >= 1");
            let mut rows = Vec::new();
            let last = report.rows.last().expect("nonempty");
            let bound = remainder_bound(*kind, x, SERIES_TERMS);
            rows.push((
                format!("series-{kind}-converges"),
                SERIES_TERMS,
                last.abs_error <= bound + report.rounding_bound + 1e-70,
                format!("x = {x}, error {:.3e} <= bound {:.3e}", last.abs_error, bound),
            ));
            let within = report
                .rows
                .iter()
                .all(|r| r.abs_error <= remainder_bound(*kind, x, r.n + 1) * (1.0 + 1e-9) + 1e-70);
            rows.push((
                format!("series-{kind}-within-tail-bound"),
                SERIES_TERMS,
                within,
                format!("x = {x}"),
            ));
            let rate = report.measured_decay_rate(5);
            rows.push((
                format!("series-{kind}-geometric-decay"),
                SERIES_TERMS,
                rate.is_some_and(|r| r < 1.0),
                format!("x = {x}, measured rate {}", rate.map_or("n/a".into(), |r| format!("{r:.4}"))),
            ));
            if *kind == SeriesKind::Euler {
                rows.push((
                    "series-euler-monotone-error".to_string(),
                    SERIES_TERMS,
                    report.error_monotone_from(5),
                    format!("x = {x}"),
                ));
            }
            rows
        })
        .collect();
    for (name, n, pass, detail) in results.into_iter().flatten() {
        out.push(&name, n, pass, detail);
    }
    for (kind, limit) in [(SeriesKind::Euler, 45), (SeriesKind::BetaExpansion, 90)] {
        let res = pi_approx(kind, 1e-10);
        let (pass, n, detail) = match res {
            Ok(p) => (
                p.terms_used <= limit && p.abs_error < 1e-10,
                p.terms_used,
                format!("{} ({} terms), error {:.3e}", p.decimal, p.terms_used, p.abs_error),
            ),
            Err(e) => (false, 0, e.to_string()),
        };
        out.push(&format!("pi-{kind}"), n, pass, detail);
    }
    out.rows
}
