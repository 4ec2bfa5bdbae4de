use atanpoly::calculus::{arctan_nth_derivative, roots};
use atanpoly::connections::{matching_poly, GraphKind, MatchingMethod};
use atanpoly::hessenberg::{build_h, charpoly, faddeev_leverrier};
use atanpoly::series::{partial_sum, SeriesKind};
use atanpoly::text::{parse_polynomial, PolyRecord};
use atanpoly::{build, build_prefix, BuildMethod, Family, Polynomial, Rational, SequenceKind};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn r(p: i64, q: i64) -> Rational {
    Rational::new(p.into(), q.into())
}

/// (x + i)^k evaluated by repeated complex multiplication over the rationals.
fn gaussian_power(x: &Rational, k: usize) -> (Rational, Rational) {
    let (mut re, mut im) = (Rational::one(), Rational::zero());
    for _ in 0..k {
        let next_re = &re * x - &im;
        im = &im * x + &re;
        re = next_re;
    }
    (re, im)
}

#[test]
fn every_supported_method_matches_the_reference() {
    for kind in SequenceKind::ALL {
        let reference = build_prefix(kind, 10, kind.default_method()).unwrap();
        for &method in kind.methods() {
            for (n, want) in reference.iter().enumerate() {
                assert_eq!(&build(kind, n, method).unwrap(), want, "{kind:?} {method:?} n={n}");
            }
        }
    }
}

#[test]
fn unsupported_pairs_are_errors() {
    for kind in SequenceKind::ALL {
        for method in BuildMethod::ALL {
            if !kind.supports(method) {
                assert!(build(kind, 3, method).is_err(), "{kind:?} {method:?}");
            }
        }
    }
}

#[test]
fn derivatives_at_zero_follow_the_maclaurin_series() {
    // arctan x = sum (-1)^k x^(2k+1)/(2k+1), so f^(2k+1)(0) = (-1)^k (2k)!
    let mut fact = num_bigint::BigInt::one();
    for n in 1..=25usize {
        let got = arctan_nth_derivative(n, &Rational::zero()).unwrap();
        let want = if n % 2 == 0 {
            Rational::zero()
        } else {
            let sign = if (n / 2) % 2 == 0 { 1 } else { -1 };
            Rational::from_integer(fact.clone() * sign)
        };
        assert_eq!(got, want, "n={n}");
        fact *= n;
    }
}

#[test]
fn hessenberg_charpoly_agrees_with_leverrier() {
    for n in 1..=8 {
        let h = build_h(n);
        assert_eq!(charpoly(&h), faddeev_leverrier(&h));
        assert_eq!(charpoly(&h), build(SequenceKind::MonicPi, n, BuildMethod::Recurrence).unwrap());
    }
}

#[test]
fn matching_methods_agree_on_small_graphs() {
    for n in 1..=10 {
        for g in [GraphKind::path(n), GraphKind::cycle(n + 2)] {
            let g = g.unwrap();
            let e = matching_poly(g, MatchingMethod::Enumeration).unwrap();
            assert_eq!(matching_poly(g, MatchingMethod::ClosedForm).unwrap(), e, "{g}");
            assert_eq!(matching_poly(g, MatchingMethod::ChebyshevTransform).unwrap(), e, "{g}");
        }
    }
}

#[test]
fn beta_roots_are_cotangents() {
    for n in 1..=8 {
        let set = roots(Family::Beta, n, 160).unwrap();
        assert!(set.is_certified(), "n={n}");
        assert_eq!(set.roots.len(), n);
        for root in &set.roots {
            let theta = std::f64::consts::PI * root.k as f64 / (n as f64 + 1.0);
            let approx = root.value.to_f64();
            assert!((approx - 1.0 / theta.tan()).abs() < 1e-9, "n={n} k={}", root.k);
        }
    }
}

#[test]
fn euler_series_reaches_arctan_half() {
    let report = partial_sum(SeriesKind::Euler, &r(1, 2), 40).unwrap();
    assert!(report.final_error() < 1e-15);
    assert!((report.target - 0.5f64.atan()).abs() < 1e-15);
}

#[test]
fn records_round_trip_through_json() {
    for n in 0..12 {
        let p = build(SequenceKind::P, n, BuildMethod::Explicit).unwrap();
        let rec = PolyRecord::new(SequenceKind::P, n, BuildMethod::Explicit, &p);
        let back = PolyRecord::from_json(&rec.to_json()).unwrap();
        assert_eq!(back.polynomial().unwrap(), p);
        assert_eq!(back.to_json(), rec.to_json());
    }
}

proptest! {
    #[test]
    fn beta_and_alpha_are_complex_power_parts(n in 0usize..30, p in -50i64..50, q in 1i64..20) {
        let x = r(p, q);
        let (re, _) = gaussian_power(&x, n);
        let (_, im) = gaussian_power(&x, n + 1);
        prop_assert_eq!(build(SequenceKind::Alpha, n, BuildMethod::Recurrence).unwrap().evaluate(&x), re);
        prop_assert_eq!(build(SequenceKind::Beta, n, BuildMethod::Recurrence).unwrap().evaluate(&x), im);
    }

    #[test]
    fn display_parses_back(n in 0usize..25, kind in 0usize..4) {
        let kind = SequenceKind::ALL[kind];
        let p = build(kind, n, kind.default_method()).unwrap();
        prop_assert_eq!(parse_polynomial(&p.to_string()).unwrap(), p);
    }

    #[test]
    fn monic_pi_is_monic_and_degree_n(n in 0usize..40) {
        let p = build(SequenceKind::MonicPi, n, BuildMethod::Recurrence).unwrap();
        prop_assert_eq!(p.degree(), Some(n));
        prop_assert!(p.leading_coeff().unwrap().is_one());
    }

    #[test]
    fn p_is_factorial_times_reflected_beta(n in 1usize..20) {
        let p = build(SequenceKind::P, n, BuildMethod::Explicit).unwrap();
        let b = build(SequenceKind::Beta, n, BuildMethod::Recurrence).unwrap();
        let x = r(3, 7);
        let fact: u64 = (1..=n as u64).product();
        prop_assert_eq!(p.evaluate(&x), b.evaluate(&-x.clone()) * Rational::from_integer(fact.into()));
    }
}

#[test]
fn zero_polynomial_displays_as_zero() {
    assert_eq!(Polynomial::zero().to_string(), "0");
}

#[test]
fn beta_expansion_terms_follow_the_trigonometric_form() {
    // with x = cot t the n-th term is sin((n+1)t) cos^(n+1)(t) / (n+1), which
    // changes sign, so the partial-sum error cannot decrease monotonically
    use atanpoly::series::series_term;
    use num_traits::ToPrimitive;
    for (p, q) in [(1, 1), (1, 2), (1, 5), (3, 1)] {
        let x = r(p, q);
        let t = (q as f64).atan2(p as f64);
        for n in 0..30usize {
            let k = (n + 1) as f64;
            let want = (k * t).sin() * t.cos().powi(n as i32 + 1) / k;
            let got = series_term(SeriesKind::BetaExpansion, n, &x).to_f64().unwrap();
            assert!((got - want).abs() < 1e-15, "x={p}/{q} n={n}: {got} vs {want}");
        }
    }
}
