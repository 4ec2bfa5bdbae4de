use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use atanpoly::calculus::{arctan_nth_derivative, artanh_nth_derivative, roots};
use atanpoly::connections::{
    fibonacci_poly, lucas_poly, matching_poly, tan_multiple, FibonacciMethod, GraphKind, MatchingMethod,
};
use atanpoly::hessenberg::{build_h, charpoly};
use atanpoly::hp::{HpReal, DEFAULT_BITS};
use atanpoly::numerics::format_rational;
use atanpoly::series::{compare_series, partial_sum, pi_approx, SeriesKind};
use atanpoly::text::{parse_decimal, parse_polynomial, parse_rational, PolyRecord};
use atanpoly::verify::{self, Suite};
use atanpoly::{build, BuildMethod, Family, Polynomial, Rational, SequenceKind};
use clap::{Parser, Subcommand, ValueEnum};
use num_traits::ToPrimitive;
use serde_json::json;

#[derive(Parser)]
#[command(name = "atanpoly", version, about = "Derivative polynomials of arctan, exactly")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Func {
    Arctan,
    Artanh,
}

#[derive(Clone, Copy, ValueEnum)]
enum Connection {
    Tan,
    Fibonacci,
    Lucas,
    MatchingPath,
    MatchingCycle,
}

#[derive(Subcommand)]
enum Command {
    /// Build one polynomial of a family.
    Poly {
        #[arg(long)]
        kind: SequenceKind,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        method: Option<BuildMethod>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Exact n-th derivative of arctan or artanh at a rational point.
    Deriv {
        #[arg(long, value_enum)]
        func: Func,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 50)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Partial sums of an arctan expansion.
    Series {
        #[arg(long, default_value = "beta")]
        kind: SeriesKind,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value_t = 20)]
        terms: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Approximate pi from either expansion at x = 1.
    Pi {
        #[arg(long, default_value = "euler")]
        method: SeriesKind,
        #[arg(long, default_value = "1e-10")]
        tol: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Closed-form zeros with certificates.
    Roots {
        #[arg(long, default_value = "beta")]
        kind: Family,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = DEFAULT_BITS)]
        bits: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// tan(n arctan x), Fibonacci, Lucas and matching polynomials.
    Connect {
        #[arg(long, value_enum)]
        what: Connection,
        #[arg(long)]
        n: usize,
        /// Argument polynomial for Fibonacci and Lucas.
        #[arg(long, default_value = "x", allow_hyphen_values = true)]
        h: String,
        /// `closed-form` or `recurrence-oracle`; for matchings also
        /// `enumeration` or `chebyshev-transform`.
        #[arg(long)]
        method: Option<String>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// The Hessenberg matrix H_n.
    Matrix {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Terms each expansion needs at x for a given tolerance.
    Compare {
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, default_value = "1e-10")]
        tol: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

enum Failure {
    /// Usage or domain error, exit code 2.
    Usage(String),
    /// A verification ran and failed, exit code 1; the report is still printed.
    Verification(String),
}

impl From<atanpoly::Error> for Failure {
    fn from(e: atanpoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<atanpoly::text::ParseError> for Failure {
    fn from(e: atanpoly::text::ParseError) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn no_csv(format: Format) -> Result<(), Failure> {
    if format == Format::Csv {
        return Err(Failure::Usage("csv output is only available for series and verify".into()));
    }
    Ok(())
}

fn tolerance(s: &str) -> Result<f64, Failure> {
    let t = parse_decimal(s)?;
    let f = t.to_f64().unwrap_or(0.0);
    if f <= 0.0 {
        return Err(Failure::Usage(format!("tolerance must be positive, got {s}")));
    }
    Ok(f)
}

fn decimal(r: &Rational) -> String {
    HpReal::from_rational(r, DEFAULT_BITS).to_decimal(12)
}

fn poly_json(p: &Polynomial) -> serde_json::Value {
    json!(p.coeff_strings())
}

fn run(cli: Cli) -> Result<String, Failure> {
    match cli.command {
        Command::Poly { kind, n, method, format } => {
            no_csv(format)?;
            let method = method.unwrap_or(kind.default_method());
            let p = build(kind, n, method)?;
            Ok(match format {
                Format::Json => PolyRecord::new(kind, n, method, &p).to_json(),
                _ => p.to_string(),
            })
        }
        Command::Deriv { func, n, x, format } => {
            no_csv(format)?;
            let x = parse_rational(&x)?;
            let (name, v) = match func {
                Func::Arctan => ("arctan", arctan_nth_derivative(n, &x)?),
                Func::Artanh => ("artanh", artanh_nth_derivative(n, &x)?),
            };
            Ok(match format {
                Format::Json => json!({
                    "func": name,
                    "n": n,
                    "x": format_rational(&x),
                    "value": format_rational(&v),
                    "decimal": decimal(&v),
                })
                .to_string(),
                _ => format_rational(&v),
            })
        }
        Command::Verify { suite, max_n, format } => {
            let report = verify::run(suite, max_n)?;
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Csv => report.to_csv(),
            };
            if report.passed {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
        Command::Series { kind, x, terms, format } => {
            let x = parse_rational(&x)?;
            let report = partial_sum(kind, &x, terms)?;
            Ok(match format {
                Format::Csv => report.to_csv(),
                Format::Json => json!({
                    "kind": kind.name(),
                    "x": format_rational(&x),
                    "target": report.target,
                    "slow_convergence": report.slow_convergence,
                    "rows": report.rows.iter().map(|r| json!({
                        "n": r.n,
                        "term": r.term.to_string(),
                        "partial_sum": r.partial_sum.to_string(),
                        "abs_error": r.abs_error,
                    })).collect::<Vec<_>>(),
                })
                .to_string(),
                Format::Text => {
                    let mut out = String::new();
                    if report.slow_convergence {
                        out.push_str("note: |x| > 4, convergence is slow\n");
                    }
                    let _ = writeln!(out, "{:>6}  {:>14}  abs_error", "n", "partial_sum");
                    for r in &report.rows {
                        let s = r.partial_sum.to_hp(DEFAULT_BITS).to_decimal(12);
                        let _ = writeln!(out, "{:>6}  {:>14}  {:.3e}", r.n, s, r.abs_error);
                    }
                    out.trim_end().to_string()
                }
            })
        }
        Command::Pi { method, tol, format } => {
            no_csv(format)?;
            let p = pi_approx(method, tolerance(&tol)?)?;
            Ok(match format {
                Format::Json => serde_json::to_string(&p).expect("serialises"),
                _ => format!("{} ({} terms)", p.decimal, p.terms_used),
            })
        }
        Command::Roots { kind, n, bits, format } => {
            no_csv(format)?;
            let set = roots(kind, n, bits)?;
            let text = match format {
                Format::Json => serde_json::to_string(&set).expect("serialises"),
                _ => {
                    let mut out = String::new();
                    for r in &set.roots {
                        let _ = writeln!(
                            out,
                            "{:>3}  {}={}  {}",
                            r.k,
                            r.closed_form,
                            r.decimal,
                            if r.certificate.is_simple_root() { "certified" } else { "NOT certified" }
                        );
                    }
                    out.trim_end().to_string()
                }
            };
            if set.is_certified() {
                Ok(text)
            } else {
                Err(Failure::Verification(text))
            }
        }
        Command::Connect { what, n, h, method, format } => {
            no_csv(format)?;
            connect(what, n, &h, method.as_deref(), format)
        }
        Command::Matrix { n, format } => {
            no_csv(format)?;
            if n == 0 {
                return Err(Failure::Usage("matrix needs n >= 1".into()));
            }
            let m = build_h(n);
            Ok(match format {
                Format::Json => m.to_json(),
                _ => {
                    let cells: Vec<Vec<String>> = m
                        .rows()
                        .iter()
                        .map(|row| row.iter().map(format_rational).collect())
                        .collect();
                    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
                    let mut out = String::new();
                    for row in &cells {
                        let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
                        let _ = writeln!(out, "{}", line.join("  "));
                    }
                    let _ = write!(out, "charpoly: {}", charpoly(&m));
                    out
                }
            })
        }
        Command::Compare { x, tol, format } => {
            no_csv(format)?;
            let x = parse_rational(&x)?;
            let rows = compare_series(&x, tolerance(&tol)?)?;
            Ok(match format {
                Format::Json => serde_json::to_string(&rows).expect("serialises"),
                _ => rows
                    .iter()
                    .map(|r| format!("{:<6} {:>6} terms  error {:.3e}", r.kind.name(), r.terms_to_tolerance, r.final_error))
                    .collect::<Vec<_>>()
                    .join("\n"),
            })
        }
    }
}

fn connect(what: Connection, n: usize, h: &str, method: Option<&str>, format: Format) -> Result<String, Failure> {
    let bad_method = |m: &str| Failure::Usage(format!("unknown method `{m}`"));
    let fib_method = |m: Option<&str>| match m {
        None | Some("closed-form") => Ok(FibonacciMethod::ClosedForm),
        Some("recurrence-oracle") | Some("recurrence") => Ok(FibonacciMethod::RecurrenceOracle),
        Some(other) => Err(bad_method(other)),
    };
    let matching_method = |m: Option<&str>| match m {
        None | Some("enumeration") => Ok(MatchingMethod::Enumeration),
        Some("closed-form") => Ok(MatchingMethod::ClosedForm),
        Some("chebyshev-transform") => Ok(MatchingMethod::ChebyshevTransform),
        Some(other) => Err(bad_method(other)),
    };
    let p = match what {
        Connection::Tan => {
            let t = tan_multiple(n)?;
            return Ok(match format {
                Format::Json => json!({
                    "n": n,
                    "parity": t.parity,
                    "numerator": poly_json(&t.numerator),
                    "denominator": poly_json(&t.denominator),
                })
                .to_string(),
                _ => t.to_string(),
            });
        }
        Connection::Fibonacci => fibonacci_poly(n, &parse_polynomial(h)?, fib_method(method)?)?,
        Connection::Lucas => lucas_poly(n, &parse_polynomial(h)?, fib_method(method)?)?,
        Connection::MatchingPath => matching_poly(GraphKind::path(n)?, matching_method(method)?)?,
        Connection::MatchingCycle => matching_poly(GraphKind::cycle(n)?, matching_method(method)?)?,
    };
    Ok(match format {
        Format::Json => json!({"n": n, "coeffs": poly_json(&p)}).to_string(),
        _ => p.to_string(),
    })
}

// a closed pipe (`| head`) is not an error worth a panic
fn emit(out: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = writeln!(stdout, "{}", out.trim_end());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(Failure::Verification(out)) => {
            emit(&out);
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
