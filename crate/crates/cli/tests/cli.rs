use std::process::{Command, Output};

use atanpoly::text::PolyRecord;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_atanpoly"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim_end().to_string()
}

#[test]
fn poly_text_and_json() {
    assert_eq!(stdout(&["poly", "--kind", "beta", "--n", "5"]), "6x^5 - 20x^3 + 6x");
    assert_eq!(
        stdout(&["poly", "--kind", "alpha", "--n", "0", "--format", "json"]),
        r#"{"kind":"alpha","n":0,"method":"recurrence","coeffs":["1"]}"#
    );
    let pi2 = stdout(&["poly", "--kind", "pi", "--n", "2", "--format", "json"]);
    let rec = PolyRecord::from_json(&pi2).unwrap();
    assert_eq!(rec.coeffs, ["-1/3", "0", "1"]);
    assert_eq!(
        stdout(&["poly", "--kind", "beta", "--n", "5", "--method", "matrix-power", "--format", "json"]),
        r#"{"kind":"beta","n":5,"method":"matrix-power","coeffs":["0","6","0","-20","0","6"]}"#
    );
}

#[test]
fn json_round_trips_byte_identical() {
    for (kind, n) in [("beta", 7), ("alpha", 6), ("p", 4), ("pi", 9)] {
        let json = stdout(&["poly", "--kind", kind, "--n", &n.to_string(), "--format", "json"]);
        let rec = PolyRecord::from_json(&json).unwrap();
        assert!(rec.is_canonical());
        assert_eq!(rec.to_json(), json);
        assert_eq!(
            PolyRecord::new(rec.kind().unwrap(), rec.n, rec.method().unwrap(), &rec.polynomial().unwrap()).to_json(),
            json
        );
    }
}

#[test]
fn invalid_pair_exits_2_and_names_it() {
    let out = run(&["poly", "--kind", "p", "--n", "3", "--method", "determinant"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("p") && err.contains("determinant"), "{err}");
}

#[test]
fn deriv_examples() {
    assert_eq!(stdout(&["deriv", "--func", "arctan", "--n", "3", "--x", "0"]), "-2");
    assert_eq!(stdout(&["deriv", "--func", "arctan", "--n", "1", "--x", "0"]), "1");
    assert_eq!(stdout(&["deriv", "--func", "artanh", "--n", "2", "--x", "1/2"]), "16/9");
    assert_eq!(run(&["deriv", "--func", "artanh", "--n", "2", "--x", "1"]).status.code(), Some(2));
    assert_eq!(run(&["deriv", "--func", "artanh", "--n", "2", "--x", "-1"]).status.code(), Some(2));
    // no float parsing of x
    assert_eq!(run(&["deriv", "--func", "arctan", "--n", "2", "--x", "0.5"]).status.code(), Some(2));
}

#[test]
fn verify_examples() {
    assert_eq!(run(&["verify", "--suite", "identities", "--max-n", "50"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "hessenberg", "--max-n", "8"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "cross", "--max-n", "1"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "--suite", "cross", "--max-n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "bogus"]).status.code(), Some(2));
}

#[test]
fn verify_is_deterministic() {
    let a = stdout(&["verify", "--suite", "all", "--max-n", "12", "--format", "json"]);
    let b = stdout(&["verify", "--suite", "all", "--max-n", "12", "--format", "json"]);
    assert_eq!(a, b);
    let csv = stdout(&["verify", "--suite", "series", "--format", "csv"]);
    assert!(csv.starts_with("suite,check,n,pass,detail\n"));
}

#[test]
fn series_pi_roots_connect() {
    let pi = stdout(&["pi", "--method", "euler", "--tol", "1e-10"]);
    assert!(pi.starts_with("3.141592653"), "{pi}");
    assert!(pi.ends_with(" terms)"), "{pi}");
    let roots = stdout(&["roots", "--kind", "beta", "--n", "2"]);
    assert!(roots.contains("cot(pi/3)=0.57735026918"), "{roots}");
    assert_eq!(stdout(&["connect", "--what", "matching-path", "--n", "3"]), "x^3 - 2x");
    assert_eq!(
        stdout(&["connect", "--what", "matching-cycle", "--n", "4", "--method", "closed-form"]),
        "x^4 - 4x^2 + 2"
    );
    assert_eq!(stdout(&["connect", "--what", "fibonacci", "--n", "4"]), "x^3 + 2x");
    assert_eq!(stdout(&["connect", "--what", "lucas", "--n", "2", "--h", "2x"]), "4x^2 + 2");
    assert_eq!(stdout(&["connect", "--what", "tan", "--n", "1"]), "(x) / (1)");
    assert_eq!(
        run(&["connect", "--what", "matching-path", "--n", "20"]).status.code(),
        Some(2),
        "enumeration is capped"
    );
    let csv = stdout(&["series", "--kind", "euler", "--x", "1/2", "--terms", "3", "--format", "csv"]);
    assert_eq!(csv.lines().next(), Some("n,term,partial_sum,abs_error"));
    assert_eq!(csv.lines().count(), 4);
    assert_eq!(run(&["pi", "--format", "csv"]).status.code(), Some(2));
}

#[test]
fn matrix_json() {
    assert_eq!(
        stdout(&["matrix", "--n", "2", "--format", "json"]),
        r#"{"n":2,"entries":[["0","1/3"],["1","0"]]}"#
    );
    assert!(stdout(&["matrix", "--n", "4"]).ends_with("charpoly: x^4 - 2x^2 + 1/5"));
}
