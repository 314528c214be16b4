use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn matint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_matint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write_matrix(dir: &Path, name: &str, json: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, json).unwrap();
    path
}

struct Fixtures {
    _dir: TempDir,
    linear: String,
    quadratic: String,
    identity: String,
    wide: String,
    broken: String,
    bad_entry: String,
}

fn fixtures() -> Fixtures {
    let dir = TempDir::new().unwrap();
    let p = |name: &str, json: &str| write_matrix(dir.path(), name, json).to_string_lossy().into_owned();
    Fixtures {
        linear: p(
            "linear.json",
            r#"{"rows": 3, "cols": 3, "entries": [["2","3","4"],["3","5","6"],["7","8","6"]]}"#,
        ),
        quadratic: p(
            "quadratic.json",
            r#"{"rows": 2, "cols": 2, "entries": [["3","4"],["2","3"]]}"#,
        ),
        identity: p(
            "identity.json",
            r#"{"rows": 2, "cols": 2, "entries": [["1","0"],["0","1"]]}"#,
        ),
        wide: p("wide.json", r#"{"rows": 1, "cols": 2, "entries": [["1","2"]]}"#),
        broken: p("broken.json", r#"{"rows": 2, "cols": 2, "entries": [["1","2"]"#),
        bad_entry: p("bad_entry.json", r#"{"rows": 1, "cols": 1, "entries": [["1/0"]]}"#),
        _dir: dir,
    }
}

#[test]
fn integrate_linear_oracle() {
    let f = fixtures();
    let o = matint(&["integrate", "--kind", "linear", "--var", "1", "--matrix", &f.linear]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o),
        "[x1^2, 3*x1*x2, 4*x1*x3]\n[3/2*x1^2, 5*x1*x2, 6*x1*x3]\n[7/2*x1^2, 8*x1*x2, 6*x1*x3]\n"
    );
}

#[test]
fn integrate_quadratic_printed_scheme() {
    let f = fixtures();
    let o = matint(&[
        "integrate",
        "--kind",
        "quadratic",
        "--var",
        "1",
        "--matrix",
        &f.quadratic,
        "--method",
        "quad2:printed",
    ]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x1^3 + 3*x1^2*x2 + 3*x1*x2^2\n");
}

#[test]
fn integrate_json_terms() {
    let f = fixtures();
    let o = matint(&[
        "integrate",
        "--kind",
        "quadratic",
        "--var",
        "1",
        "--matrix",
        &f.quadratic,
        "--json",
    ]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["method"], "oracle");
    assert_eq!(v["result"]["text"], "x1^3 + 3*x1^2*x2 + 3*x1*x2^2");
    assert_eq!(v["result"]["terms"][1]["coefficient"], "3");
    assert_eq!(v["result"]["terms"][1]["monomial"][0]["var"], "x1");
    assert_eq!(v["result"]["terms"][1]["monomial"][0]["exp"], 2);

    let o = matint(&[
        "integrate",
        "--kind",
        "linear",
        "--var",
        "1",
        "--matrix",
        &f.linear,
        "--json",
        "--method",
        "lin3",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["result"]["entries"][2][0]["text"], "7/2*x1^2");
    assert_eq!(v["method"], "lin3:reconstructed");
}

#[test]
fn differentiate_outputs() {
    let f = fixtures();
    let o = matint(&["differentiate", "--kind", "linear", "--matrix", &f.linear]);
    assert_eq!(stdout(&o), "[2, 3, 4]\n[3, 5, 6]\n[7, 8, 6]\n");
    let o = matint(&["differentiate", "--kind", "quadratic", "--matrix", &f.identity]);
    assert_eq!(stdout(&o), "[2*x1, 2*x2]\n");
    let o = matint(&["differentiate", "--kind", "quadratic", "--matrix", &f.quadratic]);
    assert_eq!(stdout(&o), "[6*x1 + 6*x2, 6*x1 + 6*x2]\n");
}

#[test]
fn fib_subcommand() {
    assert_eq!(stdout(&matint(&["fib", "10"])), "55\n");
    assert_eq!(stdout(&matint(&["fib", "0"])), "0\n");
}

#[test]
fn verify_report_schema() {
    let o = matint(&["verify", "--scheme", "quad3:printed", "--json"]);
    assert!(o.status.success());
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), 3);
    let third = &reports[2];
    assert_eq!(third["scheme"], "quad3");
    assert_eq!(third["variant"], "printed");
    assert_eq!(third["n"], 3);
    assert_eq!(third["i"], 3);
    assert_eq!(third["summary"]["agree"], 5);
    assert_eq!(third["summary"]["disagree"], 4);
    assert_eq!(third["summary"]["failure"], 0);
    let first = &third["cells"][0];
    assert_eq!((first["k"].as_u64(), first["j"].as_u64()), (Some(1), Some(1)));
    assert_eq!(first["scheme"], "1/5");
    assert_eq!(first["canonical"], "1");
    assert_eq!(first["verdict"], "disagree");
    assert!(v.get("fixtures").is_none());

    let v: Value = serde_json::from_str(&stdout(&matint(&["verify", "--scheme", "lin2", "--json"]))).unwrap();
    assert!(v["reports"][0]["cells"][0]["k"].is_null());
}

#[test]
fn verify_all_includes_findings() {
    let o = matint(&["verify"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("quad2:printed: i=1: 4/4 agree; i=2: 2/4 agree\n"));
    assert!(text.contains("lin3:reconstructed: i=1: 3/3 agree; i=2: 3/3 agree; i=3: 3/3 agree\n"));
    assert!(text.contains("printed result differs from oracle"));
    assert!(text.contains("linear worked example: oracle matches printed matrix"));

    let v: Value = serde_json::from_str(&stdout(&matint(&["verify", "--json"]))).unwrap();
    assert_eq!(v["reports"].as_array().unwrap().len(), 20);
    assert_eq!(v["fixtures"]["quadratic_example"]["printed_flagged"], true);
    assert_eq!(v["fixtures"]["linear_example"]["reproduced"], true);
}

#[test]
fn scheme_table_subcommand() {
    let o = matint(&["scheme-table", "--scheme", "lin3", "--var", "2"]);
    assert_eq!(
        stdout(&o),
        "lin3:reconstructed i=2\n(j=1) 1 canonical 1 agree\n(j=2) 1/2 canonical 1/2 agree\n(j=3) 1 canonical 1 agree\n"
    );
}

#[test]
fn bench_small_batch() {
    let o = matint(&["bench", "--n", "3", "--count", "10", "--seed", "42"]);
    assert!(o.status.success());
    let text = stdout(&o);
    let stable: Vec<&str> = text.lines().filter(|l| !l.starts_with("timing:")).collect();
    assert_eq!(stable, ["bench n=3 count=10 seed=42", "outputs identical: 10/10"]);
    assert_eq!(text.lines().filter(|l| l.starts_with("timing:")).count(), 3);
}

#[test]
fn deterministic_output() {
    let f = fixtures();
    for args in [
        vec!["verify", "--json"],
        vec!["verify"],
        vec![
            "integrate",
            "--kind",
            "linear",
            "--var",
            "2",
            "--matrix",
            f.linear.as_str(),
            "--json",
        ],
    ] {
        assert_eq!(matint(&args).stdout, matint(&args).stdout);
    }
}

#[test]
fn exit_codes() {
    let f = fixtures();
    let code = |args: &[&str]| matint(args).status.code().unwrap();

    assert_eq!(code(&["--help"]), 0);
    assert_eq!(code(&["verify"]), 0);

    // usage
    assert_eq!(code(&[]), 1);
    assert_eq!(code(&["frobnicate"]), 1);
    assert_eq!(code(&["integrate", "--kind", "linear", "--var", "1"]), 1);
    assert_eq!(
        code(&["integrate", "--kind", "cubic", "--var", "1", "--matrix", &f.linear]),
        1
    );
    assert_eq!(
        code(&["integrate", "--kind", "linear", "--var", "4", "--matrix", &f.linear]),
        1
    );
    assert_eq!(
        code(&["integrate", "--kind", "linear", "--var", "0", "--matrix", &f.linear]),
        1
    );
    assert_eq!(
        code(&[
            "integrate",
            "--kind",
            "linear",
            "--var",
            "1",
            "--matrix",
            &f.linear,
            "--method",
            "lin9"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "integrate",
            "--kind",
            "linear",
            "--var",
            "1",
            "--matrix",
            &f.quadratic,
            "--method",
            "lin3"
        ]),
        1
    );
    assert_eq!(
        code(&[
            "integrate",
            "--kind",
            "quadratic",
            "--var",
            "1",
            "--matrix",
            &f.linear,
            "--method",
            "lin3"
        ]),
        1
    );
    assert_eq!(
        code(&["integrate", "--kind", "quadratic", "--var", "1", "--matrix", &f.wide]),
        1
    );
    assert_eq!(code(&["differentiate", "--kind", "quadratic", "--matrix", &f.wide]), 1);
    assert_eq!(code(&["scheme-table", "--scheme", "quad4", "--var", "1"]), 1);
    assert_eq!(code(&["verify", "--scheme", "lin3:typo"]), 1);
    assert_eq!(code(&["bench", "--n", "3", "--count", "0", "--seed", "1"]), 1);
    assert_eq!(code(&["bench", "--n", "4", "--count", "5", "--seed", "1"]), 1);
    assert_eq!(code(&["fib", "x"]), 1);

    // math
    assert_eq!(code(&["fib", "-1"]), 2);
    assert_eq!(code(&["fib", "94"]), 2);

    // i/o and parse
    assert_eq!(
        code(&[
            "integrate",
            "--kind",
            "linear",
            "--var",
            "1",
            "--matrix",
            "/nonexistent/m.json"
        ]),
        3
    );
    assert_eq!(
        code(&["integrate", "--kind", "linear", "--var", "1", "--matrix", &f.broken]),
        3
    );
    assert_eq!(
        code(&["differentiate", "--kind", "linear", "--matrix", &f.bad_entry]),
        3
    );
}

#[test]
fn errors_go_to_stderr() {
    let o = matint(&["fib", "-1"]);
    assert!(o.stdout.is_empty());
    assert!(String::from_utf8_lossy(&o.stderr).contains("negative"));
}
