use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_humbert"));
    c.env_remove("HUMBERT_THRESHOLDS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn json(out: &Output) -> Value {
    assert!(
        out.status.success(),
        "status {:?}, stderr {}",
        out.status,
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).unwrap()
}

fn num(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

fn shipped() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data/overlap_grid.csv")
}

const POINT: [&str; 10] = [
    "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "-40", "--y", "1",
];

#[test]
fn eval_reports_value_regime_and_estimate() {
    let v = json(&run(&[&["eval"], &POINT[..]].concat()));
    assert_eq!(v["regime"], "large-x");
    let keys: Vec<_> = v.as_object().unwrap().keys().cloned().collect();
    assert_eq!(keys, ["value_re", "value_im", "regime", "err_est"]);
    let value = num(&v["value_re"]);
    // against the same point forced through the convergent series
    let s = json(&run(
        &[&["eval"], &POINT[..], &["--regime", "series-2f1"]].concat()
    ));
    assert_eq!(s["regime"], "series-2f1");
    assert!((value - num(&s["value_re"])).abs() <= 1e-12);
    assert!(num(&v["err_est"]) >= 0.0);
}

#[test]
fn numbers_carry_seventeen_significant_digits() {
    let out = run(&[&["eval"], &POINT[..]].concat());
    let text = String::from_utf8(out.stdout).unwrap();
    let line = text.lines().find(|l| l.contains("value_re")).unwrap();
    let mantissa = line.split(':').nth(1).unwrap().trim().trim_end_matches(',');
    let digits: String = mantissa
        .split(['e', 'E'])
        .next()
        .unwrap()
        .chars()
        .filter(char::is_ascii_digit)
        .collect();
    assert_eq!(digits.len(), 17, "{mantissa}");
}

#[test]
fn complex_flags_accept_pairs() {
    let v = json(&run(&[
        "eval",
        "--a",
        "0.5,0.25",
        "--b",
        "1",
        "--c",
        "1.5,-0.1",
        "--x",
        "-0.3,-0.2",
        "--y",
        "0.4,1",
    ]));
    assert_eq!(v["regime"], "series-2f1");
    assert!(num(&v["value_im"]).abs() > 0.0);
}

#[test]
fn glauber_at_unit_argument_is_one_half() {
    let v = json(&run(&["glauber", "--s", "1", "--tau", "2", "--mu", "0"]));
    assert!((num(&v["value"]) - 0.5).abs() <= 1e-15);
    assert!(v["tau_eq"].is_null());
    let w = json(&run(&[
        "glauber", "--s", "100", "--tau", "2000", "--mu", "0.0316",
    ]));
    assert!(num(&w["tau_eq"]) > 0.0);
    assert!(num(&w["equilibrium_limit"]) > 0.0);
}

#[test]
fn check_reports_agreement_matrix() {
    let v = json(&run(&[
        "check", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "-20", "--y", "0.5",
    ]));
    assert!(num(&v["max_delta"]) <= 1e-7);
    let methods: Vec<&str> = v["methods"]
        .as_array()
        .unwrap()
        .iter()
        .map(|m| m["regime"].as_str().unwrap())
        .collect();
    assert!(
        methods.contains(&"large-x") && methods.contains(&"series-2f1"),
        "{methods:?}"
    );
    let n = methods.len();
    assert_eq!(v["deltas"].as_array().unwrap().len(), n * (n - 1) / 2);
}

#[test]
fn domain_errors_exit_two_and_list_regimes() {
    let out = run(&[
        "eval", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "3", "--y", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("applicable regimes:"), "{err}");
    assert!(err.contains("cut"), "{err}");
    // a Gamma pole in the parameters is also the caller's problem
    let out = run(&[
        "eval", "--a", "0.5", "--b", "1", "--c", "-2", "--x", "0.1", "--y", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_sixty_four() {
    for args in [
        &["eval", "--a", "0.5", "--bogus", "1"][..],
        &[
            "eval", "--a", "x", "--b", "1", "--c", "1.5", "--x", "0", "--y", "0",
        ],
        &[
            "eval", "--a", "1,2,3", "--b", "1", "--c", "1.5", "--x", "0", "--y", "0",
        ],
        &["eval", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "0"],
        &[
            "eval", "--tol", "0", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "0", "--y", "0",
        ],
        &[
            "eval", "--regime", "nope", "--a", "0.5", "--b", "1", "--c", "1.5", "--x", "0", "--y",
            "0",
        ],
        &["frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(
            out.status.code(),
            Some(64),
            "{args:?}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

#[test]
fn threshold_file_moves_the_crossover() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("th.txt");
    std::fs::write(&path, "# push the large-x regime out\nlarge_x = 50\n").unwrap();
    let out = bin()
        .env("HUMBERT_THRESHOLDS", &path)
        .args([&["eval"], &POINT[..]].concat())
        .output()
        .unwrap();
    let v = json(&out);
    assert_ne!(v["regime"], "large-x");
    std::fs::write(&path, "large_x = banana\n").unwrap();
    let out = bin()
        .env("HUMBERT_THRESHOLDS", &path)
        .args([&["eval"], &POINT[..]].concat())
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(64));
}

#[test]
fn eval_formats() {
    let csv = run(&[&["eval"], &POINT[..], &["--format", "csv"]].concat());
    let text = String::from_utf8(csv.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("value_re,value_im,regime,err_est"));
    assert!(lines.next().unwrap().contains(",large-x,"));
    let txt = run(&[&["eval"], &POINT[..], &["--format", "text"]].concat());
    assert!(String::from_utf8(txt.stdout)
        .unwrap()
        .contains("regime    large-x"));
}

#[test]
fn table_rows_are_ordered_and_reproducible() {
    let args = [
        "table", "--a", "0.5", "--b", "1", "--c", "1.5", "--x-from", "-0.5", "--x-to", "-60",
        "--y-from", "0.5", "--steps", "25",
    ];
    let first = run(&args);
    assert!(first.status.success());
    assert_eq!(first.stdout, run(&args).stdout);
    let text = String::from_utf8(first.stdout).unwrap();
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 25);
    for (i, r) in rows.iter().enumerate() {
        assert!(r.starts_with(&format!("{i},")), "{r}");
        assert!(r.ends_with(",ok"), "{r}");
    }
    assert!(rows[0].contains("series-2f1") && rows[24].contains("large-x"));
}

#[test]
fn table_with_a_bad_point_exits_two_but_prints_the_rest() {
    let out = run(&[
        "table", "--a", "0.5", "--b", "1", "--c", "1.5", "--x-from", "0.5", "--x-to", "3",
        "--y-from", "1", "--steps", "6", "--format", "json",
    ]);
    assert_eq!(out.status.code(), Some(2));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["points"], 6);
    assert!(v["failures"].as_u64().unwrap() >= 1);
    assert_eq!(v["rows"][0]["status"], "ok");
    assert!(v["rows"][5]["value_re"].is_null());
}

#[test]
fn vectors_are_deterministic_and_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = run(&["vectors", "--out", p.to_str().unwrap()]);
        assert!(out.status.success());
        assert!(out.stdout.is_empty());
    }
    let bytes = std::fs::read(&a).unwrap();
    assert_eq!(bytes, std::fs::read(&b).unwrap());
    let text = String::from_utf8(bytes).unwrap();
    assert_eq!(text.lines().count(), 51);
    assert_eq!(
        text.lines().next().unwrap(),
        "a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im,value_re,value_im,method,err_est"
    );
    let convergent = [
        "taylor",
        "series-2f1",
        "euler-integral",
        "connection-x1",
        "reduction",
    ];
    for line in text.lines().skip(1) {
        let method = line.split(',').nth(12).unwrap();
        assert!(convergent.contains(&method), "{line}");
    }
    let v = json(&run(&[
        "check",
        "--from-file",
        a.to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"], 50);
}

#[test]
fn empty_grid_gives_header_only() {
    let out = run(&["vectors", "--grid", "empty"]);
    assert!(out.status.success());
    assert_eq!(
        String::from_utf8(out.stdout).unwrap(),
        "a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im,value_re,value_im,method,err_est\n"
    );
}

#[test]
fn shipped_vectors_verify() {
    let v = json(&run(&[
        "check",
        "--from-file",
        shipped().to_str().unwrap(),
        "--format",
        "json",
    ]));
    assert_eq!(v["passed"], true);
    assert_eq!(v["rows"], 50);
    // the methods compared at every point agree far inside 1e-6
    assert!(num(&v["max_matrix_delta"]) <= 1e-6);
    for r in v["results"].as_array().unwrap() {
        let value = num(&r["value_re"]).hypot(num(&r["value_im"]));
        assert!(num(&r["delta"]) <= 2.0 * num(&r["err_est"]) + 64.0 * f64::EPSILON * value);
    }
}

#[test]
fn tampered_vectors_fail_verification() {
    let text = std::fs::read_to_string(shipped()).unwrap();
    let mut lines: Vec<String> = text.lines().map(String::from).collect();
    let mut cols: Vec<String> = lines[5].split(',').map(String::from).collect();
    let v: f64 = cols[10].parse().unwrap();
    cols[10] = format!("{:.16e}", v * (1.0 + 1e-9));
    lines[5] = cols.join(",");
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.csv");
    std::fs::write(&path, lines.join("\n") + "\n").unwrap();
    let out = run(&[
        "check",
        "--from-file",
        path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["passed"], false);
    assert_eq!(v["results"][4]["ok"], false);
}

#[test]
fn custom_grid_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.csv");
    std::fs::write(
        &path,
        "a_re,a_im,b_re,b_im,c_re,c_im,x_re,x_im,y_re,y_im\n0.5,0,1,0,1.5,0,0.3,0,0.2,0\n",
    )
    .unwrap();
    let out = run(&["vectors", "--grid", path.to_str().unwrap()]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap().lines().count(), 2);
}

#[test]
fn prabhakar_closed_form_matches_quadrature() {
    let v = json(&run(&[
        "prabhakar",
        "--alpha",
        "0.3",
        "--beta",
        "0.55",
        "--gamma",
        "1.2",
        "--lambda",
        "0.4",
        "--rho",
        "0.5",
        "--coeff",
        "1",
        "--coeff",
        "0.5",
        "--x",
        "0.8",
        "--order",
        "6",
    ]));
    let sides = v["sides"].as_array().unwrap();
    assert_eq!(sides.len(), 2);
    for s in sides {
        let closed = num(&s["closed_re"]);
        assert!((num(&s["quadrature_re"]) - closed).abs() <= 1e-8 * closed.abs());
        // a finite input expansion makes the origin expansion converge
        assert!((num(&s["asymptotic_re"]) - closed).abs() <= 1e-3 * closed.abs());
    }
}

#[test]
fn fm_series_and_laplace_agree() {
    let base = [
        "fm", "--alpha1", "0.5", "--alpha2", "0.5", "--beta1", "0.25", "--beta2", "0.75",
        "--gamma1", "1.5", "--gamma2", "1.25", "--x", "0.2", "--y", "0.1", "--z", "0.3",
    ];
    let s = json(&run(&base));
    assert_eq!(s["method"], "series");
    let l = json(&run(&[&base[..], &["--method", "laplace"]].concat()));
    let (a, b) = (num(&s["value_re"]), num(&l["value_re"]));
    assert!((a - b).abs() <= 1e-7 * a.abs());
}

#[test]
fn out_flag_writes_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("eval.json");
    let out = run(&[&["eval"], &POINT[..], &["--out", path.to_str().unwrap()]].concat());
    assert!(out.status.success() && out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["regime"], "large-x");
}
