//! The `ellipsoid` binary: reports, formats and exit codes.

use std::f64::consts::PI;
use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn ellipsoid(args: &[&str]) -> Output {
    ellipsoid_with(args, None, &[])
}

fn ellipsoid_with(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ellipsoid"));
    cmd.args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped());
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn json(args: &[&str]) -> Vec<Value> {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = ellipsoid(&full);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    serde_json::from_slice::<Value>(&o.stdout)
        .unwrap()
        .as_array()
        .unwrap()
        .clone()
}

fn num(v: &Value, key: &str) -> f64 {
    v[key]
        .as_f64()
        .unwrap_or_else(|| panic!("{key} missing in {v}"))
}

#[test]
fn area_of_sphere_and_disc() {
    let sphere = &json(&["area", "1", "1", "1"])[0];
    assert_eq!(sphere["class"], "sphere");
    assert!((num(sphere, "surface_area") - 4.0 * PI).abs() < 1e-15);
    assert!(sphere["m"].is_null());

    let disc = &json(&["area", "2", "1", "0"])[0];
    assert_eq!(disc["class"], "elliptic_disc");
    assert!((num(disc, "surface_area") - 4.0 * PI).abs() < 1e-14);
    assert!(disc["area_to_volume"].is_null());
}

#[test]
fn area_verification() {
    let r = &json(&["area", "3", "2", "1", "--verify"])[0];
    assert!(num(r, "relative_deviation") < 1e-9);
    assert_eq!(r["verified"], true);
    assert!((num(r, "surface_area") - 48.88214630258206).abs() < 1e-12);

    let o = ellipsoid(&[
        "area",
        "3",
        "2",
        "1",
        "--verify",
        "--quad-tol",
        "1e-3",
        "--tol",
        "1e-30",
    ]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("verification failed"));
}

#[test]
fn axes_in_any_order_echo_permutation() {
    let r = &json(&["area", "1", "3", "2"])[0];
    assert_eq!(num(r, "a"), 3.0);
    assert_eq!(num(r, "c"), 1.0);
    assert_eq!(r["permutation"], "1 2 0");
}

#[test]
fn invalid_input_exits_two() {
    for args in [
        &["area", "-1", "1", "1"][..],
        &["area", "1", "nan", "1"],
        &["area", "1", "1"],
        &["curvature", "3", "2", "1", "4", "0"],
        &["curvature", "2", "1", "0", "1", "1"],
        &["frobnicate"],
        &["area", "1", "1", "1", "--format", "xml"],
    ] {
        assert_eq!(code(&ellipsoid(args)), 2, "{args:?}");
    }
}

#[test]
fn curvature_reports() {
    let sphere = &json(&["curvature", "2", "2", "2", "1", "1"])[0];
    assert!((num(sphere, "chi1") - 0.5).abs() < 1e-15);
    assert!((num(sphere, "chi2") - 0.5).abs() < 1e-15);
    assert_eq!(sphere["umbilic"], true);

    let r = &json(&["curvature", "3", "2", "1", "pi/4", "pi/4"])[0];
    let (chi1, chi2) = (num(r, "chi1"), num(r, "chi2"));
    assert!((chi1 + chi2 - num(r, "sum_check")).abs() < 1e-14);
    assert!((chi1 * chi2 - num(r, "product_check")).abs() < 1e-14);
    assert_eq!(r["pole"], false);

    let o = ellipsoid(&["curvature", "3", "2", "1", "0", "0", "--format", "json"]);
    assert_eq!(code(&o), 0);
    assert!(stderr(&o).contains("pole"));
    let pole = &serde_json::from_slice::<Value>(&o.stdout).unwrap()[0];
    assert_eq!(num(pole, "chi1"), 3.0);
    assert_eq!(num(pole, "chi2"), 0.75);
    assert_eq!(pole["pole"], true);

    let negative = &json(&["curvature", "3", "2", "1", "pi/4", "-pi/4"])[0];
    assert!((num(negative, "phi") - 7.0 * PI / 4.0).abs() < 1e-15);
}

#[test]
fn umbilic_reports() {
    let rows = json(&["umbilics", "3", "2", "1"]);
    assert_eq!(rows.len(), 4);
    for r in &rows {
        assert!((num(r, "curvature") - 0.375).abs() < 1e-15);
        assert!((num(r, "x").abs() - 3.0 * (5.0f64 / 8.0).sqrt()).abs() < 1e-15);
    }
    for r in json(&["umbilics", "2", "1.5", "1"]) {
        let (x, z) = (num(&r, "x"), num(&r, "z"));
        assert!((x * x / 4.0 + z * z - 1.0).abs() < 1e-14);
    }
    let o = ellipsoid(&["umbilics", "2", "2", "1"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("no isolated umbilics for shapes of revolution"));
}

const FIXTURES: &str = "\
# classification fixtures
2 1 1
3 1.5 1
3 2.23606797749979 1
3 2.5 1

2 2 1
2 1 0   # elliptic disc
2 2 0
1 0 0
1 1 1
0 0 0
";

#[test]
fn classify_batch() {
    let o = ellipsoid_with(&["classify", "-", "--format", "json"], Some(FIXTURES), &[]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let rows: Vec<Value> = serde_json::from_slice::<Value>(&o.stdout)
        .unwrap()
        .as_array()
        .unwrap()
        .clone();
    let classes: Vec<&str> = rows.iter().map(|r| r["class"].as_str().unwrap()).collect();
    assert_eq!(
        classes,
        [
            "prolate_of_revolution",
            "general_prolate",
            "general_spheroid",
            "general_oblate",
            "oblate_of_revolution",
            "elliptic_disc",
            "circular_disc",
            "bar",
            "sphere",
            "point",
        ]
    );
    assert_eq!(rows[0]["line"], 2);
    assert_eq!(rows[5]["line"], 8);
    assert!(rows[8]["m"].is_null());
    assert!(rows[9]["e"].is_null());

    let empty = ellipsoid_with(
        &["classify", "-", "--format", "json"],
        Some("# nothing\n\n"),
        &[],
    );
    assert_eq!(code(&empty), 0);
    assert_eq!(String::from_utf8_lossy(&empty.stdout), "[]\n");

    let bad = ellipsoid_with(&["classify", "-"], Some("1 1 1\n2 x 1\n"), &[]);
    assert_eq!(code(&bad), 2);
    assert!(stderr(&bad).contains("line 2"));

    assert_eq!(code(&ellipsoid(&["classify", "/nonexistent/axes.txt"])), 2);
}

#[test]
fn csv_uses_json_keys() {
    let o = ellipsoid_with(&["classify", "-", "--format", "csv"], Some(FIXTURES), &[]);
    let text = String::from_utf8(o.stdout).unwrap();
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let header: Vec<String> = reader
        .headers()
        .unwrap()
        .iter()
        .map(str::to_owned)
        .collect();
    let rows = ellipsoid_with(&["classify", "-", "--format", "json"], Some(FIXTURES), &[]).stdout;
    let rows: Value = serde_json::from_slice(&rows).unwrap();
    let mut keys: Vec<String> = rows[0].as_object().unwrap().keys().cloned().collect();
    let mut sorted_header = header;
    sorted_header.sort();
    keys.sort();
    assert_eq!(sorted_header, keys);
    assert_eq!(reader.records().count(), 10);
}

#[test]
fn verify_runs() {
    let o = ellipsoid(&["verify", "--cases", "10", "--seed", "7"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));

    let strict = ellipsoid(&["verify", "--cases", "3", "--tol", "1e-30"]);
    assert_eq!(code(&strict), 3);
    assert!(stderr(&strict).contains("eq_s: ("));

    let vacuous = ellipsoid(&["verify", "--cases", "0"]);
    assert_eq!(code(&vacuous), 0);
}

#[test]
fn output_is_deterministic_across_thread_counts() {
    let args = ["verify", "--cases", "12", "--seed", "3", "--format", "csv"];
    let one = ellipsoid_with(&args, None, &[("ELLIPSOID_GEOM_THREADS", "1")]);
    let four = ellipsoid_with(&args, None, &[("ELLIPSOID_GEOM_THREADS", "4")]);
    let auto = ellipsoid_with(&args, None, &[("ELLIPSOID_GEOM_THREADS", "0")]);
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    assert_eq!(one.stdout, auto.stdout);

    let bad = ellipsoid_with(&args, None, &[("ELLIPSOID_GEOM_THREADS", "many")]);
    assert_eq!(code(&bad), 2);
}

#[test]
fn table_lists_ten_classes() {
    let rows = json(&["table"]);
    assert_eq!(rows.len(), 10);
    assert_eq!(rows[0]["class"], "prolate_of_revolution");
    assert_eq!(num(&rows[7], "surface_area"), 0.0);
}
