//! End-to-end checks of the binary: table values, digit output, exit codes,
//! byte-determinism, and exact round-trips of the emitted tables.

use std::process::Command;

fn zeta3(args: &[&str]) -> (String, String, Option<i32>) {
    let out = Command::new(env!("CARGO_BIN_EXE_zeta3"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
        out.status.code(),
    )
}

#[test]
fn convergents_csv_contains_tabulated_row() {
    let (stdout, _, code) = zeta3(&["convergents", "--spec", "nesterenko", "--n", "6", "--format", "csv"]);
    assert_eq!(code, Some(0));
    let row6 = stdout.lines().nth(7).unwrap();
    assert!(row6.starts_with("6,8424,7008,"), "row 6 was {row6}");
}

#[test]
fn convergents_depth_zero() {
    let (stdout, _, code) = zeta3(&["convergents", "--spec", "apery", "--n", "0", "--format", "csv"]);
    assert_eq!(code, Some(0));
    let row = stdout.lines().nth(1).unwrap();
    assert!(row.starts_with("0,0,1,0.0000"), "row was {row}");
}

#[test]
fn convergents_expansion_ratio() {
    let (stdout, _, code) =
        zeta3(&["convergents", "--spec", "theoremA1", "--n", "2", "--format", "csv", "--precision", "7"]);
    assert_eq!(code, Some(0));
    let last = stdout.lines().last().unwrap();
    assert!(last.starts_with("2,4809132,2000376,2.4041140,"), "row was {last}");
}

#[test]
fn json_tables_round_trip_exactly() {
    let (stdout, _, code) = zeta3(&["convergents", "--spec", "apery", "--n", "8", "--format", "json"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 9);
    // v_2 = 351/4 survives the string representation exactly
    assert_eq!(rows[2]["p"]["num"], "351");
    assert_eq!(rows[2]["p"]["den"], "4");
    let reparsed: Vec<zeta3::exact::Rational> = rows
        .iter()
        .map(|r| {
            let repr = zeta3::report::RationalRepr {
                num: r["p"]["num"].as_str().unwrap().to_string(),
                den: r["p"]["den"].as_str().unwrap().to_string(),
            };
            repr.parse().unwrap()
        })
        .collect();
    let pairs = zeta3::apery::apery_pairs(8);
    for (got, want) in reparsed.iter().zip(pairs.iter()) {
        assert_eq!(got, &want.v);
    }
}

#[test]
fn identical_invocations_are_byte_identical() {
    let a = zeta3(&["convergents", "--spec", "zeta3", "--n", "12", "--format", "json"]);
    let b = zeta3(&["convergents", "--spec", "zeta3", "--n", "12", "--format", "json"]);
    assert_eq!(a.0, b.0);
    let c = zeta3(&["digits", "--count", "25"]);
    let d = zeta3(&["digits", "--count", "25"]);
    assert_eq!(c.0, d.0);
}

#[test]
fn digits_output() {
    let (stdout, _, code) = zeta3(&["digits", "--count", "10"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("zeta(3) = 1.2020569032"), "got {stdout}");
    let (stdout, _, code) = zeta3(&["digits", "--count", "1"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("zeta(3) = 1.2 "), "got {stdout}");
    let (stdout, _, code) = zeta3(&["digits", "--count", "10", "--double"]);
    assert_eq!(code, Some(0));
    assert!(stdout.contains("2*zeta(3) = 2.4041138063"), "got {stdout}");
}

#[test]
fn excessive_precision_is_usage_error() {
    let (_, stderr, code) = zeta3(&["digits", "--count", "1001"]);
    assert_eq!(code, Some(2));
    assert!(stderr.contains("between 1 and 1000"));
}

#[test]
fn bad_arguments_exit_2() {
    let (_, _, code) = zeta3(&["convergents", "--spec", "unknown", "--n", "3"]);
    assert_eq!(code, Some(2));
    let (_, _, code) = zeta3(&["verify", "--suite", "nonsense"]);
    assert_eq!(code, Some(2));
}

#[test]
fn verify_nesterenko_suite_passes() {
    let (stdout, _, code) = zeta3(&["verify", "--suite", "nesterenko", "--kmax", "40"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["suite"], "nesterenko");
    assert!(doc["checks"].as_array().unwrap().len() >= 8);
    assert!(doc["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
}

#[test]
fn verify_matrix_suite_reports_waivers() {
    let (stdout, _, code) = zeta3(&["verify", "--suite", "matrix", "--alpha", "1"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let waivers = doc["waivers"].as_array().unwrap();
    assert!(!waivers.is_empty());
    assert!(waivers.iter().any(|w| w.as_str().unwrap().contains("(4,1)")));
}

#[test]
fn verify_beta_suite_passes_small() {
    let (stdout, _, code) = zeta3(&["verify", "--suite", "beta", "--numax", "6"]);
    assert_eq!(code, Some(0), "stdout: {stdout}");
}

#[test]
fn beta_table_json_is_exact() {
    let (stdout, _, code) = zeta3(&["beta-table", "--alpha", "1", "--nu", "1", "--r", "1"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(doc["beta2"][1]["num"], "16");
    assert_eq!(doc["stars"]["p4"][0]["num"], "51");
    assert_eq!(doc["stars"]["p4"][0]["den"], "4");
}

#[test]
fn slope_report_shape() {
    let (stdout, _, code) = zeta3(&["slopes", "--which", "1", "--lo", "5", "--hi", "20"]);
    assert_eq!(code, Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let s = doc["slopes"]["ratio_error"].as_f64().unwrap();
    assert!(s < -6.5 && s > -7.6, "ratio error slope {s}");
    let (_, _, code) = zeta3(&["slopes", "--which", "3"]);
    assert_eq!(code, Some(2));
}
