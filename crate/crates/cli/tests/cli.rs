//! End-to-end tests of the `denum` binary: output contracts, exit codes,
//! and the JSON round trip.

use std::collections::BTreeMap;
use std::process::{Command, Output};

use denumerant::{rat, Poly, QuasiPolynomial};
use denumerant_cli::output::{doc_to_exact_waves, WavesDoc};

fn denum(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_denum"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8_lossy(&out.stdout).into_owned()
}

#[test]
fn waves_text_matches_reference_values() {
    let out = denum(&["waves", "-a", "1,3,6"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("W_1 (period 1):\n  P_1(t) = 1/36*t^2 + 5/18*t + 127/216"));
    assert!(text.contains("W_2 (period 2):\n  P_1(t) = -1/24\n  P_2(t) = 1/24"));
    assert!(text.contains("P_2(t) = -1/18*t - 29/108"));
    assert!(text.contains("P_3(t) = 1/18*t + 31/108"));
    assert!(text.contains("combined (period 6):"));
}

#[test]
fn waves_single_entry() {
    let out = denum(&["waves", "-a", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("W_1 (period 1):\n  P_1(t) = 1"));
}

#[test]
fn json_round_trip_preserves_exact_coefficients() {
    let out = denum(&["waves", "-a", "1,3,6", "--output", "json"]);
    assert!(out.status.success());
    let doc: WavesDoc = serde_json::from_str(&stdout(&out)).expect("valid JSON");
    assert_eq!(doc.sequence, vec![1, 3, 6]);
    assert_eq!(doc.backend, "exact");

    let parsed = doc_to_exact_waves(&doc).expect("parsable coefficients");
    let direct = denumerant::all_waves(&[1, 3, 6]).unwrap();
    assert_eq!(parsed, direct.into_iter().collect::<BTreeMap<_, _>>());

    // combined section present and correct for this small period
    let combined = doc.combined.as_ref().expect("period 6 fits");
    assert_eq!(combined.period, 6);
    assert_eq!(combined.components.len(), 6);

    // re-emitting the parsed waves reproduces the identical document
    let doc2 = denumerant_cli::output::exact_doc(&doc.sequence, &parsed);
    assert_eq!(
        serde_json::to_string(&doc2).unwrap(),
        serde_json::to_string(&doc).unwrap()
    );
}

#[test]
fn eval_reference_points() {
    let out = denum(&["eval", "-a", "1,3,6", "-t", "14"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "9");

    let out = denum(&["eval", "-a", "1,3,6", "-t", "1789682"]);
    assert_eq!(stdout(&out).trim(), "88971554961");

    let out = denum(&["eval", "-a", "1,3,6", "-t", "0"]);
    assert_eq!(stdout(&out).trim(), "1");
}

#[test]
fn eval_float_prints_residual_diagnostic() {
    let out = denum(&["eval", "-a", "1,3,6", "-t", "14", "--backend", "float"]);
    assert!(out.status.success());
    let val: f64 = stdout(&out).trim().parse().unwrap();
    assert!((val - 9.0).abs() < 1e-8);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("max imaginary residual"), "stderr: {err}");
}

#[test]
fn invalid_sequences_exit_2_with_diagnostic() {
    let cases: &[(&[&str], &str)] = &[
        (&["waves", "-a", "2,4"], "gcd"),
        (&["waves", "-a", "1,3,3"], "distinct"),
        (&["waves", "-a", "1,0,3"], "positive"),
        (&["eval", "-a", "2,6", "-t", "5"], "gcd"),
    ];
    for (args, needle) in cases {
        let out = denum(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert!(err.contains(needle), "args {args:?}: {err}");
    }
}

#[test]
fn upto_shorthand_matches_explicit_sequence() {
    let a = denum(&["waves", "--upto", "6", "--output", "json"]);
    let b = denum(&["waves", "-a", "1,2,3,4,5,6", "--output", "json"]);
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn thread_count_does_not_change_output() {
    for backend in ["exact", "float"] {
        let one = denum(&[
            "waves", "-a", "4,6,9,1", "--backend", backend, "--output", "json", "--threads", "1",
        ]);
        let four = denum(&[
            "waves", "-a", "4,6,9,1", "--backend", backend, "--output", "json", "--threads", "4",
        ]);
        assert_eq!(stdout(&one), stdout(&four), "backend {backend}");
    }
}

#[test]
fn bench_k1_is_empty_and_rows_start_at_2() {
    let out = denum(&["bench", "-k", "1"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1, "header only: {text}");

    let out = denum(&["bench", "-k", "4", "--output", "json"]);
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 3);
    assert_eq!(rows[0]["k"], 2);
    assert_eq!(rows[2]["status"], "OK");
}

#[test]
fn selftest_reports_pass_with_counts() {
    let out = denum(&["selftest"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("PASS ("), "{text}");
    assert!(text.contains("checks"), "{text}");
}

#[test]
fn float_waves_json_parses_as_floats() {
    let out = denum(&["waves", "-a", "1,2", "--backend", "float", "--output", "json"]);
    assert!(out.status.success());
    let doc: WavesDoc = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(doc.backend, "float");
    let w1 = &doc.waves[0];
    let c: f64 = w1.components[0].coeffs[1].parse().unwrap();
    assert!((c - 0.5).abs() < 1e-12); // leading coefficient of t/2 + 3/4
}

#[test]
fn quasipoly_reconstruction_from_parts() {
    // spot check that the parsed JSON evaluates like the library
    let out = denum(&["waves", "-a", "2,3", "--output", "json"]);
    let doc: WavesDoc = serde_json::from_str(&stdout(&out)).unwrap();
    let waves = doc_to_exact_waves(&doc).unwrap();
    let w1 = &waves[&1];
    assert_eq!(w1.component(1), &Poly::from_coeffs(vec![rat(5, 12), rat(1, 6)]));
    let total: denumerant::Rat = waves.values().map(|w: &QuasiPolynomial| w.eval(11)).sum();
    assert_eq!(total, rat(2, 1)); // 11 = 2+3+3+3 = 2+2+2+2+3
}
