//! End-to-end tests of the `wlp` binary against the shipped fixtures.

use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn wlp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlp"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn exit_codes_follow_the_verdicts() {
    let ok = wlp(&["check", fixture("sum_flat_pair.wlp").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let no = wlp(&["check", fixture("sum_mixed_behavior.wlp").to_str().unwrap()]);
    assert_eq!(no.status.code(), Some(1), "{}", stdout(&no));

    let err = wlp(&["check", "/nonexistent.wlp"]);
    assert_eq!(err.status.code(), Some(2));
}

#[test]
fn batch_check_keeps_input_order() {
    let out = wlp(&[
        "check",
        fixture("sum_flat_pair.wlp").to_str().unwrap(),
        fixture("sum_mixed_behavior.wlp").to_str().unwrap(),
    ]);
    let text = stdout(&out);
    let first = text.find("sum_flat_pair").unwrap();
    let second = text.find("sum_mixed_behavior").unwrap();
    assert!(first < second);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn explain_prints_the_reduction_trace() {
    let out = wlp(&[
        "explain",
        fixture("kernel_quotient_chain.wlp").to_str().unwrap(),
    ]);
    let text = stdout(&out);
    assert_eq!(out.status.code(), Some(0), "{text}");
    assert!(text.contains("Hilbert function: (5,6)"), "{text}");
    assert!(text.contains("quotient"), "{text}");
    assert!(text.contains("witness"), "{text}");
}

#[test]
fn oracle_command_agrees_with_the_default() {
    for (name, code) in [
        ("sum_flat_pair.wlp", 0),
        ("sum_mixed_behavior.wlp", 1),
        ("vanishing_pencil.wlp", 1),
        ("kernel_quotient_chain.wlp", 0),
        ("late_generator.wlp", 1),
    ] {
        let by_oracle = wlp(&["oracle", fixture(name).to_str().unwrap()]);
        assert_eq!(by_oracle.status.code(), Some(code), "{name}");
        let by_default = wlp(&["check", fixture(name).to_str().unwrap()]);
        assert_eq!(by_default.status.code(), Some(code), "{name}");
    }
}

#[test]
fn gamma_prints_the_certificate() {
    let out = wlp(&["gamma", fixture("vanishing_pencil.wlp").to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("p(gamma) = 0"), "{}", stdout(&out));

    let bad = wlp(&["gamma", fixture("kernel_quotient_chain.wlp").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(2), "non-square pair is out of scope");
}

#[test]
fn json_reports_match_text_verdicts_on_every_fixture() {
    for (name, verdict) in [
        ("sum_mixed_behavior.wlp", "no-wlp"),
        ("sum_flat_pair.wlp", "wlp"),
        ("vanishing_pencil.wlp", "no-wlp"),
        ("kernel_quotient_chain.wlp", "wlp"),
        ("late_generator.wlp", "no-wlp"),
    ] {
        let path = fixture(name);
        let json_out = wlp(&["check", "--json", "--witness", path.to_str().unwrap()]);
        let v: serde_json::Value =
            serde_json::from_str(stdout(&json_out).lines().next().unwrap()).unwrap();
        assert_eq!(v["verdict"], verdict, "{name}");

        let text_out = wlp(&["check", "--witness", path.to_str().unwrap()]);
        let text = stdout(&text_out);
        let expected = if verdict == "wlp" { ": WLP" } else { ": NO-WLP" };
        assert!(text.contains(expected), "{name}: {text}");

        // witnesses agree between the two encodings
        if let Some(w) = v["witness"].as_object() {
            assert!(
                text.contains(&format!("witness: {}", w["form"].as_str().unwrap())),
                "{name}: {text}"
            );
        }
    }
}

#[test]
fn explicit_determinant_method_fails_loudly_out_of_scope() {
    let out = wlp(&[
        "check",
        "--method",
        "determinant",
        fixture("kernel_quotient_chain.wlp").to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("algorithm method"), "{err}");
}

#[test]
fn method_flags_are_consistent_on_square_fixtures() {
    for method in ["auto", "algorithm", "determinant", "oracle"] {
        let out = wlp(&[
            "check",
            "--method",
            method,
            fixture("vanishing_pencil.wlp").to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(1), "method {method}");
    }
}
