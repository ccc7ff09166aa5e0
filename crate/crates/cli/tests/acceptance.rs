//! Acceptance suite: one test per criterion, each printing a PASS line with
//! its measured runtime. Tolerances are pinned in the asserts.

use std::path::PathBuf;
use std::time::{Duration, Instant};

use lefschetz::field::FieldSpec;
use lefschetz::linalg::Matrix;
use lefschetz::module::{cyclic, GradedModule};
use lefschetz::wlp::{
    determinant_method, has_wlp, kernel_quotient_check, pencil_oracle, reduction_step,
    search_independent_multipliers, verify_witness, LinearForm, Method, ReductionOutcome,
    TraceStep, Var, WlpError,
};
use lefschetz_cli::build::build_module;
use lefschetz_cli::run::{run_check, CheckOptions, Exit};
use lefschetz_cli::spec::parse_spec;
use lefschetz_testkit as testkit;

const Q: FieldSpec = FieldSpec::Rationals;

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

fn fixture_module(name: &str) -> GradedModule {
    let text = std::fs::read_to_string(fixture_path(name)).expect("fixture exists");
    build_module(&parse_spec(&text).expect("fixture parses")).expect("fixture builds")
}

fn check_fixture(name: &str, opts: CheckOptions) -> (String, Exit) {
    let path = fixture_path(name);
    let (out, err, exit) = run_check(&[path.as_path()], opts);
    assert!(err.is_empty(), "{name}: {err}");
    (out, exit)
}

fn assert_within(elapsed: Duration, bound: Duration, label: &str) {
    assert!(
        elapsed < bound,
        "{label}: took {elapsed:?}, bound {bound:?}"
    );
}

#[test]
fn criterion_01_mixed_behavior_sum_has_no_wlp() {
    let start = Instant::now();
    let (out, exit) = check_fixture("sum_mixed_behavior.wlp", CheckOptions::default());
    assert_eq!(exit, Exit::NoWlp);
    assert!(out.contains("NO-WLP"), "{out}");
    assert!(out.contains("(2,2)"), "Hilbert function line: {out}");
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(1), "criterion 1");
    println!("criterion 1 PASS: mixed-behavior sum rejected, HF (2,2), {elapsed:?}");
}

#[test]
fn criterion_02_flat_pair_sum_has_wlp_with_witness_y() {
    let start = Instant::now();
    let (out, exit) = check_fixture(
        "sum_flat_pair.wlp",
        CheckOptions {
            witness: true,
            ..CheckOptions::default()
        },
    );
    assert_eq!(exit, Exit::Wlp);
    assert!(out.contains(": WLP"), "{out}");
    assert!(out.contains("witness: y"), "{out}");
    // y supplied from outside must be accepted as a witness
    let m = fixture_module("sum_flat_pair.wlp");
    assert!(verify_witness(&m, &LinearForm::pure_y(Q)));
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(1), "criterion 2");
    println!("criterion 2 PASS: flat pair accepted with witness y, {elapsed:?}");
}

#[test]
fn criterion_03_vanishing_pencil_certificate() {
    let start = Instant::now();
    let m = fixture_module("vanishing_pencil.wlp");
    assert_eq!(m.hilbert_function().values, vec![3, 3]);

    let pair = m.degree_pair(0).unwrap();
    assert_eq!(
        search_independent_multipliers(&pair).unwrap(),
        Some(vec![Var::X, Var::Y, Var::Y]),
        "multiplier assignment"
    );

    let (report, certificate) = determinant_method(&pair).unwrap();
    assert!(!report.verdict);
    assert!(certificate.is_zero(), "p(gamma) vanishes identically");

    // block-form matrices recorded in the trace
    let (mat_x, mat_y) = report
        .trace
        .iter()
        .find_map(|e| match &e.step {
            TraceStep::DeterminantStep { mat_x, mat_y, .. } => Some((mat_x, mat_y)),
            _ => None,
        })
        .expect("determinant step present");
    assert_eq!(
        *mat_x,
        Matrix::from_int_rows(Q, &[&[1, 1, 0], &[0, 0, 0], &[0, -2, 0]])
    );
    assert_eq!(
        *mat_y,
        Matrix::from_int_rows(Q, &[&[0, 0, 0], &[1, 1, 0], &[0, 0, 1]])
    );

    let (_, exit) = check_fixture("vanishing_pencil.wlp", CheckOptions::default());
    assert_eq!(exit, Exit::NoWlp);
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(1), "criterion 3");
    println!("criterion 3 PASS: zero certificate with the block matrices, {elapsed:?}");
}

#[test]
fn criterion_04_kernel_quotient_chain_trace() {
    let start = Instant::now();
    let m = fixture_module("kernel_quotient_chain.wlp");
    assert_eq!(m.hilbert_function().values, vec![5, 6]);
    assert_eq!(m.hilbert_function().shift, 8);

    let report = kernel_quotient_check(&m.degree_pair(0).unwrap()).unwrap();
    assert!(report.verdict);

    // each cycle: two one-dimensional kernels, two empty meets, a quotient
    let kernel_dims: Vec<usize> = report
        .trace
        .iter()
        .filter_map(|e| match &e.step {
            TraceStep::InjectionCheck { kernel, .. } => Some(kernel.dim()),
            _ => None,
        })
        .collect();
    assert_eq!(
        kernel_dims,
        vec![1, 1, 1, 1, 0],
        "two cycles of (1,1) kernels, then x injective"
    );
    let meets_trivial = report.trace.iter().all(|e| match &e.step {
        TraceStep::KernelMeet { meet } | TraceStep::ImageMeet { meet } => meet.is_zero(),
        _ => true,
    });
    assert!(meets_trivial, "both meet steps trivial in both cycles");
    let quotients: Vec<(usize, usize)> = report
        .trace
        .iter()
        .filter_map(|e| match e.step {
            TraceStep::QuotientStep { dims, .. } => Some(dims),
            _ => None,
        })
        .collect();
    assert_eq!(quotients, vec![(3, 4), (1, 2)]);

    let (_, exit) = check_fixture("kernel_quotient_chain.wlp", CheckOptions::default());
    assert_eq!(exit, Exit::Wlp);
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(2), "criterion 4");
    println!("criterion 4 PASS: (5,6) -> (3,4) -> (1,2) -> x injective, {elapsed:?}");
}

#[test]
fn criterion_05_late_generator_fails_at_degrees_3_4() {
    let start = Instant::now();
    let m = fixture_module("late_generator.wlp");
    assert_eq!(m.hilbert_function().values, vec![1, 2, 2, 2, 2]);
    assert_eq!(m.hilbert_function().shift, 1);

    let report = has_wlp(&m, Method::Auto).unwrap();
    assert!(!report.verdict);
    let failing: Vec<i64> = report
        .per_degree
        .iter()
        .filter(|c| !c.passes())
        .map(|c| c.degree)
        .collect();
    assert_eq!(failing, vec![3], "the degree 3 -> 4 transition fails");

    // the degree-4 minimal generator is reported
    let gens: Vec<(i64, usize)> = m
        .minimal_generator_degrees()
        .into_iter()
        .map(|(d, c)| (m.shift() + d as i64, c))
        .collect();
    assert!(gens.contains(&(4, 1)), "degree-4 generator in {gens:?}");
    let (out, exit) = check_fixture("late_generator.wlp", CheckOptions::default());
    assert_eq!(exit, Exit::NoWlp);
    assert!(out.contains("degree 4"), "{out}");
    assert!(out.contains("failing degrees: 3 -> 4"), "{out}");
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(1), "criterion 5");
    println!("criterion 5 PASS: failing pair (3,4) with a degree-4 generator, {elapsed:?}");
}

#[test]
fn criterion_06_method_agreement_on_500_random_modules() {
    let start = Instant::now();
    let mut pairs_checked = 0usize;
    let mut determinant_runs = 0usize;
    for seed in 0..500u64 {
        let m = testkit::random_module(&mut testkit::rng(100_000 + seed));
        for i in 0..m.len().saturating_sub(1) {
            let pair = m.degree_pair(i).unwrap();
            let work = if m.dims()[i] > m.dims()[i + 1] {
                pair.dual()
            } else {
                pair
            };
            let algo = kernel_quotient_check(&work).unwrap();
            let oracle = pencil_oracle(&work).unwrap();
            assert_eq!(
                algo.verdict, oracle.verdict,
                "seed {seed}, degree pair {i}: algorithm vs oracle"
            );
            match determinant_method(&work) {
                Ok((det, certificate)) => {
                    determinant_runs += 1;
                    assert_eq!(
                        det.verdict, algo.verdict,
                        "seed {seed}, degree pair {i}: determinant vs algorithm"
                    );
                    assert_eq!(certificate.is_zero(), !det.verdict);
                }
                Err(WlpError::PairNotSquare(..)) | Err(WlpError::NotDegreeZeroGenerated) => {}
                Err(e) => panic!("seed {seed}: unexpected determinant error {e}"),
            }
            if algo.verdict {
                let w = algo.witness.expect("witness over the rationals");
                assert!(verify_witness(&work, &w), "seed {seed}: witness re-check");
            }
            pairs_checked += 1;
        }
    }
    let elapsed = start.elapsed();
    assert_within(elapsed, Duration::from_secs(60), "criterion 6");
    assert!(pairs_checked >= 500, "at least one pair per module");
    assert!(determinant_runs >= 100, "determinant method actually exercised");
    println!(
        "criterion 6 PASS: {pairs_checked} degree pairs over 500 modules agree across methods ({determinant_runs} determinant runs), {elapsed:?}"
    );
}

#[test]
fn criterion_07_cyclic_law_on_200_random_ideals() {
    let start = Instant::now();
    for seed in 0..200u64 {
        let ideal = testkit::random_artinian_ideal(&mut testkit::rng(200_000 + seed));
        let m = cyclic(&ideal, Q).unwrap();
        let report = has_wlp(&m, Method::Auto).unwrap();
        assert!(report.verdict, "seed {seed}: cyclic quotient rejected");
        let w = report.witness.expect("witness over the rationals");
        assert!(verify_witness(&m, &w), "seed {seed}: witness re-check");
    }
    let elapsed = start.elapsed();
    println!("criterion 7 PASS: 200 cyclic quotients all accepted, {elapsed:?}");
}

#[test]
fn criterion_08_duality_on_200_random_modules() {
    let start = Instant::now();
    for seed in 0..200u64 {
        let m = testkit::random_module(&mut testkit::rng(300_000 + seed));
        let direct = has_wlp(&m, Method::Auto).unwrap();
        let dual = has_wlp(&m.dual(), Method::Auto).unwrap();
        assert_eq!(direct.verdict, dual.verdict, "seed {seed}: dual verdict");
        let hf: Vec<usize> = m.hilbert_function().values;
        let dual_hf: Vec<usize> = m.dual().hilbert_function().values;
        let reversed: Vec<usize> = hf.iter().rev().cloned().collect();
        assert_eq!(dual_hf, reversed, "seed {seed}: dual Hilbert function");
        if direct.verdict {
            assert!(verify_witness(&m, direct.witness.as_ref().unwrap()));
        }
    }
    let elapsed = start.elapsed();
    println!("criterion 8 PASS: 200 modules match their duals, {elapsed:?}");
}

#[test]
fn criterion_09_reduction_equivalence_via_the_oracle() {
    let start = Instant::now();
    let mut reductions = 0usize;

    let mut check = |pair: &GradedModule, label: String| {
        if let ReductionOutcome::Reduced { quotient, .. } = reduction_step(pair).unwrap() {
            reductions += 1;
            let before = pencil_oracle(pair).unwrap().verdict;
            let after = if quotient.len() < 2 {
                true
            } else {
                pencil_oracle(&quotient).unwrap().verdict
            };
            assert_eq!(before, after, "{label}: reduction changed the verdict");
        }
    };

    // engineered pairs that force nonzero kernels
    for seed in 0..150u64 {
        let mut rng = testkit::rng(400_000 + seed);
        let h0 = 2 + (seed as usize % 4);
        let h1 = h0 + (seed as usize % 3);
        let pair = testkit::random_pair_with_kernels(&mut rng, h0, h1);
        check(&pair, format!("engineered seed {seed}"));
    }
    // degree pairs of the random-module population
    for seed in 0..150u64 {
        let m = testkit::random_module(&mut testkit::rng(410_000 + seed));
        for i in 0..m.len().saturating_sub(1) {
            if m.dims()[i] <= m.dims()[i + 1] {
                check(
                    &m.degree_pair(i).unwrap(),
                    format!("module seed {seed} pair {i}"),
                );
            }
        }
    }
    assert!(reductions >= 50, "population reached the quotient step {reductions} times");
    let elapsed = start.elapsed();
    println!(
        "criterion 9 PASS: {reductions} quotient reductions preserve the oracle verdict, {elapsed:?}"
    );
}

#[test]
fn criterion_10_positive_verdicts_ship_verified_witnesses() {
    let start = Instant::now();
    let mut verified = 0usize;
    for seed in 0..200u64 {
        let m = testkit::random_module(&mut testkit::rng(500_000 + seed));
        for method in [Method::Algorithm, Method::Oracle] {
            let report = has_wlp(&m, method).unwrap();
            if report.verdict {
                let w = report.witness.expect("witness over the rationals");
                for i in 0..m.len().saturating_sub(1) {
                    let required = m.dims()[i].min(m.dims()[i + 1]);
                    let rank = m
                        .mul_x(i)
                        .pencil_at(m.mul_y(i), &w.x_coeff, &w.y_coeff)
                        .rank();
                    assert_eq!(rank, required, "seed {seed}, degree {i}, method {method}");
                }
                verified += 1;
            }
        }
    }
    // the fixtures with positive verdicts also re-verify
    for name in ["sum_flat_pair.wlp", "kernel_quotient_chain.wlp"] {
        let m = fixture_module(name);
        let report = has_wlp(&m, Method::Auto).unwrap();
        assert!(report.verdict);
        assert!(verify_witness(&m, report.witness.as_ref().unwrap()));
        verified += 1;
    }
    assert!(verified >= 50, "population has positive verdicts: {verified}");
    let elapsed = start.elapsed();
    println!("criterion 10 PASS: {verified} positive verdicts re-verified their witnesses, {elapsed:?}");
}

/// The shipped manifest is the self-describing form of criteria 1-5: every
/// fixture must produce its recorded verdict, Hilbert function, witness,
/// and failing degrees.
#[test]
fn manifest_expectations_hold() {
    let manifest_text =
        std::fs::read_to_string(fixture_path("manifest.json")).expect("manifest exists");
    let manifest: serde_json::Value = serde_json::from_str(&manifest_text).unwrap();
    let fixtures = manifest["fixtures"].as_array().unwrap();
    assert_eq!(fixtures.len(), 5);
    for entry in fixtures {
        let name = entry["file"].as_str().unwrap();
        let path = fixture_path(name);
        let (out, err, exit) = run_check(
            &[path.as_path()],
            CheckOptions {
                json: true,
                witness: true,
                ..CheckOptions::default()
            },
        );
        assert!(err.is_empty(), "{name}: {err}");
        let report: serde_json::Value = serde_json::from_str(out.lines().next().unwrap()).unwrap();
        assert_eq!(report["verdict"], entry["verdict"], "{name}");
        let expected_exit = if entry["verdict"] == "wlp" { 0 } else { 1 };
        assert_eq!(exit.code(), expected_exit, "{name}");
        assert_eq!(
            report["hilbert_function"], entry["hilbert_function"],
            "{name}"
        );
        if let Some(w) = entry.get("witness").and_then(|w| w.as_str()) {
            assert_eq!(report["witness"]["form"], w, "{name}");
        }
        if let Some(failing) = entry.get("failing_degrees").and_then(|f| f.as_array()) {
            let reported: Vec<i64> = report["per_degree"]
                .as_array()
                .unwrap()
                .iter()
                .filter(|c| c["ok"] == false)
                .map(|c| c["degree"].as_i64().unwrap())
                .collect();
            let expected: Vec<i64> = failing.iter().map(|v| v.as_i64().unwrap()).collect();
            assert_eq!(reported, expected, "{name}");
        }
    }
    println!("manifest PASS: all five fixtures match their recorded expectations");
}
