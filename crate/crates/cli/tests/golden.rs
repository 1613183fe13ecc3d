//! Byte-level regression tests: figure output against the golden files in
//! tests/golden (generated with --samples 120), plus the other textual
//! surfaces of the CLI.

use std::fs;
use std::path::PathBuf;

use triorbit_cli::{
    apply_output, build_family, convert_output, median_output, orbit_certificate, orbit_output,
    orbit_trace_csv, run_suites, shape_output, verify_output, DataFormat, Mode, Suite, TextFormat,
};

const GOLDEN_SAMPLES: usize = 120;

fn golden_path(file: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(file)
}

#[test]
fn figures_match_golden_files() {
    for name in triorbit_cli::figures::FIGURE_NAMES {
        let out = triorbit_cli::figures::render(name, GOLDEN_SAMPLES).unwrap();
        let csv = fs::read_to_string(golden_path(&format!("{name}.csv"))).unwrap();
        let svg = fs::read_to_string(golden_path(&format!("{name}.svg"))).unwrap();
        assert_eq!(out.csv, csv, "{name}.csv drifted from golden");
        assert_eq!(out.svg, svg, "{name}.svg drifted from golden");
    }
}

#[test]
fn apply_reproduces_published_exact_image() {
    let out = apply_output(
        Mode::Exact,
        "S[p=4/5,q=(2+4i)/3]",
        "(0,1,(7+8i)/10)",
        TextFormat::Text,
    )
    .unwrap();
    assert_eq!(
        out,
        "(93/3050 + 542/1525*z^3, 201/305 - 46/305*z^3, 1541/1525 + 908/1525*z^3)"
    );

    // Identity echoes its input.
    let out = apply_output(Mode::Exact, "S[eta=1,eta'=1]", "(0, 1, i)", TextFormat::Text).unwrap();
    assert_eq!(out, "(0, 1, z^3)");

    // The median image agrees with the independent construction.
    let via_op = apply_output(
        Mode::Exact,
        "M[02/01][p=4/5,q=(2+4i)/3]",
        "(0,1,(7+8i)/10)",
        TextFormat::Text,
    )
    .unwrap();
    let d = triorbit::parse::parse_exact_triple("(0,1,(7+8i)/10)").unwrap();
    let pq = triorbit::operator::PQPair::new(
        triorbit::parse::parse_exact("4/5").unwrap(),
        triorbit::parse::parse_exact("(2+4i)/3").unwrap(),
    )
    .unwrap();
    let d_prime = triorbit::operator::CircOp::from_pq(&pq).apply(&d);
    let label = triorbit::median::MedianLabel::parse("02/01").unwrap();
    let oracle = triorbit::median::median_oracle(label, &d, &d_prime).unwrap();
    assert_eq!(via_op, oracle.to_string());
}

#[test]
fn apply_json_forms() {
    let out = apply_output(
        Mode::Approx,
        "S[p=0,q=1/2]",
        "[[0,0],[1,0],[0,1]]",
        TextFormat::Json,
    )
    .unwrap();
    assert_eq!(out, "[[0.5,0.5],[0.0,0.5],[0.5,0.0]]");
    let out = apply_output(Mode::Exact, "S[p=0,q=1/2]", "(0,1,i)", TextFormat::Json).unwrap();
    assert_eq!(out, "[\"1/2 + 1/2*z^3\",\"1/2*z^3\",\"1/2\"]");
}

#[test]
fn parse_errors_surface_with_position() {
    let err = apply_output(Mode::Exact, "S[p=4/5,q=#]", "(0,1,i)", TextFormat::Text)
        .unwrap_err()
        .to_string();
    assert!(err.contains("parse error"), "{err}");
    let err = apply_output(Mode::Exact, "S[p=1,q=1]", "(0,1,i)", TextFormat::Text)
        .unwrap_err()
        .to_string();
    assert!(err.contains("p*q != 1"), "{err}");
}

#[test]
fn convert_reports_all_three_systems() {
    let out = convert_output(Mode::Exact, "M[00/12][p=0,q=1/2]", TextFormat::Text).unwrap();
    assert_eq!(
        out,
        "coeffs: a=1/3, b=-1/6, g=5/6\n\
         fourier: eta=-1/2 + z^2, eta'=1/2 - z^2\n\
         cevian: p=2/7, q=-1/4"
    );
    // Singular pq view is reported, not fabricated: H_{-3}.
    let out = convert_output(Mode::Exact, "S[eta=-3+w,eta'=-3+w^2]", TextFormat::Text).unwrap();
    assert!(out.contains("cevian: unavailable"), "{out}");
}

#[test]
fn median_label_report() {
    let out = median_output("02/01", None, None, TextFormat::Text).unwrap();
    assert_eq!(
        out,
        "canonical: 02/01 (J^0)\n\
         fixed point: a=1/2, b=1/2, g=0\n\
         fixed-point pq: none"
    );
    let out = median_output("00/10", None, None, TextFormat::Text).unwrap();
    assert!(out.contains("point symmetry"), "{out}");
    let out = median_output("00/01", Some("1/3"), Some("1/5"), TextFormat::Text).unwrap();
    assert!(out.contains("composite: p1=13/11, q1=5/4"), "{out}");
}

#[test]
fn shape_report_modes() {
    let exact = shape_output(Mode::Exact, "(1, w, w^2)", TextFormat::Text).unwrap();
    assert!(exact.contains("psi: 0"), "{exact}");
    assert!(exact.contains("orientation: positive"), "{exact}");
    let swapped = shape_output(Mode::Exact, "(1, w^2, w)", TextFormat::Text).unwrap();
    assert!(swapped.contains("psi: inf"), "{swapped}");
    let degenerate = shape_output(Mode::Approx, "(0, i, -i)", TextFormat::Text).unwrap();
    assert!(degenerate.contains("DegenerateDistinct"), "{degenerate}");
    assert!(degenerate.contains("orientation: undefined"), "{degenerate}");
}

#[test]
fn orbit_outputs_are_deterministic() {
    let family = build_family("1:-2,-2:1", "-1:2,2:1", "(0,i,-i)", None).unwrap();
    let a = orbit_output(&family, 60, DataFormat::Csv).unwrap();
    let b = orbit_output(&family, 60, DataFormat::Csv).unwrap();
    assert_eq!(a, b);
    assert!(a.starts_with("t,vertex,re,im\n"));
    assert_eq!(a.lines().count(), 1 + 60 * 3);
    let svg = orbit_output(&family, 60, DataFormat::Svg).unwrap();
    assert!(svg.starts_with("<svg"));
    let json = orbit_output(&family, 60, DataFormat::Json).unwrap();
    assert!(serde_json::from_str::<serde_json::Value>(&json).is_ok());
}

#[test]
fn shape_trace_csv_export() {
    // Steiner family: |psi^3| is constant along the trace.
    let family = build_family("-1:1", "1:1", "(0,1,0.7+0.5i)", None).unwrap();
    let csv = orbit_trace_csv(&family, 30).unwrap();
    assert!(csv.starts_with("t,re,im\n"));
    let rows: Vec<f64> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let cols: Vec<&str> = line.split(',').collect();
            let re: f64 = cols[1].parse().unwrap();
            let im: f64 = cols[2].parse().unwrap();
            (re * re + im * im).sqrt()
        })
        .collect();
    assert_eq!(rows.len(), 30);
    for r in &rows {
        assert!((r - rows[0]).abs() <= 1e-9);
    }

    // A reversely oriented equilateral base sits at infinity.
    let family = build_family("1:1", "-1:1", "(1, w^2, w)", None).unwrap();
    let csv = orbit_trace_csv(&family, 3).unwrap();
    assert!(csv.lines().nth(1).unwrap().ends_with("inf,inf"));
}

#[test]
fn orbit_certificates() {
    let fig8 = build_family("1:-2,-2:1", "-1:2,2:1", "(0,i,-i)", None).unwrap();
    let cert: serde_json::Value =
        serde_json::from_str(&orbit_certificate(&fig8, 300).unwrap()).unwrap();
    assert_eq!(cert["class"], "Descending");
    assert_eq!(cert["certified"], true);

    let median8 = build_family(
        "1:-2,-2:1,0:w",
        "-1:2,2:1,0:w^2",
        "(0,4,3+i)",
        Some("01/01"),
    )
    .unwrap();
    let cert: serde_json::Value =
        serde_json::from_str(&orbit_certificate(&median8, 300).unwrap()).unwrap();
    assert_eq!(cert["class"], "Descending");
    assert_eq!(cert["certified"], true);

    let still = build_family("1:1", "1:1", "(0,1,0.7+0.5i)", None).unwrap();
    let cert: serde_json::Value =
        serde_json::from_str(&orbit_certificate(&still, 300).unwrap()).unwrap();
    assert_eq!(cert["class"], "NotTracing");
    assert_eq!(cert["certified"], serde_json::Value::Null);
}

#[test]
fn verify_suites_pass_and_report() {
    let reports = run_suites(Suite::Fixedpoints, 1, 10);
    assert!(reports.iter().all(|r| r.passed()));
    let text = verify_output(&reports, TextFormat::Text);
    assert!(text.contains("PASS fixedpoint-00/01"));
    assert!(text.ends_with("24 checks, 0 failed"));
    let json = verify_output(&reports, TextFormat::Json);
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed[0]["suite"], "fixedpoints");

    // Small smoke runs of the seeded suites through the CLI path.
    let reports = run_suites(Suite::Identities, 1, 5);
    assert!(reports.iter().all(|r| r.passed()));
    let reports = run_suites(Suite::Bclift, 1, 5);
    assert!(reports.iter().all(|r| r.passed()));
}
