use std::process::Command as Process;

use clap::Parser;
use gq::cli::{run, Cli};
use gq_core::number::int;
use gq_core::Mat2;
use proptest::prelude::*;
use serde_json::Value;

fn gq(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("gq").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn gq_json(args: &[&str]) -> Value {
    let mut v = args.to_vec();
    v.push("--json");
    let (code, out, err) = gq(&v);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

#[test]
fn documented_examples() {
    assert_eq!(
        gq(&["classify", "--a", "[1,0;0,1]", "--lambda", "1"])
            .1
            .lines()
            .next(),
        Some("HyperboloidOneSheet")
    );
    let (_, out, _) = gq(&["classify", "--a", "[1,0;0,0]", "--lambda", "0"]);
    assert_eq!(
        out.lines().next(),
        Some("TwoPuncturedPlanesPlusOrigin l_rep=[0,0;0,1] r_rep=[0,0;0,1]")
    );
    assert_eq!(
        gq(&["green", "--rel", "L", "[1,0;0,0]", "[2,0;3,0]"]).1,
        "true\n"
    );
    assert_eq!(
        gq(&["green", "--rel", "R", "[1,0;0,0]", "[2,0;3,0]"]).1,
        "false\n"
    );
    assert_eq!(
        gq(&["order", "[1,0;0,0]", "[1,0;0,1]"]).1,
        "natural_le: true\nminus_le: true\n"
    );
}

#[test]
fn bell_prints_quadratic_field_values() {
    let (code, out, _) = gq(&["bell", "--lambda", "1", "--point", "[1,0;0,0]"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("X = 0 + 1/2*sqrt2\n"), "{out}");
    assert!(out.contains("on_section: true"));
    // Back from the Bell frame lands on a rational matrix.
    let (_, out, _) = gq(&["bell", "--lambda", "1", "--from", "1/2*sqrt2,0,0"]);
    assert!(out.contains("x = [1,0;0,0]"), "{out}");
    let (_, out, _) = gq(&["--float", "bell", "--lambda", "1", "--point", "[1,0;0,0]"]);
    assert!(out.starts_with("X = 0.7071067811865476\n"), "{out}");
}

#[test]
fn json_and_text_agree() {
    for (a, l) in [
        ("[1,0;0,1]", "1"),
        ("[1,0;0,1]", "0"),
        ("[1,2;2,4]", "3"),
        ("[1,2;2,4]", "0"),
        ("[0,0;0,0]", "0"),
        ("[0,0;0,0]", "-1"),
    ] {
        let text = gq(&["classify", "--a", a, "--lambda", l]).1;
        let json = gq_json(&["classify", "--a", a, "--lambda", l]);
        assert_eq!(json["command"], "classify");
        let class = json["class"].as_str().unwrap();
        assert_eq!(text.split_whitespace().next(), Some(class));
        let affine = json["affine_class"].as_str().unwrap_or("none");
        assert!(text.contains(&format!("affine_class: {affine}")));
    }
    for (m, n) in [("[1,0;0,0]", "[1,0;0,1]"), ("[1,1;0,0]", "[1,0;0,0]")] {
        let text = gq(&["order", m, n]).1;
        let json = gq_json(&["order", m, n]);
        assert!(text.contains(&format!("natural_le: {}", json["natural_le"])));
        assert!(text.contains(&format!("minus_le: {}", json["minus_le"])));
    }
    let json = gq_json(&["plane", "[1,0;0,0]", "[0,0;1,0]"]);
    assert_eq!(
        gq(&["plane", "[1,0;0,0]", "[0,0;1,0]"]).1,
        format!(
            "{} rep={}\n",
            json["verdict"].as_str().unwrap(),
            json["rep"].as_str().unwrap()
        )
    );
    let json = gq_json(&["green", "--rel", "H", "[1,0;0,0]", "[3,0;0,0]"]);
    assert_eq!(json["related"], true);
    let json = gq_json(&["metrics", "--lambda", "2"]);
    assert_eq!(json["radius_sq"], "2");
    assert_eq!(json["center"], "[1,0;0,1]");
    let json = gq_json(&["lines", "--e", "[1,0;0,0]"]);
    assert_eq!(json["meet"], "[1,0;0,0]");
    let json = gq_json(&["inverses", "--a", "[1,0;0,0]", "--grid", "3"]);
    assert_eq!(json["grid"].as_array().unwrap().len(), 9);
}

#[test]
fn section_report_compares_both_sections() {
    let identity = gq_json(&[
        "order",
        "--section-report",
        "[1,0;0,1]",
        "--trials",
        "60",
        "--seed",
        "4",
    ]);
    assert_eq!(identity["sp_a_agrees"], true);
    assert_eq!(identity["counterexamples"].as_array().unwrap().len(), 0);
    let skew = gq_json(&[
        "order",
        "--section-report",
        "[2,1;0,3]",
        "--trials",
        "60",
        "--seed",
        "4",
    ]);
    assert_eq!(skew["agree_le_vs_inv_section"], 60);
    assert_eq!(skew["sp_a_agrees"], false);
}

#[test]
fn check_is_reproducible_and_filterable() {
    let a = gq(&["check", "--seed", "5", "--trials", "10"]);
    assert_eq!(a, gq(&["check", "--seed", "5", "--trials", "10"]));
    assert_eq!(a.0, 0);
    assert!(
        a.1.ends_with("summary: 27/27 invariants passed\n"),
        "{}",
        a.1
    );
    let sets = gq(&["check", "--seed", "5", "--trials", "10", "--suite", "sets"]).1;
    for line in sets
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
    {
        assert!(line.contains(" sets::"));
        assert!(a.1.contains(line));
    }
}

#[test]
fn trials_default_comes_from_the_environment() {
    let out = Process::new(env!("CARGO_BIN_EXE_gq"))
        .args(["check", "--suite", "exact"])
        .env("GQ_DEFAULT_TRIALS", "7")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("seed=0 trials=7\n"), "{text}");
    assert!(text.contains("7/7"));
}

#[test]
fn export_writes_files_atomically() {
    let dir = tempfile::tempdir().unwrap();
    let csv = dir.path().join("cone.csv");
    let (code, out, err) = gq(&[
        "export",
        "--kind",
        "nilpotents",
        "--samples",
        "50",
        "--seed",
        "2",
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(out.starts_with("wrote 50 points"));
    let rows = gq::export::read_csv(std::fs::File::open(&csv).unwrap()).unwrap();
    assert_eq!(rows.len(), 50);
    assert!(rows
        .iter()
        .all(|(x, bell)| gq::sample::near_singular(x, 1e-12) && bell.is_some()));

    let obj = dir.path().join("paraboloid.obj");
    let args = [
        "export",
        "--kind",
        "section",
        "--a",
        "[1,1;1,1]",
        "--lambda",
        "2",
        "--samples",
        "20",
        "--format",
        "obj",
        "--out",
        obj.to_str().unwrap(),
    ];
    assert_eq!(gq(&args).0, 0);
    let text = std::fs::read_to_string(&obj).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 20);
    // Only the two target files remain; temporaries were renamed away.
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 2);

    let missing = gq(&[
        "export",
        "--kind",
        "section",
        "--a",
        "[1,0;0,1]",
        "--format",
        "csv",
        "--out",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(missing.0, 1);
    assert!(missing.2.contains("--lambda"));
}

#[test]
fn exit_codes() {
    assert_eq!(gq(&["--help"]).0, 0);
    assert_eq!(gq(&["classify", "--a", "[1,0;0,1]", "--lambda", "x"]).0, 1);
    assert_eq!(gq(&["order", "[1,0;0,0]", "[1,0;0,0]", "--seed", "3"]).0, 1);
    assert_eq!(gq(&["inverses", "--a", "[0,0;0,0]"]).0, 2);
    let (code, _, err) = gq(&["order", "--section-report", "[1,2;2,4]"]);
    assert_eq!(code, 2);
    assert!(err.contains("singular"), "{err}");
}

fn small_mat() -> impl Strategy<Value = Mat2> {
    (-9i64..10, -9i64..10, -9i64..10, -9i64..10, 1i64..5)
        .prop_map(|(a, b, c, d, k)| Mat2::int(a, b, c, d).scale(&(int(1) / int(k))))
}

fn rational_text() -> impl Strategy<Value = String> {
    (-20i64..20, 1i64..7).prop_map(|(n, d)| format!("{n}/{d}"))
}

proptest! {
    #[test]
    fn canonical_arguments_round_trip(
        a in small_mat(),
        b in small_mat(),
        l in rational_text(),
        json in any::<bool>(),
        float in any::<bool>(),
        which in 0usize..8,
        seed in any::<u64>(),
    ) {
        let (a_s, b_s) = (a.to_string(), b.to_string());
        let mut args: Vec<String> = match which {
            0 => vec!["classify".into(), "--a".into(), a_s, "--lambda".into(), l],
            1 => vec!["green".into(), "--rel".into(), "D".into(), a_s, b_s],
            2 => vec!["order".into(), a_s, b_s],
            3 => vec!["order".into(), "--section-report".into(), a_s, "--seed".into(), seed.to_string()],
            4 => vec!["plane".into(), a_s, b_s],
            5 => vec!["bell".into(), "--lambda".into(), l, "--point".into(), a_s],
            6 => vec!["export".into(), "--kind".into(), "section".into(), "--a".into(), a_s, "--lambda".into(), l,
                      "--format".into(), "obj".into(), "--out".into(), "x.obj".into(), "--z-range".into(), "-1.5,2".into()],
            _ => vec!["check".into(), "--seed".into(), seed.to_string(), "--suite".into(), "core".into()],
        };
        if json && which != 6 {
            args.push("--json".into());
        }
        if float {
            args.insert(0, "--float".into());
        }
        let parsed = Cli::try_parse_from(std::iter::once("gq".to_string()).chain(args)).unwrap();
        let canonical = parsed.to_args();
        let reparsed = Cli::try_parse_from(std::iter::once("gq".to_string()).chain(canonical.clone())).unwrap();
        prop_assert_eq!(&reparsed, &parsed);
        prop_assert_eq!(reparsed.to_args(), canonical);
    }
}
