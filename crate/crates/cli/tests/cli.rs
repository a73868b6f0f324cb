use std::collections::BTreeMap;
use std::process::{Command, Output};

use proptest::prelude::*;
use tbk_cli::{
    ClassEntry, ComplexValue, FactorsDocument, ReportDocument, RootEntry, VerifyDocument,
};

fn tbk(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tbk"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn factors_of_eight_eleven() {
    let o = tbk(&["factors", "27", "17", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: FactorsDocument = serde_json::from_str(&stdout(&o)).unwrap();
    let f = doc
        .classes
        .iter()
        .find(|c| c.factor == ["-1", "1", "2", "1"])
        .expect("factor -1,1,2,1");
    assert_eq!(f.g_exact.as_deref(), Some("-6"));
    assert!(f
        .g
        .iter()
        .all(|g| (g.re + 6.0).abs() < 1e-6 && g.im.abs() < 1e-6));

    let text = stdout(&tbk(&["factors", "27", "17"]));
    assert!(text.contains("factor -1,1,2,1"));
    assert!(text.contains("g = -6"));
}

#[test]
fn verify_exits_zero() {
    let o = tbk(&["verify-8-11", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: VerifyDocument = serde_json::from_str(&stdout(&o)).unwrap();
    assert!(doc.all_hold);
    assert_eq!(doc.checks.len(), 11);
}

#[test]
fn figure_eight_scan_finds_nothing() {
    let o = tbk(&["shimizu", "5", "3", "--root", "1", "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no witness"));
    let o = tbk(&["shimizu", "--omega", "0.5"]);
    assert!(stdout(&o).contains("witness: x2"));
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["prep", "4", "2"][..],
        &["prep", "27"],
        &["prep", "a", "b"],
        &["prep", "5", "3", "--nope"],
        &["shimizu", "5", "3", "--root", "1", "--max-len", "17"],
    ] {
        let o = tbk(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn operational_errors_are_json() {
    let o = tbk(&["longitude", "5", "3", "--root", "9"]);
    assert_eq!(o.status.code(), Some(2));
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "root_index");

    let o = tbk(&["roots", "5", "3", "--factor", "1,1"]);
    let err: serde_json::Value = serde_json::from_slice(&o.stderr).unwrap();
    assert_eq!(err["error"]["kind"], "not_a_factor");
}

#[test]
fn bad_thread_count_is_reported() {
    let o = Command::new(env!("CARGO_BIN_EXE_tbk"))
        .args(["prep", "5", "3"])
        .env("TBK_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));
    let o = Command::new(env!("CARGO_BIN_EXE_tbk"))
        .args(["prep", "5", "3"])
        .env("TBK_THREADS", "2")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn outputs_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let svg = |name: &str| dir.path().join(name);
    let run = |path: &std::path::Path| {
        tbk(&[
            "ford",
            "27",
            "17",
            "--factor",
            "-1,1,2,1",
            "--root",
            "2",
            "--depth",
            "8",
            "--json",
            "--svg",
            path.to_str().unwrap(),
        ])
    };
    let (a, b) = (run(&svg("a.svg")), run(&svg("b.svg")));
    assert_eq!(a.status.code(), Some(0));
    let strip = |o: &Output, name: &str| stdout(o).replace(svg(name).to_str().unwrap(), "");
    assert_eq!(strip(&a, "a.svg"), strip(&b, "b.svg"));
    let (sa, sb) = (
        std::fs::read(svg("a.svg")).unwrap(),
        std::fs::read(svg("b.svg")).unwrap(),
    );
    assert_eq!(sa, sb);
    let text = String::from_utf8(sa).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains("x1^-1 x2 x1^-1"));

    let r1 = stdout(&tbk(&["report", "27", "17", "--json"]));
    let r2 = stdout(&tbk(&["report", "27", "17", "--json"]));
    assert_eq!(r1, r2);
    let doc: ReportDocument = serde_json::from_str(&r1).unwrap();
    assert!(doc.timings.is_empty());
    assert_eq!(doc.lambda.len(), 14);
}

#[test]
fn acceptance_values_via_cli() {
    let o = stdout(&tbk(&["roots", "27", "17", "--factor", "-1,1,2,1"]));
    assert!(o.contains("-1.232785615938+0.792551992515i"));
    assert!(o.contains("0.465571231877+0.000000000000i"));
    let o = stdout(&tbk(&["longitude", "27", "17", "--factor", "-1,1,2,1"]));
    assert!(o.contains("exact g = -6"));
    let o = stdout(&tbk(&["longitude", "5", "3", "--root", "1"]));
    assert!(o.contains("|g| = 3.464101615138"));
    let o = stdout(&tbk(&["prep", "5", "3"]));
    assert!(o.contains("Lambda(u) = u^2 + u + 1"));
    assert!(o.contains("squarefree: true"));
}

#[test]
fn timings_only_on_request() {
    let doc: ReportDocument =
        serde_json::from_str(&stdout(&tbk(&["report", "7", "3", "--json", "--timings"]))).unwrap();
    let stages: Vec<&str> = doc.timings.keys().map(String::as_str).collect();
    assert_eq!(stages, ["detect_factors", "find_roots", "prep_polynomial"]);
}

fn finite() -> impl Strategy<Value = f64> {
    prop::num::f64::NORMAL | prop::num::f64::ZERO | prop::num::f64::SUBNORMAL
}

fn complex() -> impl Strategy<Value = ComplexValue> {
    (finite(), finite()).prop_map(|(re, im)| ComplexValue { re, im })
}

fn big_int() -> impl Strategy<Value = String> {
    (any::<i128>(), any::<u64>()).prop_map(|(a, b)| {
        let n = num_bigint::BigInt::from(a) * num_bigint::BigInt::from(b);
        n.to_string()
    })
}

fn document() -> impl Strategy<Value = ReportDocument> {
    (
        (big_int(), big_int()),
        prop::collection::vec(big_int(), 0..8),
        prop::collection::vec((finite(), finite(), finite()), 0..6),
        prop::collection::vec(
            (
                prop::collection::vec(big_int(), 1..5),
                prop::collection::vec(complex(), 0..4),
                prop::collection::vec(complex(), 0..4),
                prop::option::of(big_int()),
            ),
            0..4,
        ),
        prop::collection::btree_map("[a-z_]{1,12}", finite(), 0..4),
    )
        .prop_map(|(form, lambda, roots, classes, timings)| ReportDocument {
            schema_version: "1".into(),
            form: [form.0, form.1],
            lambda,
            roots: roots
                .into_iter()
                .map(|(re, im, residual)| RootEntry { re, im, residual })
                .collect(),
            classes: classes
                .into_iter()
                .map(|(factor, roots, g, g_exact)| ClassEntry {
                    factor,
                    roots,
                    g,
                    g_exact,
                })
                .collect(),
            timings: timings.into_iter().collect::<BTreeMap<_, _>>(),
        })
}

proptest! {
    #[test]
    fn report_round_trips(doc in document()) {
        let text = doc.to_json();
        let back: ReportDocument = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &doc);
        prop_assert_eq!(back.to_json(), text);
    }
}

#[test]
fn factor_from_fixture_file() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/eight_eleven.poly");
    let arg = format!("@{path}");
    let o = tbk(&["longitude", "27", "17", "--factor", &arg]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("exact g = -6"));
    let o = tbk(&["longitude", "27", "17", "--factor", "@/nonexistent/file"]);
    assert_eq!(o.status.code(), Some(2));
}
