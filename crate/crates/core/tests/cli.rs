use std::process::{Command, Output};

use schubert_tangent::cli::{
    to_json, CominusculeView, DemazureView, ErrorView, KClassView, ReportView, SubwordComplexView,
    VerifyView, SCHEMA_VERSION,
};
use schubert_tangent::Verdict;
use serde::de::DeserializeOwned;
use serde::Serialize;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_schubert-tangent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

/// Parses, checks the version, and checks re-serialization is byte-identical.
fn round_trip<T: Serialize + DeserializeOwned>(o: &Output) -> T {
    let text = stdout(o);
    let raw: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(raw["schema_version"], SCHEMA_VERSION);
    let v: T = serde_json::from_str(&text).unwrap();
    assert_eq!(to_json(&v) + "\n", text);
    v
}

#[test]
fn tangent_report_json() {
    let o = run(&["tangent", "A2", "--x", "1 2 1", "--w", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: ReportView = round_trip(&o);
    let verdicts: Vec<Verdict> = v.statuses.iter().map(|s| s.verdict).collect();
    assert_eq!(verdicts, [Verdict::In, Verdict::Undetermined, Verdict::In]);
    let kl: Vec<&str> = v
        .kl_tangent_weights
        .iter()
        .map(|w| w.root.as_str())
        .collect();
    assert_eq!(kl, ["α1", "α2"]);
    assert!(!v.complete);
    assert!(v.schubert_tangent_weights.is_none());
    assert!(v.schubert_extra_weights.is_empty());
}

#[test]
fn tangent_accepts_named_letters_and_oracle_flag() {
    let o = run(&[
        "tangent",
        "A2",
        "--x",
        "s1 s2 s1",
        "--w",
        "s1",
        "--type-a-oracle",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: ReportView = round_trip(&o);
    assert_eq!(v.statuses[1].verdict, Verdict::Out);
    assert_eq!(v.statuses[1].evidence.type_a_oracle, Some(false));
    assert!(v.complete);
    assert_eq!(v.schubert_tangent_weights.unwrap().len(), 2);
}

#[test]
fn tangent_oracle_flag_outside_type_a_is_a_domain_error() {
    let o = run(&[
        "tangent",
        "B2",
        "--x",
        "1 2",
        "--w",
        "1",
        "--type-a-oracle",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorView = round_trip(&o);
    assert_eq!(e.error.kind, "WrongType");
}

#[test]
fn tangent_parabolic() {
    let o = run(&[
        "tangent",
        "A2",
        "--x",
        "2 1",
        "--w",
        "1",
        "--parabolic",
        "2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: ReportView = round_trip(&o);
    assert_eq!(v.parabolic, Some(vec![2]));
    assert!(v.complete);

    let o = run(&[
        "tangent",
        "A2",
        "--x",
        "1 2",
        "--w",
        "1",
        "--parabolic",
        "2",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorView = round_trip(&o);
    assert_eq!(e.error.kind, "NotMinimalCosetRep");
}

#[test]
fn tangent_human_output() {
    let o = run(&["tangent", "A2", "--x", "1 2 1", "--w", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("Undetermined"));
    assert!(text.contains("KL tangent weights: {α1, α2}"));
}

#[test]
fn kclass_json() {
    let o = run(&["kclass", "A2", "--x", "1 2 1", "--w", "1", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: KClassView = round_trip(&o);
    assert_eq!(v.pretty, "1 - e^{-α1-α2}");
    let raw: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let terms = raw["class"].as_array().unwrap();
    let constant = terms
        .iter()
        .find(|t| t["exponent"] == serde_json::json!([0, 0]))
        .unwrap();
    assert_eq!(constant["coeff"], "1");
    let top = terms
        .iter()
        .find(|t| t["exponent"] == serde_json::json!([-1, -1]))
        .unwrap();
    assert_eq!(top["coeff"], "-1");
}

#[test]
fn demazure_json() {
    let o = run(&["demazure", "A2", "1 1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: DemazureView = round_trip(&o);
    assert_eq!(v.delta.letters(), [1]);
    assert_eq!(v.excess, 1);

    let v: DemazureView = round_trip(&run(&["demazure", "A2", "1 2 1 2"]));
    assert_eq!(v.delta.letters(), [1, 2, 1]);
    assert_eq!(v.excess, 1);
}

#[test]
fn subword_complex_json() {
    let o = run(&["subword-complex", "A2", "1 2 1", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v: SubwordComplexView = round_trip(&o);
    assert_eq!(v.dimension, 1);
    assert_eq!(v.euler.interior, -1);
    let facets: Vec<Vec<usize>> = v.facets.iter().map(|f| f.indices().to_vec()).collect();
    assert_eq!(facets, [vec![1, 2], vec![2, 3]]);
}

#[test]
fn subword_complex_target_not_below() {
    let o = run(&["subword-complex", "A2", "1 1", "2"]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorView = round_trip(&o);
    assert_eq!(e.error.kind, "TargetNotContained");
}

#[test]
fn cominuscule_json() {
    let v: CominusculeView = round_trip(&run(&["cominuscule", "D4", "--x", "2 1 3 4 2", "--json"]));
    assert!(!v.cominuscule);
    assert!(v.all_indecomposable);
    assert_eq!(v.permutation, None);

    let v: CominusculeView = round_trip(&run(&["cominuscule", "A2", "--x", "1 2 1", "--json"]));
    assert!(!v.cominuscule);
    assert_eq!(v.permutation, Some(vec![3, 2, 1]));
    assert_eq!(v.avoids_321, Some(false));
}

#[test]
fn verify_a3_is_green_and_deterministic() {
    let a = run(&["verify", "A3", "--json"]);
    assert_eq!(a.status.code(), Some(0));
    let v: VerifyView = serde_json::from_str(&stdout(&a)).unwrap();
    assert!(v.passed);
    assert!(v.suites.iter().all(|s| s.failures.is_empty()));
    let b = run(&["verify", "A3", "--json"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_guard_refuses_large_groups() {
    let o = run(&["verify", "E8", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let e: ErrorView = round_trip(&o);
    assert_eq!(e.error.kind, "GroupTooLarge");

    let o = run(&["verify", "A3", "--max-rank-guard", "10"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(run(&[]).status.code(), Some(2));
    assert_eq!(
        run(&["tangent", "A2", "--x", "1 2 1"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["demazure", "H3", "1"]).status.code(), Some(2));
    assert_eq!(run(&["demazure", "A2", "1 two"]).status.code(), Some(2));
    assert_eq!(
        run(&["tangent", "A2", "--x", "1", "--w", "1", "--parabolic", "x"])
            .status
            .code(),
        Some(2)
    );
}

#[test]
fn domain_errors_exit_1() {
    let o = run(&["tangent", "A2", "--x", "1 1", "--w", "1", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(round_trip::<ErrorView>(&o).error.kind, "NotReduced");

    let o = run(&["tangent", "A2", "--x", "1", "--w", "2", "--json"]);
    assert_eq!(round_trip::<ErrorView>(&o).error.kind, "NotBelow");

    let o = run(&["demazure", "A2", "3"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(round_trip::<ErrorView>(&o).error.kind, "LetterOutOfRange");

    let o = run(&["tangent", "A2", "--x", "1", "--w", "2"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8(o.stderr).unwrap().starts_with("error:"));
}
