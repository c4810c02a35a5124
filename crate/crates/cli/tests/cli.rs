use std::process::{Command, Output};

use pgroup::harness::{TheoremReport, Verdict};
use serde_json::Value;

fn pgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pgroup")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn record(args: &[&str]) -> Value {
    let mut full = vec!["--output", "structured"];
    full.extend_from_slice(args);
    let o = pgroup(&full);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(stdout(&o).trim()).unwrap()
}

fn reports(args: &[&str]) -> (Option<i32>, Vec<TheoremReport>) {
    let mut full = vec!["--output", "structured"];
    full.extend_from_slice(args);
    let o = pgroup(&full);
    let parsed = stdout(&o)
        .lines()
        .map(|l| TheoremReport::from_json_line(l).expect("report line parses"))
        .collect();
    (o.status.code(), parsed)
}

#[test]
fn analyze_g_3_4() {
    let r = record(&["analyze", "{type: example1, p: 3, r: 4}"]);
    assert_eq!(r["order"], 81);
    assert_eq!(r["d"], 2);
    assert_eq!(r["class"], 3);
    assert_eq!(r["powerful"], false);
    assert_eq!(r["maximal_class"], true);
    assert_eq!(r["omega_set_1"], 9);
    assert_eq!(r["omega_subgroup_1"], 9);
}

#[test]
fn analyze_cyclic_and_unitriangular() {
    let c = record(&["analyze", "{type: cyclic, n: 9}"]);
    assert_eq!(c["order"], 9);
    assert_eq!(c["d"], 1);
    assert_eq!(c["powerful"], true);
    let u = record(&["analyze", "{type: unitriangular, n: 3, p: 5}"]);
    assert_eq!(u["order"], 125);
    assert_eq!(u["d"], 2);
    assert_eq!(u["omega_set_1"], 125);
}

#[test]
fn analyze_reads_spec_files() {
    let dir = std::env::temp_dir().join(format!("pgroup-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("mod27.yaml");
    std::fs::write(&path, "type: modular\np: 3\n").unwrap();
    let r = record(&["analyze", path.to_str().unwrap()]);
    assert_eq!(r["order"], 27);
    assert_eq!(r["powerful"], true);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn check_c_passes() {
    let (code, rs) = reports(&["check", "C", "--p", "3", "--s", "4"]);
    assert_eq!(code, Some(0));
    assert_eq!(rs.len(), 1);
    assert_eq!(rs[0].verdict, Verdict::Pass);
    assert_eq!(rs[0].order, 81);
}

#[test]
fn check_b_outside_the_range_is_not_applicable() {
    let (code, rs) =
        reports(&["check", "B", "{type: example1, p: 3, r: 4}", "--k", "2", "--i", "1"]);
    assert_eq!(code, Some(0));
    assert_eq!(rs[0].verdict, Verdict::NotApplicable);
}

#[test]
fn check_a_on_an_elementary_abelian_group_passes() {
    let (code, rs) = reports(&["check", "A", "{type: abelian, invariants: [5, 5]}"]);
    assert_eq!(code, Some(0));
    assert_eq!(rs[0].verdict, Verdict::Pass);
}

#[test]
fn empty_corpus_run_exits_zero() {
    let (code, rs) = reports(&["corpus-run", "--p", "3", "--max-order", "1"]);
    assert_eq!(code, Some(0));
    assert!(rs.is_empty());
}

#[test]
fn corpus_run_round_trips_and_passes() {
    let (code, rs) = reports(&["corpus-run", "--p", "3", "--max-order", "81"]);
    assert_eq!(code, Some(0));
    assert!(rs.len() > 50);
    assert!(rs.iter().all(|r| !r.verdict.is_failure()));
    for r in &rs {
        assert_eq!(&TheoremReport::from_json_line(&r.to_json_line()).unwrap(), r);
    }
}

#[test]
fn human_output_has_a_summary_line() {
    let o = pgroup(&["corpus-run", "--p", "3", "--max-order", "27"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.lines().next().unwrap().starts_with("check"));
    assert!(text.lines().last().unwrap().contains("0 fail"));
}

#[test]
fn verbal_modes_agree() {
    let spec = "{type: unitriangular, n: 3, p: 3}";
    let ex = record(&["verbal", spec, "--word", "short(1,2)", "--mode", "exhaustive"]);
    let cf = record(&["verbal", spec, "--word", "short(1,2)", "--mode", "closed-form"]);
    assert_eq!(ex["verbal_order"], cf["verbal_order"]);
    let parsed = record(&["verbal", spec, "--word", "x^3 [y1,y2]", "--mode", "exhaustive"]);
    assert_eq!(parsed["verbal_order"], ex["verbal_order"]);
}

#[test]
fn usage_and_parse_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["analyze", "{type: nonsense}"],
        &["analyze", "{type: cyclic, n: 12}"],
        &["check", "C", "--p", "4", "--s", "5"],
        &["check", "B", "{type: cyclic, n: 9}"],
        &["corpus-run", "--p", "2", "--max-order", "8"],
        &["--cap-subgroups", "0", "corpus", "--p", "3"],
        &["frobnicate"],
    ];
    for args in cases {
        let o = pgroup(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!o.stderr.is_empty());
    }
    let o = pgroup(&["verbal", "{type: cyclic, n: 9}", "--word", "x^0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn corpus_manifest_lists_members() {
    let o = pgroup(&["--output", "structured", "corpus", "--p", "5", "--max-order", "125"]);
    assert_eq!(o.status.code(), Some(0));
    let names: Vec<String> = stdout(&o)
        .lines()
        .map(|l| serde_json::from_str::<Value>(l).unwrap()["name"].as_str().unwrap().to_string())
        .collect();
    assert!(names.contains(&"UT3(F5)".to_string()));
    assert!(names.contains(&"G(5,3)".to_string()));
    assert!(String::from_utf8_lossy(&o.stderr).contains("skipped"));
}
