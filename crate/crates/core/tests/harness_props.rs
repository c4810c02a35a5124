use std::sync::OnceLock;

use pgroup::harness::{all_passed, run_all, summary_table, TheoremReport, Verdict};
use pgroup::verbal::Caps;

fn reports() -> &'static [TheoremReport] {
    static CELL: OnceLock<Vec<TheoremReport>> = OnceLock::new();
    CELL.get_or_init(|| {
        let caps = Caps::default();
        let mut out = run_all(3, 729, &caps).unwrap();
        out.extend(run_all(5, 625, &caps).unwrap());
        out
    })
}

fn param(r: &TheoremReport, key: &str) -> i64 {
    r.params[key]
}

#[test]
fn no_check_fails_on_the_corpus() {
    let bad: Vec<_> = reports().iter().filter(|r| r.verdict.is_failure()).collect();
    assert!(bad.is_empty(), "{bad:#?}");
    assert!(all_passed(reports()));
}

#[test]
fn reruns_are_identical_up_to_timing() {
    let caps = Caps::default();
    let a: Vec<_> = run_all(3, 243, &caps).unwrap().iter().map(|r| r.without_timing()).collect();
    let b: Vec<_> = run_all(3, 243, &caps).unwrap().iter().map(|r| r.without_timing()).collect();
    assert_eq!(a, b);
}

#[test]
fn every_report_round_trips_through_json() {
    for r in reports() {
        let line = r.to_json_line();
        assert!(!line.contains('\n'));
        assert_eq!(&TheoremReport::from_json_line(&line).unwrap(), r);
    }
}

#[test]
fn nothing_is_asserted_outside_the_hypothesis_range() {
    for r in reports() {
        let p = param(r, "p");
        let out_of_range = match r.theorem.as_str() {
            "A" => p < 5,
            "B" => {
                let (k, i) = (param(r, "k"), param(r, "i"));
                !((k + 2 <= p && i >= 1) || (k + 1 == p && i >= 2))
            }
            "C" => param(r, "s") < p + 1,
            "REG" => r.quantities["class"].as_i64().unwrap() >= p,
            "HL" => r.quantities["powerful"] == false,
            _ => false,
        };
        if out_of_range {
            assert_eq!(r.verdict, Verdict::NotApplicable, "{r:?}");
            assert!(!r.quantities.is_empty(), "{r:?}");
        }
    }
}

#[test]
fn generator_count_agrees_with_the_frattini_quotient() {
    let mut lattice_checked = 0;
    for r in reports().iter().filter(|r| r.theorem == "A") {
        let p = param(r, "p") as u64;
        let d = r.quantities["d"].as_u64().unwrap() as u32;
        assert_eq!(r.quantities["frattini_index"].as_u64().unwrap(), p.pow(d), "{}", r.group);
        if let Some(m) = r.quantities.get("maximal_subgroups") {
            assert_eq!(m.as_u64().unwrap(), (p.pow(d) - 1) / (p - 1), "{}", r.group);
            lattice_checked += 1;
        }
        let sub = r.quantities["omega1_subgroup_order"].as_u64().unwrap();
        let set = r.quantities["omega1_set_size"].as_u64().unwrap();
        assert!(set <= sub && sub % p == 0, "{}", r.group);
    }
    assert!(lattice_checked > 10);
}

#[test]
fn the_p3_family_records_the_counterexample() {
    let hits: Vec<_> = reports()
        .iter()
        .filter(|r| r.theorem == "A" && r.quantities.get("counterexample").is_some())
        .map(|r| r.group.as_str())
        .collect();
    for name in ["G(3,4)", "G(3,5)", "G(3,6)"] {
        assert!(hits.contains(&name), "{name} missing from {hits:?}");
    }
}

#[test]
fn invalid_primes_and_empty_corpora() {
    let caps = Caps::default();
    assert!(run_all(2, 64, &caps).is_err());
    assert!(run_all(9, 81, &caps).is_err());
    let empty = run_all(3, 1, &caps).unwrap();
    assert!(empty.is_empty());
    assert_eq!(summary_table(&empty).lines().count(), 2);
    assert_eq!(summary_table(reports()).lines().count(), reports().len() + 2);
}
