use super::*;
use crate::constructions::construct_example1;
use crate::group::{build_abelian, build_cyclic, build_modular, build_unitriangular};

fn subject(name: &str, g: &crate::FiniteGroup) -> Subject {
    Subject::new(name, g).unwrap()
}

#[test]
fn theorem_a_examples() {
    let caps = Caps::default();
    let r = check_theorem_a(&subject("C25xC5", &build_abelian(&[25, 5]).unwrap()), &caps);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.quantities["d"], 2);
    let r = check_theorem_a(&subject("UT3(F5)", &build_unitriangular(3, 5).unwrap()), &caps);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.quantities["powerful"], false);
    assert_eq!(r.quantities["log_p_omega1"], 3);
    assert_eq!(r.quantities["maximal_subgroups"], 6);
    let g = construct_example1(3, 4).unwrap().group;
    let r = check_theorem_a(&subject("G(3,4)", &g), &caps);
    assert_eq!(r.verdict, Verdict::NotApplicable);
    assert_eq!(r.quantities["counterexample"], true);
}

#[test]
fn theorem_b_examples() {
    let u = subject("UT3(F3)", &build_unitriangular(3, 3).unwrap());
    let r = check_theorem_b(&u, 2, 2);
    assert_eq!(r.verdict, Verdict::Pass);
    assert_eq!(r.quantities["gamma_k_in_power"], false);
    assert_eq!(r.quantities["index_power_gamma_k"], 9);
    assert_eq!(r.quantities["omega_set_size"], 27);
    let g = subject("G(3,4)", &construct_example1(3, 4).unwrap().group);
    let r = check_theorem_b(&g, 2, 1);
    assert_eq!(r.verdict, Verdict::NotApplicable);
    assert_eq!(r.quantities["index_equals_omega"], true);
    assert_eq!(r.quantities["gamma_k_in_power"], false);
    let a = subject("C9xC3", &build_abelian(&[9, 3]).unwrap());
    assert_eq!(check_theorem_b(&a, 2, 2).verdict, Verdict::Pass);
    assert_eq!(check_theorem_b(&a, 0, 2).verdict, Verdict::Fail);
}

#[test]
fn theorem_c_small() {
    let r = check_theorem_c(3, 4);
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    assert_eq!(r.quantities["index_power_gamma_p_minus_1"], 9);
    assert_eq!(r.quantities["class"], 3);
    assert_eq!(check_theorem_c(3, 3).verdict, Verdict::NotApplicable);
    assert_eq!(check_theorem_c(4, 5).verdict, Verdict::Fail);
}

#[test]
fn hethelyi_levai_examples() {
    for (name, g, idx) in [
        ("C9", build_cyclic(9).unwrap(), 3),
        ("Mod(27)", build_modular(3).unwrap(), 9),
        ("C25xC25", build_abelian(&[25, 25]).unwrap(), 25),
    ] {
        let r = check_hethelyi_levai(&subject(name, &g));
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.quantities["index_power"], idx);
    }
    let u = subject("UT3(F5)", &build_unitriangular(3, 5).unwrap());
    assert_eq!(check_hethelyi_levai(&u).verdict, Verdict::NotApplicable);
}

#[test]
fn lattice_suites_on_small_groups() {
    let caps = Caps::default();
    let u = subject("UT3(F3)", &build_unitriangular(3, 3).unwrap());
    for r in [
        check_lemma1(&u, &caps),
        check_theorem2(&u, &caps),
        check_minimal_c_member(&u, &caps),
        check_congruences(&u, 2, &caps),
        check_oracle_equivalence(&u, &caps),
    ] {
        assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    }
    assert_eq!(check_congruences(&u, 1, &caps).verdict, Verdict::NotApplicable);
    let e = subject("C3^2", &build_abelian(&[3, 3]).unwrap());
    let r = check_theorem2(&e, &caps);
    assert_eq!(r.quantities["omega_maximal short(1,2)"], true);
    assert_eq!(r.verdict, Verdict::Pass);
    let big = subject("G(3,7)", &construct_example1(3, 7).unwrap().group);
    let r = check_lemma1(&big, &caps);
    assert_eq!(r.verdict, Verdict::Skipped);
    assert!(r.notes[0].contains("cap exceeded"));
}

#[test]
fn example1_claims() {
    let ex = construct_example1(3, 4).unwrap();
    let r = check_example1("G(3,4)", &ex);
    assert_eq!(r.verdict, Verdict::Pass, "{r:?}");
    assert_eq!(r.quantities["omega1_set_size"], 9);
    let split = construct_example1_variant(3, 4, true).unwrap();
    let r = check_example1("G(3,4)split", &split);
    assert_eq!(r.verdict, Verdict::Pass);
}

#[test]
fn run_all_small_is_deterministic() {
    let caps = Caps::default();
    assert!(run_all(3, 1, &caps).unwrap().is_empty());
    assert!(run_all(4, 27, &caps).is_err());
    let a = run_all(3, 27, &caps).unwrap();
    let b = run_all(3, 27, &caps).unwrap();
    assert!(crate::harness::all_passed(&a), "{}", crate::harness::summary_table(&a));
    let strip = |v: &[TheoremReport]| v.iter().map(TheoremReport::without_timing).collect::<Vec<_>>();
    assert_eq!(strip(&a), strip(&b));
    for r in &a {
        assert_eq!(&TheoremReport::from_json_line(&r.to_json_line()).unwrap(), r);
    }
}
