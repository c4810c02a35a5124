mod common;

use pgroup::harness::{lemma1_words, oracle_words};
use pgroup::subgroup::{center, omega_set, power_subgroup};
use pgroup::verbal::{
    closed_form, find_minimal_c_member, is_interchangeable, is_omega_maximal, verbal_exhaustive,
    verbal_index, verbal_subgroup, Caps, Lattice, SubgroupProfile, VerbalMode,
};
use pgroup::{Subgroup, Word};
use proptest::prelude::*;

/// Subgroups of the small members whose own order is at most `n`.
fn subgroup_pool(n: usize) -> Vec<(String, Subgroup)> {
    common::small_members()
        .iter()
        .filter(|m| m.group.order() <= 243)
        .flat_map(|m| {
            common::subgroups(&m.group)
                .into_iter()
                .filter(|h| h.order() > 1 && h.order() <= n)
                .map(|h| (m.name.clone(), h))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// At most `per_order` subgroups of each order from every small member.
fn sampled_pool(n: usize, per_order: usize) -> Vec<(String, Subgroup)> {
    let mut out: Vec<(String, Subgroup)> = Vec::new();
    for (name, h) in subgroup_pool(n) {
        let same = out.iter().filter(|(m, k)| *m == name && k.order() == h.order()).count();
        if same < per_order {
            out.push((name, h));
        }
    }
    out
}

fn p_of(h: &Subgroup) -> u32 {
    h.parent().prime().unwrap()
}

#[test]
fn exhaustive_and_closed_form_agree_on_subgroups() {
    let caps = Caps::default();
    let mut compared = 0;
    for (name, h) in sampled_pool(27, 3) {
        let profile = SubgroupProfile::new(h.clone());
        for w in oracle_words(p_of(&h)).unwrap() {
            let Ok(ex) = verbal_exhaustive(&w, &h, 600_000) else { continue };
            let cf = closed_form(&w, &profile).unwrap();
            assert_eq!(ex, cf, "{name}: {w} on {h:?}");
            assert_eq!(verbal_subgroup(&w, &h, VerbalMode::ClosedForm, &caps).unwrap(), ex);
            compared += 1;
        }
    }
    assert!(compared > 100, "{compared}");
}

#[test]
fn exhaustive_refuses_over_the_tuple_cap() {
    let m = common::small_members().iter().find(|m| m.group.order() == 243).unwrap();
    let w = Word::short(3, 1, 2).unwrap();
    assert!(verbal_exhaustive(&w, &m.group.whole(), 1_000_000).unwrap_err().is_cap_exceeded());
}

#[test]
fn structured_words_are_interchangeable_in_every_subgroup() {
    let caps = Caps::default();
    for (name, h) in subgroup_pool(81) {
        let lattice = Lattice::new(&h, caps.subgroups).unwrap();
        for w in lemma1_words(p_of(&h)).unwrap() {
            let r = pgroup::verbal::is_interchangeable_in(&w, &lattice, &caps).unwrap();
            assert!(r.holds, "{name}: {w} in {h:?} fails at {:?}", r.witness);
        }
    }
}

#[test]
fn omega_maximal_interchangeable_words_are_central() {
    let caps = Caps::default();
    let mut applicable = 0;
    for (name, h) in subgroup_pool(81) {
        let p = p_of(&h);
        for w in lemma1_words(p).unwrap() {
            if !is_omega_maximal(&w, &h, &caps).unwrap().holds
                || !is_interchangeable(&w, &h, &caps).unwrap().holds
            {
                continue;
            }
            applicable += 1;
            let wh = verbal_subgroup(&w, &h, VerbalMode::ClosedForm, &caps).unwrap();
            assert!(wh.is_subgroup_of(&center(&h)), "{name}: {w} in {h:?}");
        }
        for i in 2..=3 {
            let w = Word::long(p, i).unwrap();
            if is_omega_maximal(&w, &h, &caps).unwrap().holds {
                let q = (p as u64).pow(i);
                let index = h.order() / power_subgroup(&h, q).unwrap().order();
                assert_eq!(index, omega_set(&h, i).unwrap().len(), "{name}: long({i}) in {h:?}");
            }
        }
    }
    assert!(applicable > 0);
}

#[test]
fn minimal_c_members_are_minimal() {
    let caps = Caps::default();
    for m in common::small_members().iter().filter(|m| m.group.order() <= 81) {
        let g = m.group.whole();
        let p = m.group.prime().unwrap();
        for w in lemma1_words(p).unwrap() {
            let target = verbal_index(&w, &SubgroupProfile::new(g.clone()), &caps).unwrap();
            let k = find_minimal_c_member(&w, &g, &caps).unwrap();
            let inner = Lattice::new(&k, caps.subgroups).unwrap();
            assert!(verbal_index(&w, inner.top(), &caps).unwrap() >= target, "{}: {w}", m.name);
            for h in inner.proper() {
                assert!(verbal_index(&w, h, &caps).unwrap() < target, "{}: {w}", m.name);
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn word_values_lie_in_the_verbal_subgroup(m in 0usize..1000, args in prop::collection::vec(any::<u64>(), 12), i in 1u32..3, k in 1u32..5) {
        let member = common::pick(common::all_members(), m);
        let g = &member.group;
        let p = g.prime().unwrap();
        let caps = Caps::default();
        let profile = SubgroupProfile::new(g.whole());
        let mut words = vec![Word::short(p, i, k).unwrap()];
        words.push(Word::long(p, i).unwrap());
        for w in words {
            let vals: Vec<u32> = args.iter().take(w.arity()).map(|&a| common::element(g, a)).collect();
            let v = w.eval(g, &vals).unwrap();
            let wg = closed_form(&w, &profile).unwrap();
            prop_assert!(wg.contains(v), "{} not in {} on {}", v, w, member.name);
            prop_assert_eq!(&wg, &verbal_subgroup(&w, &g.whole(), VerbalMode::ClosedForm, &caps).unwrap());
        }
    }
}
