use pgroup::constructions::{companion_alpha, construct_example1, construct_example1_variant};
use pgroup::subgroup::{is_maximal_class, lower_central_series, omega_set};
use pgroup::IntMatrix;
use proptest::prelude::*;

/// `(p, r)` pairs with `p^r` at most `limit`.
fn params(limit: u64) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for p in [3u32, 5, 7] {
        for r in 2..=12 {
            if (p as u64).pow(r) <= limit {
                out.push((p, r));
            }
        }
    }
    out
}

#[test]
fn kernel_determinant_is_a_power_of_p() {
    for (p, r) in params(1_000_000) {
        let a = companion_alpha(p).unwrap();
        let b = a.checked_sub(&IntMatrix::identity(a.rows())).unwrap().pow(r - 1).unwrap();
        let det = b.determinant().unwrap();
        assert_eq!(det.unsigned_abs(), (p as u64).pow(r - 1), "p = {p}, r = {r}");
        let ex = construct_example1(p, r).unwrap();
        assert_eq!(ex.kernel_order() as u64, (p as u64).pow(r - 1));
        assert_eq!(ex.group.order() as u64, (p as u64).pow(r));
        let ids: Vec<u32> = (0..ex.kernel_order() as u32).collect();
        assert_eq!(ex.kernel.members(), &ids[..]);
    }
}

#[test]
fn filtration_is_uniserial_and_z_spans_the_last_step() {
    for (p, r) in params(1_000_000) {
        let ex = construct_example1(p, r).unwrap();
        let f = &ex.filtration;
        assert_eq!(f.len(), r as usize, "p = {p}, r = {r}");
        assert_eq!(f[0].order(), ex.kernel_order());
        assert!(f.last().unwrap().is_trivial());
        for w in f.windows(2) {
            assert!(w[1].is_subgroup_of(&w[0]));
            assert_eq!(w[0].order(), w[1].order() * p as usize, "p = {p}, r = {r}");
        }
        let g = &ex.group;
        assert_ne!(ex.z_id, 0);
        assert_eq!(g.element_order(ex.z_id).unwrap(), p as u64);
        assert!(f[r as usize - 2].contains(ex.z_id));
        assert_eq!(g.commutator(ex.z_id, ex.y()), 0);
        for &k in ex.kernel.generators() {
            assert_eq!(g.commutator(ex.z_id, k), 0);
        }
    }
}

#[test]
fn g_r_has_maximal_class() {
    for (p, r) in params(15_625) {
        let ex = construct_example1(p, r).unwrap();
        let series = lower_central_series(&ex.group.whole()).unwrap();
        assert_eq!(series.class, r as usize - 1, "p = {p}, r = {r}");
        if r >= 3 {
            assert!(is_maximal_class(&ex.group.whole()).unwrap());
        }
    }
}

#[test]
fn omega_one_lies_in_the_kernel() {
    for (p, r) in params(15_625) {
        let ex = construct_example1(p, r).unwrap();
        let om = omega_set(&ex.group.whole(), 1).unwrap();
        assert!(om.iter().all(|&x| ex.kernel.contains(x)), "p = {p}, r = {r}");
        if r >= p {
            assert_eq!(om.len(), (p as usize).pow(p - 1), "p = {p}, r = {r}");
        }
    }
}

#[test]
fn the_split_variant_has_order_p_elements_off_the_kernel() {
    for (p, r) in params(15_625) {
        let ex = construct_example1_variant(p, r, true).unwrap();
        let g = &ex.group;
        let found = (ex.kernel_order() as u32..g.order() as u32).any(|x| g.pow(x, p as i64) == 0);
        assert!(found, "p = {p}, r = {r}");
    }
}

proptest! {
    #[test]
    fn element_encoding_round_trips(case in 0usize..100, j in 0u32..7, x in any::<u32>()) {
        let all = params(15_625);
        let (p, r) = all[case % all.len()];
        let ex = construct_example1(p, r).unwrap();
        let j = j % p;
        let x = x % ex.kernel_order() as u32;
        let e = ex.element(j, x);
        prop_assert_eq!(ex.decompose(e), (j, x));
        prop_assert_eq!(ex.element(1, 0), ex.y());
        if j > 0 {
            let power = ex.group.pow(e, p as i64);
            prop_assert_eq!(power, ex.group.pow(ex.z_id, j as i64));
        }
    }
}
