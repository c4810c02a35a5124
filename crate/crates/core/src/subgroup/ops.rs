use std::collections::HashMap;

use fixedbitset::FixedBitSet;
use num_integer::Integer;

use super::Subgroup;
use crate::arith::exact_log;
use crate::error::{Error, Result};
use crate::Elem;

/// Lower central series `gamma_1 = H, gamma_{k+1} = [gamma_k, H]` down to 1.
#[derive(Clone, Debug)]
pub struct SeriesRecord {
    pub terms: Vec<Subgroup>,
    /// First `k` with `gamma_{k+1} = 1`.
    pub class: usize,
}

impl SeriesRecord {
    /// `gamma_k` with 1-based indexing; terms past the end are trivial.
    pub fn gamma(&self, k: usize) -> &Subgroup {
        assert!(k >= 1, "gamma is indexed from 1");
        self.terms.get(k - 1).unwrap_or_else(|| self.terms.last().expect("series is nonempty"))
    }

    /// `|gamma_k : gamma_{k+1}|` for `k = 1..=class`.
    pub fn factor_orders(&self) -> Vec<usize> {
        self.terms.windows(2).map(|w| w[0].order() / w[1].order()).collect()
    }
}

/// Coset representatives of `S` modulo `S ∩ Z(G)`. Commutators only depend on
/// their arguments modulo central elements, so these reps see every value.
fn central_transversal(s: &Subgroup) -> Vec<Elem> {
    let g = s.parent();
    let central: Vec<Elem> = g
        .center_elements()
        .iter()
        .copied()
        .filter(|&c| s.contains(c))
        .collect();
    if central.len() == 1 {
        return s.members().to_vec();
    }
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut reps = Vec::with_capacity(s.order() / central.len());
    for &x in s.members() {
        if seen.contains(x as usize) {
            continue;
        }
        reps.push(x);
        for &c in &central {
            seen.insert(g.mul(x, c) as usize);
        }
    }
    reps
}

/// `[A, B]`: the subgroup generated by every commutator `[a, b]`.
pub fn commutator_subgroup(a: &Subgroup, b: &Subgroup) -> Result<Subgroup> {
    a.same_parent(b)?;
    let g = a.parent();
    let commuting = a
        .generators()
        .iter()
        .all(|&x| b.generators().iter().all(|&y| g.mul(x, y) == g.mul(y, x)));
    if commuting {
        return Ok(Subgroup::trivial(g));
    }
    let mut acc = Subgroup::trivial(g);
    let ra = central_transversal(a);
    if a == b {
        // [y, x] = [x, y]^-1, so unordered pairs suffice
        for (k, &x) in ra.iter().enumerate() {
            let xi = g.inv(x);
            for &y in &ra[k + 1..] {
                let c = g.mul(g.mul(g.mul(xi, g.inv(y)), x), y);
                if !acc.contains(c) {
                    acc = acc.extend(c);
                }
            }
        }
    } else {
        let rb = central_transversal(b);
        for &x in &ra {
            let xi = g.inv(x);
            for &y in &rb {
                let c = g.mul(g.mul(g.mul(xi, g.inv(y)), x), y);
                if !acc.contains(c) {
                    acc = acc.extend(c);
                }
            }
        }
    }
    Ok(acc)
}

fn require_prime_power(h: &Subgroup, q: u64) -> Result<u32> {
    let p = h.parent().require_prime()?;
    if q == 0 || exact_log(p as u64, q).is_none() {
        return Err(Error::InvalidParameter(format!("{q} is not a power of {p}")));
    }
    Ok(p)
}

/// `H^q`: the subgroup generated by all `q`-th powers, `q` a power of `p`.
pub fn power_subgroup(h: &Subgroup, q: u64) -> Result<Subgroup> {
    require_prime_power(h, q)?;
    let g = h.parent();
    Ok(Subgroup::from_elements(
        g,
        h.members().iter().map(|&x| g.pow(x, q as i64)),
    ))
}

pub fn lower_central_series(h: &Subgroup) -> Result<SeriesRecord> {
    let mut terms = vec![h.clone()];
    loop {
        let last = terms.last().expect("nonempty");
        if last.is_trivial() {
            break;
        }
        let next = commutator_subgroup(last, h)?;
        if next == *last {
            return Err(Error::NotNilpotent);
        }
        terms.push(next);
    }
    let class = terms.len() - 1;
    Ok(SeriesRecord { terms, class })
}

fn prime_power_exponent(p: u32, i: u32) -> Result<u64> {
    if i == 0 {
        return Err(Error::InvalidParameter("omega index must be at least 1".into()));
    }
    (p as u64)
        .checked_pow(i)
        .ok_or_else(|| Error::InvalidParameter(format!("{p}^{i} overflows")))
}

/// Elements of `H` whose order divides `p^i`.
pub fn omega_set(h: &Subgroup, i: u32) -> Result<Vec<Elem>> {
    let p = h.parent().require_prime()?;
    let q = prime_power_exponent(p, i)?;
    let g = h.parent();
    Ok(h.members()
        .iter()
        .copied()
        .filter(|&x| g.pow(x, q as i64) == 0)
        .collect())
}

/// `Omega_i(H)`, generated by [`omega_set`].
pub fn omega_subgroup(h: &Subgroup, i: u32) -> Result<Subgroup> {
    Ok(Subgroup::from_elements(h.parent(), omega_set(h, i)?))
}

/// `Phi(H) = H^p [H, H]` for a p-group.
pub fn frattini_subgroup(h: &Subgroup) -> Result<Subgroup> {
    let p = h.parent().require_prime()?;
    power_subgroup(h, p as u64)?.join(&commutator_subgroup(h, h)?)
}

/// `d(H) = log_p |H : Phi(H)|`.
pub fn min_generators(h: &Subgroup) -> Result<u32> {
    let p = h.parent().require_prime()?;
    let phi = frattini_subgroup(h)?;
    exact_log(p as u64, (h.order() / phi.order()) as u64)
        .ok_or_else(|| Error::Construction("Frattini index is not a power of p".into()))
}

pub fn center(h: &Subgroup) -> Subgroup {
    let g = h.parent();
    let gens = h.generators();
    Subgroup::from_elements(
        g,
        h.members()
            .iter()
            .copied()
            .filter(|&x| gens.iter().all(|&t| g.mul(x, t) == g.mul(t, x))),
    )
}

/// `[H, H] <= H^p` for odd `p`, `[H, H] <= H^4` for `p = 2`.
pub fn is_powerful(h: &Subgroup) -> Result<bool> {
    let p = h.parent().require_prime()?;
    let q = if p == 2 { 4 } else { p as u64 };
    Ok(commutator_subgroup(h, h)?.is_subgroup_of(&power_subgroup(h, q)?))
}

/// Least common multiple of element orders.
pub fn exponent(h: &Subgroup) -> u64 {
    let g = h.parent();
    h.members().iter().fold(1u64, |acc, &x| {
        acc.lcm(&g.element_order(x).expect("member ids are valid"))
    })
}

/// Nilpotency class `n - 1` where `|H| = p^n`, `n >= 3`.
pub fn is_maximal_class(h: &Subgroup) -> Result<bool> {
    let p = h.parent().require_prime()?;
    let n = exact_log(p as u64, h.order() as u64).ok_or(Error::NotPGroup)?;
    if n < 3 {
        return Ok(false);
    }
    Ok(lower_central_series(h)?.class == n as usize - 1)
}

/// Every pair `x, y` satisfies `x^q y^q = (xy)^q z` with
/// `z in [<x,y>, <x,y>]^q`, `q = p^i`. Exhaustive over `|H|^2` pairs.
pub fn is_i_regular(h: &Subgroup, i: u32, pair_cap: u64) -> Result<bool> {
    let p = h.parent().require_prime()?;
    if p == 2 {
        return Err(Error::InvalidParameter("regularity is checked for odd p only".into()));
    }
    let q = prime_power_exponent(p, i)?;
    let pairs = (h.order() as u64).pow(2);
    if pairs > pair_cap {
        return Err(Error::cap("regularity pair", pairs, pair_cap));
    }
    let g = h.parent();
    let mut cache: HashMap<Vec<Elem>, Subgroup> = HashMap::new();
    for &x in h.members() {
        let xq = g.pow(x, q as i64);
        for &y in h.members() {
            let lhs = g.mul(xq, g.pow(y, q as i64));
            let w = g.mul(g.pow(g.mul(x, y), -(q as i64)), lhs);
            if w == 0 {
                continue;
            }
            let pair = Subgroup::from_elements(g, [x, y]);
            let target = match cache.get(pair.members()) {
                Some(t) => t,
                None => {
                    let t = power_subgroup(&commutator_subgroup(&pair, &pair)?, q)?;
                    cache.entry(pair.members().to_vec()).or_insert(t)
                }
            };
            if !target.contains(w) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

pub fn is_regular(h: &Subgroup, pair_cap: u64) -> Result<bool> {
    is_i_regular(h, 1, pair_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_abelian, build_cyclic, build_direct_product, build_modular, build_unitriangular};

    /// Oracle: close the full set of commutator values with no shortcuts.
    fn brute_commutator(a: &Subgroup, b: &Subgroup) -> Subgroup {
        let g = a.parent();
        let vals: Vec<Elem> = a
            .members()
            .iter()
            .flat_map(|&x| b.members().iter().map(move |&y| g.commutator(x, y)))
            .collect();
        Subgroup::from_elements(g, vals)
    }

    #[test]
    fn commutator_examples() {
        let c9 = build_cyclic(9).unwrap();
        let w = c9.whole();
        assert!(commutator_subgroup(&w, &w).unwrap().is_trivial());
        let u = build_unitriangular(3, 3).unwrap();
        let uw = u.whole();
        let d = commutator_subgroup(&uw, &uw).unwrap();
        assert_eq!(d.order(), 3);
        assert_eq!(d, center(&uw));
        assert!(commutator_subgroup(&uw, &Subgroup::trivial(&u)).unwrap().is_trivial());
    }

    #[test]
    fn central_reduction_matches_brute_force() {
        let u4 = build_unitriangular(4, 3).unwrap();
        let m = build_modular(3).unwrap();
        let prod = build_direct_product(&[build_cyclic(3).unwrap(), build_unitriangular(3, 3).unwrap()]).unwrap();
        for g in [u4, m, prod] {
            let w = g.whole();
            let subs = [
                w.clone(),
                Subgroup::generated(&g, &[1]).unwrap(),
                Subgroup::generated(&g, &[1, 2]).unwrap(),
                Subgroup::generated(&g, &[3, 5]).unwrap(),
            ];
            for a in &subs {
                for b in &subs {
                    assert_eq!(commutator_subgroup(a, b).unwrap(), brute_commutator(a, b));
                }
            }
        }
    }

    #[test]
    fn power_examples() {
        let c9 = build_cyclic(9).unwrap();
        assert_eq!(power_subgroup(&c9.whole(), 3).unwrap().order(), 3);
        assert!(power_subgroup(&c9.whole(), 2).is_err());
        let u5 = build_unitriangular(3, 5).unwrap();
        assert!(power_subgroup(&u5.whole(), 5).unwrap().is_trivial());
        let c6 = build_cyclic(6).unwrap();
        assert_eq!(power_subgroup(&c6.whole(), 2).unwrap_err(), Error::NotPGroup);
    }

    #[test]
    fn series_examples() {
        let a = build_abelian(&[9, 3]).unwrap().whole();
        assert_eq!(lower_central_series(&a).unwrap().class, 1);
        for p in [3, 5] {
            let u = build_unitriangular(3, p).unwrap().whole();
            let s = lower_central_series(&u).unwrap();
            assert_eq!(s.class, 2);
            assert!(s.gamma(3).is_trivial());
            assert!(s.gamma(7).is_trivial());
        }
        let t = build_cyclic(1).unwrap().whole();
        assert_eq!(lower_central_series(&t).unwrap().class, 0);
    }

    #[test]
    fn omega_examples() {
        let c9 = build_cyclic(9).unwrap().whole();
        assert_eq!(omega_set(&c9, 1).unwrap().len(), 3);
        assert_eq!(omega_set(&c9, 2).unwrap().len(), 9);
        assert!(omega_set(&c9, 0).is_err());
        // pairs (a, b) with 3a = 0 mod 9 and 3b = 0 mod 3: 3 * 3
        let a = build_abelian(&[9, 3]).unwrap().whole();
        assert_eq!(omega_set(&a, 1).unwrap().len(), 9);
        let u5 = build_unitriangular(3, 5).unwrap().whole();
        assert_eq!(omega_set(&u5, 1).unwrap().len(), 125);
        assert_eq!(omega_subgroup(&u5, 1).unwrap().order(), 125);
    }

    #[test]
    fn frattini_and_generators() {
        assert_eq!(min_generators(&build_cyclic(9).unwrap().whole()).unwrap(), 1);
        assert_eq!(min_generators(&build_abelian(&[3, 3]).unwrap().whole()).unwrap(), 2);
        let u5 = build_unitriangular(3, 5).unwrap().whole();
        assert_eq!(min_generators(&u5).unwrap(), 2);
        assert_eq!(exponent(&u5), 5);
        assert_eq!(exponent(&build_abelian(&[3, 3]).unwrap().whole()), 3);
    }

    #[test]
    fn center_examples() {
        let a = build_abelian(&[9, 3]).unwrap().whole();
        assert_eq!(center(&a), a);
        let u = build_unitriangular(3, 3).unwrap().whole();
        assert_eq!(center(&u).order(), 3);
    }

    #[test]
    fn powerful_examples() {
        assert!(is_powerful(&build_abelian(&[9, 3]).unwrap().whole()).unwrap());
        assert!(!is_powerful(&build_unitriangular(3, 5).unwrap().whole()).unwrap());
        let m = build_modular(3).unwrap().whole();
        assert!(is_powerful(&m).unwrap());
        let d = commutator_subgroup(&m, &m).unwrap();
        assert_eq!(d, Subgroup::generated(m.parent(), &[3]).unwrap());
    }

    #[test]
    fn regularity_examples() {
        let a = build_abelian(&[9, 3]).unwrap().whole();
        assert!(is_regular(&a, 1 << 20).unwrap());
        assert!(is_i_regular(&a, 2, 1 << 20).unwrap());
        let u5 = build_unitriangular(3, 5).unwrap().whole();
        assert!(is_regular(&u5, 1 << 20).unwrap());
        assert!(is_regular(&u5, 100).unwrap_err().is_cap_exceeded());
        let c4 = build_cyclic(4).unwrap().whole();
        assert!(is_regular(&c4, 100).is_err());
    }

    #[test]
    fn maximal_class_needs_order_p_cubed() {
        let u = build_unitriangular(3, 3).unwrap().whole();
        assert!(is_maximal_class(&u).unwrap());
        assert!(!is_maximal_class(&build_abelian(&[3, 3]).unwrap().whole()).unwrap());
        assert!(!is_maximal_class(&build_unitriangular(4, 3).unwrap().whole()).unwrap());
    }
}
