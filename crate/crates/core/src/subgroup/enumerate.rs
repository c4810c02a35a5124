use std::collections::HashSet;

use fixedbitset::FixedBitSet;

use super::Subgroup;
use crate::arith::exact_log;
use crate::error::{Error, Result};
use crate::Elem;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SubgroupFilter {
    All,
    Normal,
    Maximal,
    Proper,
}

/// Every subgroup of `h`, deterministically sorted by (size, members).
///
/// For p-groups the lattice is built layer by layer: each subgroup of order
/// `p^(k+1)` is `<S, c>` for a subgroup `S` of order `p^k` and some `c`
/// normalising `S` with `c^p` in `S`. Other groups fall back to
/// [`enumerate_subgroups_by_joins`].
pub fn enumerate_subgroups(h: &Subgroup, cap: usize, filter: SubgroupFilter) -> Result<Vec<Subgroup>> {
    if h.order() > cap {
        return Err(Error::cap("subgroup enumeration order", h.order() as u64, cap as u64));
    }
    let g = h.parent();
    let is_p_group = g
        .prime()
        .is_some_and(|p| exact_log(p as u64, h.order() as u64).is_some());
    let all = if is_p_group {
        layered(h, g.prime().expect("checked"))
    } else {
        joins(h)
    };
    Ok(apply_filter(h, all, filter))
}

/// Join closure from the cyclic subgroups: repeatedly join each subgroup
/// found with each cyclic subgroup until nothing new appears.
pub fn enumerate_subgroups_by_joins(h: &Subgroup, cap: usize, filter: SubgroupFilter) -> Result<Vec<Subgroup>> {
    if h.order() > cap {
        return Err(Error::cap("subgroup enumeration order", h.order() as u64, cap as u64));
    }
    Ok(apply_filter(h, joins(h), filter))
}

fn layered(h: &Subgroup, p: u32) -> Vec<Subgroup> {
    let g = h.parent();
    let mut all = vec![Subgroup::trivial(g)];
    let mut layer = all.clone();
    while !layer.is_empty() {
        let mut seen: HashSet<Vec<Elem>> = HashSet::new();
        let mut next = Vec::new();
        for s in &layer {
            let mut covered = FixedBitSet::with_capacity(g.order());
            for &c in h.members() {
                if s.contains(c) || covered.contains(c as usize) {
                    continue;
                }
                if !s.contains(g.pow(c, p as i64)) {
                    continue;
                }
                let normalises = s
                    .generators()
                    .iter()
                    .all(|&x| s.contains(g.conjugate(x, c)));
                if !normalises {
                    continue;
                }
                // S normalised by c with c^p in S: <S, c> is the union of S c^j
                let mut members = Vec::with_capacity(s.order() * p as usize);
                let mut cj = 0;
                for _ in 0..p {
                    members.extend(s.members().iter().map(|&x| g.mul(x, cj)));
                    cj = g.mul(cj, c);
                }
                for &m in &members {
                    covered.insert(m as usize);
                }
                let mut gens = s.generators().to_vec();
                gens.push(c);
                let t = Subgroup::from_closed_members(g, members, gens);
                if seen.insert(t.members().to_vec()) {
                    next.push(t);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all.sort_by(Subgroup::canonical_cmp);
    all
}

fn joins(h: &Subgroup) -> Vec<Subgroup> {
    let g = h.parent();
    let mut seen: HashSet<Vec<Elem>> = HashSet::new();
    let mut cyclic: Vec<(Elem, Subgroup)> = Vec::new();
    for &x in h.members() {
        let c = Subgroup::from_elements(g, [x]);
        if seen.insert(c.members().to_vec()) {
            cyclic.push((x, c));
        }
    }
    let mut all: Vec<Subgroup> = cyclic.iter().map(|(_, c)| c.clone()).collect();
    let mut frontier = all.clone();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for (x, _) in &cyclic {
                if s.contains(*x) {
                    continue;
                }
                let j = s.extend(*x);
                if seen.insert(j.members().to_vec()) {
                    next.push(j);
                }
            }
        }
        all.extend(next.iter().cloned());
        frontier = next;
    }
    all.sort_by(Subgroup::canonical_cmp);
    all
}

fn apply_filter(h: &Subgroup, all: Vec<Subgroup>, filter: SubgroupFilter) -> Vec<Subgroup> {
    match filter {
        SubgroupFilter::All => all,
        SubgroupFilter::Proper => all.into_iter().filter(|s| s.order() < h.order()).collect(),
        SubgroupFilter::Normal => all
            .into_iter()
            .filter(|s| s.is_normal_in(h).expect("same parent"))
            .collect(),
        SubgroupFilter::Maximal => {
            let proper: Vec<Subgroup> = all.into_iter().filter(|s| s.order() < h.order()).collect();
            proper
                .iter()
                .filter(|s| {
                    !proper
                        .iter()
                        .any(|t| t.order() > s.order() && s.is_subgroup_of(t))
                })
                .cloned()
                .collect()
        }
    }
}
