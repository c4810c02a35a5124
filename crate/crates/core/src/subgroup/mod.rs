//! Subgroups of a finite group and the structural invariants built from them.
//!
//! Every operation takes its *ambient* group as a [`Subgroup`], so the same
//! code computes `gamma_k(G)` and the intrinsic `gamma_k(H)` of a subgroup `H`.

mod enumerate;
mod ops;

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::Elem;

pub use enumerate::{enumerate_subgroups, enumerate_subgroups_by_joins, SubgroupFilter};
pub use ops::{
    center, commutator_subgroup, exponent, frattini_subgroup, is_i_regular, is_maximal_class,
    is_powerful, is_regular, lower_central_series, min_generators, omega_set, omega_subgroup,
    power_subgroup, SeriesRecord,
};

/// A subgroup of `parent`, stored as a sorted member list, a membership
/// bitset and a generating list whose closure is exactly the members.
#[derive(Clone)]
pub struct Subgroup {
    group: FiniteGroup,
    members: Vec<Elem>,
    bits: FixedBitSet,
    gens: Vec<Elem>,
}

impl Subgroup {
    pub fn trivial(g: &FiniteGroup) -> Subgroup {
        let mut bits = FixedBitSet::with_capacity(g.order());
        bits.insert(0);
        Subgroup {
            group: g.clone(),
            members: vec![0],
            bits,
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &FiniteGroup) -> Subgroup {
        Subgroup::from_elements(g, g.elements())
    }

    /// Least subgroup containing `gens`.
    pub fn generated(g: &FiniteGroup, gens: &[Elem]) -> Result<Subgroup> {
        for &x in gens {
            g.check(x)?;
        }
        Ok(Subgroup::from_elements(g, gens.iter().copied()))
    }

    /// Least subgroup containing every element of `elems`. Generators are
    /// added one at a time, skipping elements already generated, so the
    /// stored generating list stays short.
    pub fn from_elements<I: IntoIterator<Item = Elem>>(g: &FiniteGroup, elems: I) -> Subgroup {
        let mut acc = Subgroup::trivial(g);
        for x in elems {
            if !acc.contains(x) {
                acc = acc.extend(x);
            }
        }
        acc
    }

    /// `<self, x>` by breadth-first closure under right multiplication.
    ///
    /// Old members are already closed under the old generators, so they
    /// only need multiplying by `x`; new elements get every generator.
    pub fn extend(&self, x: Elem) -> Subgroup {
        if self.contains(x) {
            return self.clone();
        }
        let g = &self.group;
        let mut bits = self.bits.clone();
        let mut members = self.members.clone();
        let mut gens = self.gens.clone();
        gens.push(x);
        let mut queue = Vec::new();
        for &s in &self.members {
            let y = g.mul(s, x);
            if !bits.put(y as usize) {
                members.push(y);
                queue.push(y);
            }
        }
        while let Some(y) = queue.pop() {
            for &h in &gens {
                let w = g.mul(y, h);
                if !bits.put(w as usize) {
                    members.push(w);
                    queue.push(w);
                }
            }
        }
        members.sort_unstable();
        Subgroup {
            group: g.clone(),
            members,
            bits,
            gens,
        }
    }

    /// Subgroup generated by both; parents must agree.
    pub fn join(&self, other: &Subgroup) -> Result<Subgroup> {
        self.same_parent(other)?;
        let mut acc = self.clone();
        for &x in &other.gens {
            if !acc.contains(x) {
                acc = acc.extend(x);
            }
        }
        Ok(acc)
    }

    /// Builds a subgroup from a member list already known to be closed.
    pub(crate) fn from_closed_members(g: &FiniteGroup, mut members: Vec<Elem>, gens: Vec<Elem>) -> Subgroup {
        members.sort_unstable();
        let mut bits = FixedBitSet::with_capacity(g.order());
        for &m in &members {
            bits.insert(m as usize);
        }
        Subgroup {
            group: g.clone(),
            members,
            bits,
            gens,
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.group
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn members(&self) -> &[Elem] {
        &self.members
    }

    pub fn generators(&self) -> &[Elem] {
        &self.gens
    }

    #[inline]
    pub fn contains(&self, x: Elem) -> bool {
        self.bits.contains(x as usize)
    }

    pub fn is_trivial(&self) -> bool {
        self.members.len() == 1
    }

    pub fn is_whole(&self) -> bool {
        self.members.len() == self.group.order()
    }

    pub(crate) fn same_parent(&self, other: &Subgroup) -> Result<()> {
        if self.group.same_as(&other.group) {
            Ok(())
        } else {
            Err(Error::ParentMismatch)
        }
    }

    /// `self <= other`.
    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.group.same_as(&other.group) && self.gens.iter().all(|&x| other.contains(x))
    }

    /// `|other : self|` when `self <= other`.
    pub fn index_in(&self, other: &Subgroup) -> Result<usize> {
        if !self.is_subgroup_of(other) {
            return Err(Error::InvalidParameter("not a subgroup of the ambient group".into()));
        }
        Ok(other.order() / self.order())
    }

    /// Normal in `ambient`: conjugates of generators by generators stay inside.
    pub fn is_normal_in(&self, ambient: &Subgroup) -> Result<bool> {
        self.same_parent(ambient)?;
        let g = &self.group;
        Ok(self.is_subgroup_of(ambient)
            && ambient
                .gens
                .iter()
                .all(|&t| self.gens.iter().all(|&s| self.contains(g.conjugate(s, t)))))
    }

    /// Checks closure, identity, generator and Lagrange invariants exhaustively.
    pub fn validate(&self) -> Result<()> {
        let g = &self.group;
        let bad = |m: &str| Err(Error::Construction(format!("subgroup invariant violated: {m}")));
        if !self.contains(0) {
            return bad("identity missing");
        }
        if self.group.order() % self.order() != 0 {
            return bad("order does not divide the parent order");
        }
        if self.members.windows(2).any(|w| w[0] >= w[1]) || self.bits.count_ones(..) != self.order() {
            return bad("member list is not a sorted set matching the bitset");
        }
        for &a in &self.members {
            if !self.contains(g.inv(a)) {
                return bad("not closed under inverses");
            }
            for &b in &self.members {
                if !self.contains(g.mul(a, b)) {
                    return bad("not closed under multiplication");
                }
            }
        }
        if Subgroup::from_elements(g, self.gens.iter().copied()).members != self.members {
            return bad("generators do not generate the members");
        }
        Ok(())
    }

    /// Deterministic order: by size, then lexicographically by members.
    pub fn canonical_cmp(&self, other: &Subgroup) -> Ordering {
        self.order()
            .cmp(&other.order())
            .then_with(|| self.members.cmp(&other.members))
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.group.same_as(&other.group) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl Hash for Subgroup {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.members.hash(state);
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order())
            .field("generators", &self.gens)
            .finish()
    }
}

impl FiniteGroup {
    pub fn whole(&self) -> Subgroup {
        Subgroup::whole(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_abelian, build_cyclic, build_unitriangular};
    use proptest::prelude::*;

    #[test]
    fn generation_examples() {
        let c9 = build_cyclic(9).unwrap();
        assert!(Subgroup::generated(&c9, &[]).unwrap().is_trivial());
        assert_eq!(Subgroup::generated(&c9, &[3]).unwrap().order(), 3);
        assert!(Subgroup::generated(&c9, &[9]).is_err());
        let u = build_unitriangular(3, 3).unwrap();
        let s = Subgroup::generated(&u, &[1, 3]).unwrap();
        assert_eq!(s.order(), 27);
        s.validate().unwrap();
    }

    #[test]
    fn parent_mismatch() {
        let a = build_cyclic(9).unwrap();
        let b = build_cyclic(9).unwrap();
        assert_eq!(a.whole().join(&b.whole()).unwrap_err(), Error::ParentMismatch);
    }

    proptest! {
        #[test]
        fn generation_is_idempotent_and_monotone(
            gens in prop::collection::vec(0u32..81, 0..4),
            extra in 0u32..81,
        ) {
            let g = build_abelian(&[9, 3, 3]).unwrap();
            let u = build_unitriangular(3, 3).unwrap();
            for grp in [g, u] {
                let gens: Vec<Elem> = gens.iter().map(|&x| x % grp.order() as Elem).collect();
                let s = Subgroup::generated(&grp, &gens).unwrap();
                s.validate().unwrap();
                let again = Subgroup::generated(&grp, s.members()).unwrap();
                prop_assert_eq!(&again, &s);
                let mut more = gens.clone();
                more.push(extra % grp.order() as Elem);
                let bigger = Subgroup::generated(&grp, &more).unwrap();
                prop_assert!(s.is_subgroup_of(&bigger));
            }
        }
    }
}
