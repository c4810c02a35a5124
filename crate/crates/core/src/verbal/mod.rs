//! Words in the free group, verbal subgroups, omega-maximality and
//! interchangeability.
//!
//! Every verbal subgroup of a [`Subgroup`] `H` is computed intrinsically,
//! treating `H` as an abstract group.

mod lattice;
mod parse;
mod word;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subgroup::{commutator_subgroup, power_subgroup, Subgroup};
use crate::Elem;

pub use lattice::{Lattice, SubgroupProfile};
pub use word::{eval_word, Family, Term, Word};

/// Resource limits shared by the lattice-based checks.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    /// Largest order whose full subgroup lattice is enumerated.
    pub subgroups: usize,
    /// Largest `|H|^arity` evaluated exhaustively.
    pub tuples: u64,
    /// Largest `|H|^2` scanned by the regularity checks.
    pub pairs: u64,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            subgroups: 729,
            tuples: 10_000_000,
            pairs: 1_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerbalMode {
    /// Closure of the values at every tuple of arguments.
    Exhaustive,
    /// The power-commutator formula of a structured word.
    ClosedForm,
}

/// `w(H)` in the requested mode.
pub fn verbal_subgroup(w: &Word, h: &Subgroup, mode: VerbalMode, caps: &Caps) -> Result<Subgroup> {
    match mode {
        VerbalMode::Exhaustive => verbal_exhaustive(w, h, caps.tuples),
        VerbalMode::ClosedForm => closed_form(w, &SubgroupProfile::new(h.clone())),
    }
}

/// Subgroup generated by `w(h_1, ..., h_n)` over all `n`-tuples from `H`.
/// Refuses, rather than samples, when `|H|^n` exceeds `tuple_cap`.
pub fn verbal_exhaustive(w: &Word, h: &Subgroup, tuple_cap: u64) -> Result<Subgroup> {
    let n = w.arity();
    let tuples = (h.order() as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if tuples > tuple_cap as u128 {
        return Err(Error::cap("word tuple", tuples, tuple_cap));
    }
    let g = h.parent();
    let members = h.members();
    let mut seen = FixedBitSet::with_capacity(g.order());
    let mut values = Vec::new();
    let mut idx = vec![0usize; n];
    let mut args: Vec<Elem> = vec![members[0]; n];
    loop {
        let v = w.eval_unchecked(g, &args);
        if !seen.put(v as usize) {
            values.push(v);
        }
        // odometer over members^n
        let mut pos = 0;
        loop {
            if pos == n {
                return Ok(Subgroup::from_elements(g, values));
            }
            idx[pos] += 1;
            if idx[pos] < members.len() {
                args[pos] = members[idx[pos]];
                break;
            }
            idx[pos] = 0;
            args[pos] = members[0];
            pos += 1;
        }
    }
}

/// Closed form for a structured word:
/// `short(i,k)` gives `H^(p^i) gamma_k(H)` and `long(i)` gives
/// `H^(p^i) gamma_(p-1)(H)^(p^(i-1)) gamma_p(H)`.
pub fn closed_form(w: &Word, profile: &SubgroupProfile) -> Result<Subgroup> {
    let h = profile.subgroup();
    let prime = h.parent().require_prime()?;
    let family = w.family().ok_or(Error::Unstructured)?;
    let word_prime = match family {
        word::Family::Short { p, .. } | word::Family::Long { p, .. } => p,
    };
    if word_prime != prime {
        return Err(Error::InvalidParameter(format!(
            "word is built for p = {word_prime} but the group has p = {prime}"
        )));
    }
    let q = |e: u32| (prime as u64).pow(e);
    match family {
        word::Family::Short { i, k, .. } => profile.gamma_power(1, q(i))?.join(&profile.gamma(k as usize)?),
        word::Family::Long { p, i } => profile
            .gamma_power(1, q(i))?
            .join(&profile.gamma_power(p as usize - 1, q(i - 1))?)?
            .join(&profile.gamma(p as usize)?),
    }
}

/// Closed form when the word is structured, exhaustive otherwise.
pub fn verbal_auto(w: &Word, profile: &SubgroupProfile, caps: &Caps) -> Result<Subgroup> {
    if w.family().is_some() {
        closed_form(w, profile)
    } else {
        verbal_exhaustive(w, profile.subgroup(), caps.tuples)
    }
}

/// `|H : w(H)|`.
pub fn verbal_index(w: &Word, profile: &SubgroupProfile, caps: &Caps) -> Result<usize> {
    Ok(profile.subgroup().order() / verbal_auto(w, profile, caps)?.order())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Maximality {
    pub holds: bool,
    /// `|G : w(G)|`.
    pub index: usize,
    /// First proper subgroup in canonical order with `|H : w(H)| >= |G : w(G)|`.
    pub witness: Option<Subgroup>,
}

/// Whether every proper subgroup `H` has `|H : w(H)| < |G : w(G)|`.
pub fn is_omega_maximal(w: &Word, h: &Subgroup, caps: &Caps) -> Result<Maximality> {
    is_omega_maximal_in(w, &Lattice::new(h, caps.subgroups)?, caps)
}

pub fn is_omega_maximal_in(w: &Word, lattice: &Lattice, caps: &Caps) -> Result<Maximality> {
    let index = verbal_index(w, lattice.top(), caps)?;
    for s in lattice.proper() {
        if verbal_index(w, s, caps)? >= index {
            return Ok(Maximality {
                holds: false,
                index,
                witness: Some(s.subgroup().clone()),
            });
        }
    }
    Ok(Maximality {
        holds: true,
        index,
        witness: None,
    })
}

/// A member of `C = {H <= G : |H : w(H)| >= |G : w(G)|}` minimal under
/// inclusion: the first member of `C` in canonical order. Canonical order
/// sorts by size first, so no proper subgroup of the result lies in `C`.
pub fn find_minimal_c_member(w: &Word, h: &Subgroup, caps: &Caps) -> Result<Subgroup> {
    find_minimal_c_member_in(w, &Lattice::new(h, caps.subgroups)?, caps)
}

pub fn find_minimal_c_member_in(w: &Word, lattice: &Lattice, caps: &Caps) -> Result<Subgroup> {
    let index = verbal_index(w, lattice.top(), caps)?;
    for s in lattice.profiles() {
        if verbal_index(w, s, caps)? >= index {
            return Ok(s.subgroup().clone());
        }
    }
    unreachable!("the top of the lattice always lies in C")
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interchange {
    pub holds: bool,
    /// First normal subgroup in canonical order violating the containment.
    pub witness: Option<Subgroup>,
    /// Number of normal subgroups checked.
    pub normal_checked: usize,
}

/// Whether `[w(N), G] <= [N, w(G)] [w(G), G]^p [w(G), G, G]` for every
/// normal subgroup `N` of `G`.
pub fn is_interchangeable(w: &Word, h: &Subgroup, caps: &Caps) -> Result<Interchange> {
    is_interchangeable_in(w, &Lattice::new(h, caps.subgroups)?, caps)
}

pub fn is_interchangeable_in(w: &Word, lattice: &Lattice, caps: &Caps) -> Result<Interchange> {
    let top = lattice.top();
    let g = top.subgroup();
    let p = g.parent().require_prime()?;
    let wg = verbal_auto(w, top, caps)?;
    let wgg = commutator_subgroup(&wg, g)?;
    let base = power_subgroup(&wgg, p as u64)?.join(&commutator_subgroup(&wgg, g)?)?;
    let mut checked = 0;
    for n in lattice.normal() {
        checked += 1;
        let lhs = commutator_subgroup(&verbal_auto(w, n, caps)?, g)?;
        if lhs.is_subgroup_of(&base) {
            continue;
        }
        let rhs = base.join(&commutator_subgroup(n.subgroup(), &wg)?)?;
        if !lhs.is_subgroup_of(&rhs) {
            return Ok(Interchange {
                holds: false,
                witness: Some(n.subgroup().clone()),
                normal_checked: checked,
            });
        }
    }
    Ok(Interchange {
        holds: true,
        witness: None,
        normal_checked: checked,
    })
}
