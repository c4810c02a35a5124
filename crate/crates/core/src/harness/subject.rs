use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;

use crate::arith::exact_log;
use crate::error::{Error, Result};
use crate::group::FiniteGroup;
use crate::subgroup::{center, omega_set, omega_subgroup, Subgroup};
use crate::verbal::{Caps, Lattice, SubgroupProfile};

/// A named p-group together with lazily cached invariants shared by the
/// checks run on it.
#[derive(Debug)]
pub struct Subject {
    pub name: String,
    pub p: u32,
    profile: SubgroupProfile,
    lattice: OnceCell<Result<Lattice>>,
    omega_sets: RefCell<HashMap<u32, usize>>,
    omega_subgroups: RefCell<HashMap<u32, usize>>,
    center: OnceCell<Subgroup>,
}

impl Subject {
    pub fn new(name: impl Into<String>, group: &FiniteGroup) -> Result<Subject> {
        Subject::from_subgroup(name, group.whole())
    }

    pub fn from_subgroup(name: impl Into<String>, h: Subgroup) -> Result<Subject> {
        let p = h.parent().prime().ok_or(Error::NotPGroup)?;
        if exact_log(p as u64, h.order() as u64).is_none() {
            return Err(Error::NotPGroup);
        }
        Ok(Subject {
            name: name.into(),
            p,
            profile: SubgroupProfile::new(h),
            lattice: OnceCell::new(),
            omega_sets: RefCell::new(HashMap::new()),
            omega_subgroups: RefCell::new(HashMap::new()),
            center: OnceCell::new(),
        })
    }

    pub fn whole(&self) -> &Subgroup {
        self.profile.subgroup()
    }

    pub fn order(&self) -> usize {
        self.whole().order()
    }

    /// `n` with `|G| = p^n`.
    pub fn log_order(&self) -> u32 {
        exact_log(self.p as u64, self.order() as u64).expect("checked at construction")
    }

    pub fn profile(&self) -> &SubgroupProfile {
        &self.profile
    }

    /// `p^e`.
    pub fn q(&self, e: u32) -> u64 {
        (self.p as u64).pow(e)
    }

    /// `G^(p^i)`.
    pub fn power(&self, i: u32) -> Result<Subgroup> {
        self.profile.gamma_power(1, self.q(i))
    }

    pub fn gamma(&self, k: usize) -> Result<Subgroup> {
        self.profile.gamma(k)
    }

    pub fn class(&self) -> Result<usize> {
        Ok(self.profile.series()?.class)
    }

    /// `|{g : g^(p^i) = 1}|`.
    pub fn omega_set_size(&self, i: u32) -> Result<usize> {
        if let Some(&n) = self.omega_sets.borrow().get(&i) {
            return Ok(n);
        }
        let n = omega_set(self.whole(), i)?.len();
        self.omega_sets.borrow_mut().insert(i, n);
        Ok(n)
    }

    /// `|Omega_i(G)|`, the order of the generated subgroup.
    pub fn omega_subgroup_order(&self, i: u32) -> Result<usize> {
        if let Some(&n) = self.omega_subgroups.borrow().get(&i) {
            return Ok(n);
        }
        let n = omega_subgroup(self.whole(), i)?.order();
        self.omega_subgroups.borrow_mut().insert(i, n);
        Ok(n)
    }

    pub fn center(&self) -> &Subgroup {
        self.center.get_or_init(|| center(self.whole()))
    }

    /// The full subgroup lattice, enumerated once; a cap error is cached too.
    pub fn lattice(&self, caps: &Caps) -> Result<&Lattice> {
        self.lattice
            .get_or_init(|| Lattice::new(self.whole(), caps.subgroups))
            .as_ref()
            .map_err(Clone::clone)
    }

    pub fn lattice_if_ready(&self) -> Option<&Lattice> {
        self.lattice.get().and_then(|r| r.as_ref().ok())
    }
}
