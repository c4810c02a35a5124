use std::cell::{OnceCell, RefCell};
use std::collections::HashMap;

use crate::error::Result;
use crate::subgroup::{
    enumerate_subgroups, lower_central_series, power_subgroup, SeriesRecord,
    Subgroup, SubgroupFilter,
};

/// A subgroup with lazily cached intrinsic invariants, so several words can
/// be evaluated in closed form without recomputing the lower central series.
#[derive(Clone, Debug)]
pub struct SubgroupProfile {
    sub: Subgroup,
    series: OnceCell<SeriesRecord>,
    /// `(k, q) -> gamma_k^q`, with `gamma_1` the subgroup itself.
    powers: RefCell<HashMap<(usize, u64), Subgroup>>,
}

impl SubgroupProfile {
    pub fn new(sub: Subgroup) -> Self {
        SubgroupProfile {
            sub,
            series: OnceCell::new(),
            powers: RefCell::new(HashMap::new()),
        }
    }

    pub fn subgroup(&self) -> &Subgroup {
        &self.sub
    }

    pub fn series(&self) -> Result<&SeriesRecord> {
        if let Some(s) = self.series.get() {
            return Ok(s);
        }
        let s = lower_central_series(&self.sub)?;
        Ok(self.series.get_or_init(|| s))
    }

    /// `gamma_k` of the subgroup, 1-based.
    pub fn gamma(&self, k: usize) -> Result<Subgroup> {
        Ok(self.series()?.gamma(k.max(1)).clone())
    }

    /// `gamma_k^q`.
    pub fn gamma_power(&self, k: usize, q: u64) -> Result<Subgroup> {
        if let Some(s) = self.powers.borrow().get(&(k, q)) {
            return Ok(s.clone());
        }
        let base = self.gamma(k)?;
        let s = if q == 1 { base } else { power_subgroup(&base, q)? };
        self.powers.borrow_mut().insert((k, q), s.clone());
        Ok(s)
    }
}

/// All subgroups of an ambient subgroup, in canonical order, with profiles.
#[derive(Clone, Debug)]
pub struct Lattice {
    profiles: Vec<SubgroupProfile>,
    normal: OnceCell<Vec<bool>>,
}

impl Lattice {
    /// Enumerates every subgroup of `h`; errors if `|h|` exceeds `cap`.
    pub fn new(h: &Subgroup, cap: usize) -> Result<Lattice> {
        let subs = enumerate_subgroups(h, cap, SubgroupFilter::All)?;
        Ok(Lattice {
            profiles: subs.into_iter().map(SubgroupProfile::new).collect(),
            normal: OnceCell::new(),
        })
    }

    /// The ambient subgroup itself, last in canonical order.
    pub fn top(&self) -> &SubgroupProfile {
        self.profiles.last().expect("a lattice contains its top")
    }

    pub fn len(&self) -> usize {
        self.profiles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.profiles.is_empty()
    }

    pub fn profiles(&self) -> &[SubgroupProfile] {
        &self.profiles
    }

    /// Proper subgroups, in canonical order.
    pub fn proper(&self) -> &[SubgroupProfile] {
        &self.profiles[..self.profiles.len() - 1]
    }

    /// Normal subgroups of the top, in canonical order.
    pub fn normal(&self) -> impl Iterator<Item = &SubgroupProfile> {
        let top = self.top().subgroup().clone();
        let flags = self.normal.get_or_init(|| {
            self.profiles
                .iter()
                .map(|s| s.subgroup().is_normal_in(&top).expect("same parent"))
                .collect()
        });
        self.profiles.iter().zip(flags).filter(|(_, &n)| n).map(|(s, _)| s)
    }
}
