#![allow(dead_code)]

use std::sync::OnceLock;

use pgroup::constructions::{corpus, CorpusMember};
use pgroup::verbal::{Caps, Lattice};
use pgroup::{FiniteGroup, Subgroup};

/// Corpus members small enough for exhaustive lattice work.
pub fn small_members() -> &'static [CorpusMember] {
    static CELL: OnceLock<Vec<CorpusMember>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = corpus(3, 243).unwrap().members;
        out.extend(corpus(5, 125).unwrap().members);
        out
    })
}

/// Every corpus member the acceptance suites touch.
pub fn all_members() -> &'static [CorpusMember] {
    static CELL: OnceLock<Vec<CorpusMember>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = corpus(3, 729).unwrap().members;
        out.extend(corpus(5, 15625).unwrap().members);
        out
    })
}

pub fn pick<T>(items: &[T], seed: usize) -> &T {
    &items[seed % items.len()]
}

pub fn element(g: &FiniteGroup, seed: u64) -> u32 {
    (seed % g.order() as u64) as u32
}

/// All subgroups of a small member, in canonical order.
pub fn subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    Lattice::new(&g.whole(), Caps::default().subgroups)
        .unwrap()
        .profiles()
        .iter()
        .map(|p| p.subgroup().clone())
        .collect()
}
