use serde::{Deserialize, Serialize};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::group::{FiniteGroup, GroupSpec};

#[derive(Clone, Debug)]
pub struct CorpusMember {
    pub name: String,
    pub spec: GroupSpec,
    pub group: FiniteGroup,
}

/// Manifest line for a corpus member.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestEntry {
    pub name: String,
    pub order: u64,
    pub backend: String,
    pub spec: String,
}

#[derive(Clone, Debug, Default)]
pub struct Corpus {
    pub members: Vec<CorpusMember>,
    /// Names of members left out because they exceed `max_order`.
    pub skipped: Vec<String>,
}

impl Corpus {
    pub fn manifest(&self) -> Vec<ManifestEntry> {
        self.members
            .iter()
            .map(|m| ManifestEntry {
                name: m.name.clone(),
                order: m.group.order() as u64,
                backend: m.group.backend_name().to_string(),
                spec: m.spec.to_string(),
            })
            .collect()
    }

    pub fn get(&self, name: &str) -> Option<&CorpusMember> {
        self.members.iter().find(|m| m.name == name)
    }
}

/// The fixed, deterministically named test fleet for an odd prime `p`:
/// cyclic and mixed abelian groups, the modular and extraspecial groups of
/// order `p^3`, `UT_4(F_p)`, two direct products, and the family `G_r`
/// alongside its split variants. Members above `max_order` are skipped.
pub fn corpus(p: u32, max_order: u64) -> Result<Corpus> {
    if p == 2 || !is_prime(p as u64) {
        return Err(Error::InvalidParameter(format!("{p} is not an odd prime")));
    }
    let q = p as u64;
    let cyc = |n: u64| GroupSpec::Cyclic { n };
    let ab = |invariants: Vec<u64>| GroupSpec::Abelian { invariants };
    let ut3 = GroupSpec::Unitriangular { n: 3, p };
    let modular = GroupSpec::Modular { p };

    let mut candidates: Vec<(String, GroupSpec)> = vec![
        (format!("C{}", q), cyc(q)),
        (format!("C{}", q.pow(2)), cyc(q.pow(2))),
        (format!("C{}", q.pow(3)), cyc(q.pow(3))),
        (format!("C{}", q.pow(4)), cyc(q.pow(4))),
        (format!("C{q}^2"), ab(vec![q, q])),
        (format!("C{q}^3"), ab(vec![q, q, q])),
        (format!("C{q}^4"), ab(vec![q, q, q, q])),
        (format!("C{}xC{q}", q * q), ab(vec![q * q, q])),
        (format!("C{}xC{}", q * q, q * q), ab(vec![q * q, q * q])),
        (format!("C{}xC{q}", q.pow(3)), ab(vec![q.pow(3), q])),
        (format!("Mod({})", q.pow(3)), modular.clone()),
        (format!("UT3(F{p})"), ut3.clone()),
        (format!("UT4(F{p})"), GroupSpec::Unitriangular { n: 4, p }),
        (
            format!("C{q}xUT3(F{p})"),
            GroupSpec::Product {
                factors: vec![cyc(q), ut3],
            },
        ),
        (
            format!("C{q}xMod({})", q.pow(3)),
            GroupSpec::Product {
                factors: vec![cyc(q), modular],
            },
        ),
    ];
    let mut r = 2;
    while (q as u128).pow(r) <= crate::group::MAX_ORDER as u128 && r <= 12 {
        candidates.push((format!("G({p},{r})"), GroupSpec::Example1 { p, r, split: false }));
        candidates.push((format!("G({p},{r})split"), GroupSpec::Example1 { p, r, split: true }));
        r += 1;
    }

    let mut out = Corpus::default();
    for (name, spec) in candidates {
        if spec.order() > max_order as u128 {
            out.skipped.push(name);
            continue;
        }
        let group = spec.build()?;
        out.members.push(CorpusMember { name, spec, group });
    }
    Ok(out)
}
