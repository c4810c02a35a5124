//! Textual group descriptions.
//!
//! A spec is a tagged record in YAML flow or JSON syntax, for example
//! `{type: cyclic, n: 9}` or `{"type": "example1", "p": 3, "r": 4}`.

use std::fmt;

use serde::{Deserialize, Serialize};

use super::{
    build_abelian, build_cyclic, build_direct_product, build_extension, build_modular,
    build_unitriangular, ExtensionData, FiniteGroup,
};
use crate::constructions::example1::construct_example1_variant;
use crate::error::{Error, Result};
use crate::IntMatrix;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case", deny_unknown_fields)]
pub enum GroupSpec {
    Cyclic {
        n: u64,
    },
    Abelian {
        invariants: Vec<u64>,
    },
    Unitriangular {
        n: usize,
        p: u32,
    },
    Product {
        factors: Vec<GroupSpec>,
    },
    /// `<a, b | a^(p^2) = b^p = 1, b^-1 a b = a^(1+p)>`.
    Modular {
        p: u32,
    },
    /// The maximal-class extension `G_r` of order `p^r`; `split: true`
    /// replaces `y^p = z` by `y^p = 1`.
    Example1 {
        p: u32,
        r: u32,
        #[serde(default, skip_serializing_if = "std::ops::Not::not")]
        split: bool,
    },
    Extension {
        p: u32,
        invariants: Vec<u64>,
        action: Vec<Vec<i64>>,
        cocycle: Vec<i64>,
    },
}

impl GroupSpec {
    /// Parses a spec, reporting the offset of the first syntax error.
    pub fn parse(text: &str) -> Result<GroupSpec> {
        serde_yaml::from_str(text).map_err(|e| Error::Parse {
            pos: e.location().map_or(0, |l| l.index()),
            msg: e.to_string(),
        })
    }

    /// Order of the described group, computed without building it.
    /// Saturates instead of overflowing.
    pub fn order(&self) -> u128 {
        let pow = |p: u32, e: u32| (p as u128).saturating_pow(e);
        match self {
            GroupSpec::Cyclic { n } => *n as u128,
            GroupSpec::Abelian { invariants } => invariants
                .iter()
                .fold(1u128, |acc, &d| acc.saturating_mul(d as u128)),
            GroupSpec::Unitriangular { n, p } => pow(*p, (n * n.saturating_sub(1) / 2) as u32),
            GroupSpec::Product { factors } => factors
                .iter()
                .fold(1u128, |acc, f| acc.saturating_mul(f.order())),
            GroupSpec::Modular { p } => pow(*p, 3),
            GroupSpec::Example1 { p, r, .. } => pow(*p, *r),
            GroupSpec::Extension { p, invariants, .. } => invariants
                .iter()
                .fold(*p as u128, |acc, &d| acc.saturating_mul(d as u128)),
        }
    }

    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Cyclic { n } => build_cyclic(*n),
            GroupSpec::Abelian { invariants } => build_abelian(invariants),
            GroupSpec::Unitriangular { n, p } => build_unitriangular(*n, *p),
            GroupSpec::Product { factors } => {
                let built = factors.iter().map(GroupSpec::build).collect::<Result<Vec<_>>>()?;
                build_direct_product(&built)
            }
            GroupSpec::Modular { p } => build_modular(*p),
            GroupSpec::Example1 { p, r, split } => {
                Ok(construct_example1_variant(*p, *r, *split)?.group)
            }
            GroupSpec::Extension {
                p,
                invariants,
                action,
                cocycle,
            } => build_extension(&ExtensionData {
                p: *p,
                invariants: invariants.clone(),
                action: IntMatrix::from_i64_rows(action)?,
                cocycle: cocycle.clone(),
            }),
        }
    }
}

fn list<T: fmt::Display>(f: &mut fmt::Formatter<'_>, items: &[T]) -> fmt::Result {
    write!(f, "[")?;
    for (k, x) in items.iter().enumerate() {
        if k > 0 {
            write!(f, ", ")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, "]")
}

/// Canonical flow-style text; [`GroupSpec::parse`] reads it back unchanged.
impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic { n } => write!(f, "{{type: cyclic, n: {n}}}"),
            GroupSpec::Abelian { invariants } => {
                write!(f, "{{type: abelian, invariants: ")?;
                list(f, invariants)?;
                write!(f, "}}")
            }
            GroupSpec::Unitriangular { n, p } => write!(f, "{{type: unitriangular, n: {n}, p: {p}}}"),
            GroupSpec::Product { factors } => {
                write!(f, "{{type: product, factors: ")?;
                list(f, factors)?;
                write!(f, "}}")
            }
            GroupSpec::Modular { p } => write!(f, "{{type: modular, p: {p}}}"),
            GroupSpec::Example1 { p, r, split } => {
                write!(f, "{{type: example1, p: {p}, r: {r}")?;
                if *split {
                    write!(f, ", split: true")?;
                }
                write!(f, "}}")
            }
            GroupSpec::Extension {
                p,
                invariants,
                action,
                cocycle,
            } => {
                write!(f, "{{type: extension, p: {p}, invariants: ")?;
                list(f, invariants)?;
                write!(f, ", action: [")?;
                for (k, row) in action.iter().enumerate() {
                    if k > 0 {
                        write!(f, ", ")?;
                    }
                    list(f, row)?;
                }
                write!(f, "], cocycle: ")?;
                list(f, cocycle)?;
                write!(f, "}}")
            }
        }
    }
}
