//! Exact finite groups with canonical integer element encoding.
//!
//! Elements of a group of order `n` are the ids `0..n`, with `0` the
//! identity. Several backends supply the multiplication; small groups
//! additionally get a precomputed dense table (see [`set_table_cap`]).

mod backends;
mod build;
mod radix;
pub mod spec;

use std::fmt;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};
use crate::Elem;

pub(crate) use backends::Backend;
pub use build::{
    build_abelian, build_cyclic, build_direct_product, build_extension, build_modular,
    build_quotient, build_unitriangular, from_table, unitriangular_element, ExtensionData,
};
pub use spec::GroupSpec;

/// Hard limit on group orders handled by this crate.
pub const MAX_ORDER: usize = 1_000_000;

/// Dense tables are stored as `u16`, which bounds the table cap.
pub const MAX_TABLE_CAP: usize = 1 << 16;

pub const DEFAULT_TABLE_CAP: usize = 4096;

static TABLE_CAP: AtomicUsize = AtomicUsize::new(DEFAULT_TABLE_CAP);

/// Sets the largest order for which newly built groups precompute a dense
/// multiplication table. Clamped to [`MAX_TABLE_CAP`].
pub fn set_table_cap(cap: usize) {
    TABLE_CAP.store(cap.min(MAX_TABLE_CAP), Ordering::Relaxed);
}

pub fn table_cap() -> usize {
    TABLE_CAP.load(Ordering::Relaxed)
}

struct Inner {
    order: usize,
    prime: Option<u32>,
    backend: Backend,
    table: Option<Box<[u16]>>,
    inverses: Box<[Elem]>,
    center: OnceLock<Box<[Elem]>>,
}

/// Shared handle to an immutable finite group. Cloning is cheap.
#[derive(Clone)]
pub struct FiniteGroup(Arc<Inner>);

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("order", &self.0.order)
            .field("prime", &self.0.prime)
            .field("backend", &self.backend_name())
            .finish()
    }
}

impl FiniteGroup {
    pub(crate) fn from_backend(order: usize, prime: Option<u32>, backend: Backend) -> Self {
        debug_assert!(order >= 1 && order <= MAX_ORDER);
        let inverses: Box<[Elem]> = (0..order as Elem).map(|a| backend.inv(a)).collect();
        let table = (order <= table_cap()).then(|| {
            let mut t = vec![0u16; order * order];
            for a in 0..order {
                for b in 0..order {
                    t[a * order + b] = backend.mul(a as Elem, b as Elem) as u16;
                }
            }
            t.into_boxed_slice()
        });
        FiniteGroup(Arc::new(Inner {
            order,
            prime,
            backend,
            table,
            inverses,
            center: OnceLock::new(),
        }))
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    /// The prime `p` when the order is a power of `p`.
    pub fn prime(&self) -> Option<u32> {
        self.0.prime
    }

    pub(crate) fn require_prime(&self) -> Result<u32> {
        self.0.prime.ok_or(Error::NotPGroup)
    }

    pub fn backend_name(&self) -> &'static str {
        self.0.backend.name()
    }

    pub(crate) fn backend(&self) -> &Backend {
        &self.0.backend
    }

    pub fn has_table(&self) -> bool {
        self.0.table.is_some()
    }

    pub fn same_as(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    pub fn identity(&self) -> Elem {
        0
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.order as Elem
    }

    pub fn check(&self, a: Elem) -> Result<()> {
        if (a as usize) < self.0.order {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                id: a,
                order: self.0.order,
            })
        }
    }

    /// Product `a * b` without range checks; ids must be valid.
    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        debug_assert!((a as usize) < self.0.order && (b as usize) < self.0.order);
        match &self.0.table {
            Some(t) => t[a as usize * self.0.order + b as usize] as Elem,
            None => self.0.backend.mul(a, b),
        }
    }

    #[inline]
    pub fn inv(&self, a: Elem) -> Elem {
        self.0.inverses[a as usize]
    }

    pub fn try_mul(&self, a: Elem, b: Elem) -> Result<Elem> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    pub fn inverse(&self, a: Elem) -> Result<Elem> {
        self.check(a)?;
        Ok(self.inv(a))
    }

    /// `a^e` for any integer exponent.
    pub fn pow(&self, a: Elem, e: i64) -> Elem {
        let mut base = if e < 0 { self.inv(a) } else { a };
        let mut e = e.unsigned_abs();
        let mut acc = 0;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    #[inline]
    pub fn commutator(&self, a: Elem, b: Elem) -> Elem {
        let t = self.mul(self.inv(a), self.inv(b));
        self.mul(self.mul(t, a), b)
    }

    /// `b^-1 a b`.
    #[inline]
    pub fn conjugate(&self, a: Elem, b: Elem) -> Elem {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// Left-normed commutator `[[a_1, a_2], ..., a_k]`; a single entry is itself.
    pub fn left_normed_commutator(&self, args: &[Elem]) -> Elem {
        let mut it = args.iter();
        let first = it.next().copied().unwrap_or(0);
        it.fold(first, |acc, &x| self.commutator(acc, x))
    }

    pub fn element_order(&self, a: Elem) -> Result<u64> {
        self.check(a)?;
        let mut m = 1u64;
        let mut cur = a;
        while cur != 0 {
            cur = self.mul(cur, a);
            m += 1;
        }
        Ok(m)
    }

    /// Sorted ids of the centre `Z(G)`, computed once.
    pub fn center_elements(&self) -> &[Elem] {
        self.0.center.get_or_init(|| {
            let gens = self.whole().generators().to_vec();
            self.elements()
                .filter(|&a| gens.iter().all(|&t| self.mul(a, t) == self.mul(t, a)))
                .collect()
        })
    }

    pub fn is_abelian_on(&self, gens: &[Elem]) -> bool {
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Checks identity, inverse and associativity laws.
    ///
    /// Up to [`AXIOM_EXHAUSTIVE_LIMIT`] elements the identity and inverse
    /// laws are checked on every element and associativity by Light's test
    /// over a generating set, which is exact. Larger groups get
    /// `samples` random triples from a seeded generator.
    pub fn verify_axioms(&self, samples: usize, seed: u64) -> Result<AxiomCheck> {
        let n = self.order();
        let fail = |msg: String| Err(Error::Construction(msg));
        if n <= AXIOM_EXHAUSTIVE_LIMIT {
            for a in self.elements() {
                if self.mul(0, a) != a || self.mul(a, 0) != a {
                    return fail(format!("identity law fails at {a}"));
                }
                if self.mul(a, self.inv(a)) != 0 || self.mul(self.inv(a), a) != 0 {
                    return fail(format!("inverse law fails at {a}"));
                }
            }
            let gens = crate::subgroup::Subgroup::whole(self).generators().to_vec();
            for &s in &gens {
                for a in self.elements() {
                    for b in self.elements() {
                        if self.mul(a, self.mul(b, s)) != self.mul(self.mul(a, b), s) {
                            return fail(format!("associativity fails at ({a}, {b}, {s})"));
                        }
                    }
                }
            }
            return Ok(AxiomCheck {
                exhaustive: true,
                checks: (n * n * gens.len() + 2 * n) as u64,
            });
        }
        let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
        for _ in 0..samples {
            let a = rng.gen_range(0..n) as Elem;
            let b = rng.gen_range(0..n) as Elem;
            let c = rng.gen_range(0..n) as Elem;
            if self.mul(a, self.mul(b, c)) != self.mul(self.mul(a, b), c) {
                return fail(format!("associativity fails at ({a}, {b}, {c})"));
            }
            if self.mul(0, a) != a || self.mul(a, self.inv(a)) != 0 {
                return fail(format!("identity or inverse law fails at {a}"));
            }
        }
        Ok(AxiomCheck {
            exhaustive: false,
            checks: samples as u64,
        })
    }
}

pub const AXIOM_EXHAUSTIVE_LIMIT: usize = 2000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AxiomCheck {
    pub exhaustive: bool,
    pub checks: u64,
}
