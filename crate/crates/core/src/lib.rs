//! Exact computations in finite p-groups.
//!
//! The crate builds small p-groups exactly ([`group`]), computes their
//! power-commutator structure ([`subgroup`]), evaluates verbal subgroups and
//! omega-maximality ([`verbal`]), constructs the maximal-class family `G_r`
//! and a fixed corpus ([`constructions`]), and runs structured checks of the
//! characterisation of powerful p-groups over that corpus ([`harness`]).

pub mod arith;
pub mod constructions;
pub mod error;
pub mod group;
pub mod harness;
pub mod subgroup;
pub mod verbal;

use num_bigint::BigInt;

pub use constructions::{Matrix, Scalar, SnfResult};
pub use error::{Error, Result};
pub use group::{FiniteGroup, GroupSpec};
pub use subgroup::Subgroup;
pub use verbal::Word;

/// Canonical element id; `0` is always the identity.
pub type Elem = u32;

/// Overflow-checked machine-integer matrix.
pub type IntMatrix = Matrix<i64>;

/// Arbitrary-precision integer matrix.
pub type BigIntMatrix = Matrix<BigInt>;

pub type IntSnf = SnfResult<i64>;
pub type BigIntSnf = SnfResult<BigInt>;
