//! Integer-matrix machinery, the maximal-class family `G_r`, and the fixed
//! test corpus.

pub mod corpus;
pub mod example1;
pub mod matrix;
pub mod snf;

pub use corpus::{corpus, Corpus, CorpusMember, ManifestEntry};
pub use example1::{companion_alpha, construct_example1, construct_example1_variant, Example1Group};
pub use matrix::{Matrix, Scalar};
pub use snf::{smith_normal_form, SnfResult};
