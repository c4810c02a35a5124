//! Theorem-level checks producing structured reports.
//!
//! Each check computes every quantity it asserts. Hypotheses outside a
//! theorem's range give `not_applicable` with the raw values recorded, and a
//! resource cap gives `skipped` with the cap named in the notes.

mod checks;
mod report;
mod subject;

pub use checks::{
    check_congruences, check_example1, check_hethelyi_levai, check_lemma1, check_lemma6,
    check_minimal_c_member, check_oracle_equivalence, check_regular_equality, check_theorem2,
    check_theorem_a, check_theorem_b, check_theorem_c, check_theorem_c_on, lemma1_words,
    oracle_words, run_all, run_member,
};
pub use report::{all_passed, summary_table, TheoremReport, Verdict};
pub use subject::Subject;
