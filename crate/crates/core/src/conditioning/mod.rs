//! Relativisation, synchronisation, total-probability rules and Bayes.

mod bayes;
mod local;
mod total;

pub use bayes::{bayes_classical, bayes_invariant, bayes_mixed, bayes_stable};
pub use local::{
    conditional_preprob, conditional_quasi, relative_preprob, relative_probability, relative_quasi,
    LocalPreProb, LocalQuasi,
};
pub use total::{
    reconstruct_preprob, synchronize, total_preprob, total_probability, total_quasi, CellData, FrameAssignment,
};
