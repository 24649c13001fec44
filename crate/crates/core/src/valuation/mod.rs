//! Pre-probabilities, quasi-probabilities and partial valuations.

mod frame;
mod partial;
mod preprob;
mod quasi;

pub use frame::SemanticFrame;
pub use partial::{deduce_missing, extend_partial, PartialValuation, DEDUCTION_LIMIT};
pub use preprob::PreProb;
pub use quasi::{CanonicalSplit, QuasiProb};
