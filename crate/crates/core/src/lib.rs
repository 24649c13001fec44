//! Exact finite quasi-probability calculus.
//!
//! Statements of a finite Boolean universe are bitsets over its atoms. A
//! [`PreProb`] assigns one value per atom, drawn from a declared
//! finite-dimensional ℚ-span, and extends to every statement by finite
//! additivity. Gauges are invertible rational matrices acting on that span.
//! On top of this the crate provides semantic frames and decompositions,
//! canonical quasi-probabilities, relativisation and synchronisation, the
//! rules of total (pre/quasi/classical) probability, generalised Bayes, and
//! a brute-force verification suite.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod conditioning;
pub mod demos;
mod error;
pub mod lattice;
pub mod valuation;
pub mod values;
pub mod verify;


pub use crate::conditioning::{CellData, FrameAssignment, LocalPreProb, LocalQuasi};
pub use crate::error::{Error, Result};
pub use crate::lattice::{Partition, Statement, SubUniverse, Universe};
pub use crate::valuation::{PartialValuation, PreProb, QuasiProb, SemanticFrame};
pub use crate::values::{Basis, Enclosure, GaugeMap, Rational, SemValue, Sign};
