//! Finite Boolean universes of statements and their sub-universes.

mod statement;
mod sub;
mod universe;

pub use statement::{localise, relative_complement, Atoms, Statement, MAX_ATOMS};
pub use sub::{Partition, SubUniverse};
pub use universe::{ProductShape, Statements, Universe, MAX_ENUMERATION};
