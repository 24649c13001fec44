//! The exact value space: rationals, values in a declared ℚ-span, exact
//! linear algebra and constructive gauges.

mod basis;
mod gauge;
mod linalg;
mod rational;
mod semvalue;

pub use basis::{sv_sign, Basis, Enclosure, Sign, UNIT_SYMBOL};
pub use gauge::GaugeMap;
pub use linalg::{q_coords, q_rank};
pub use rational::{format_rational, int, one, parse_rational, rat, zero, Rational};
pub use semvalue::SemValue;

pub(crate) use linalg::{rank_of, solve, IndependentSet};
