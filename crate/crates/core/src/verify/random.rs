//! Seeded generators for the randomized sweeps.

use alloc::format;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lattice::{Partition, Statement, Universe};
use crate::valuation::{PreProb, QuasiProb};
use crate::values::{int, rat, Basis, GaugeMap, Rational, SemValue};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `p/q` with `|p| ≤ 9`, `1 ≤ q ≤ 9`.
pub fn small_rational<R: Rng>(rng: &mut R) -> Rational {
    rat(rng.random_range(-9..=9), rng.random_range(1..=9))
}

/// The basis `{1, x1, …, x(dim-1)}` without enclosures.
pub fn symbolic_basis(dim: usize) -> Basis {
    (1..dim).fold(Basis::rational(), |b, j| {
        b.with_symbol(format!("x{j}"), None).expect("fresh symbol")
    })
}

pub fn semvalue<R: Rng>(rng: &mut R, dim: usize) -> SemValue {
    SemValue::new((0..dim).map(|_| small_rational(rng)).collect())
}

pub fn preprob<R: Rng>(rng: &mut R, n: usize, dim: usize) -> PreProb {
    let u = Universe::letters(n).expect("small universe");
    let atomic = (0..n).map(|_| semvalue(rng, dim)).collect();
    PreProb::new(u, symbolic_basis(dim), atomic).expect("consistent arity")
}

/// A pre-probability whose value at ⊤ is nonzero.
pub fn preprob_nonzero_top<R: Rng>(rng: &mut R, n: usize, dim: usize) -> PreProb {
    loop {
        let r = preprob(rng, n, dim);
        if !r.top_value().is_zero() {
            return r;
        }
    }
}

/// A rational quasi-probability: random atoms, the last one closing the sum to 1.
pub fn quasi<R: Rng>(rng: &mut R, n: usize) -> QuasiProb {
    let u = Universe::letters(n).expect("small universe");
    let mut atomic: Vec<Rational> = (1..n).map(|_| small_rational(rng)).collect();
    let rest = int(1) - atomic.iter().sum::<Rational>();
    atomic.push(rest);
    QuasiProb::new(u, atomic).expect("normalised")
}

/// A probability with some atoms of probability zero.
pub fn probability<R: Rng>(rng: &mut R, n: usize) -> QuasiProb {
    let u = Universe::letters(n).expect("small universe");
    let mut weights: Vec<i64> = (0..n).map(|_| rng.random_range(0..=4)).collect();
    if weights.iter().all(|w| *w == 0) {
        weights[rng.random_range(0..n)] = 1;
    }
    let total: i64 = weights.iter().sum();
    let atomic = weights.iter().map(|w| rat(*w, total)).collect();
    QuasiProb::new(u, atomic).expect("normalised")
}

/// An invertible matrix with entries in `-3..=3`.
pub fn gauge<R: Rng>(rng: &mut R, dim: usize) -> GaugeMap {
    loop {
        let m = (0..dim)
            .map(|_| (0..dim).map(|_| int(rng.random_range(-3..=3))).collect())
            .collect();
        if let Ok(g) = GaugeMap::new(m) {
            return g;
        }
    }
}

/// A partition of ⊤ into at most `n` nonempty cells.
pub fn partition<R: Rng>(rng: &mut R, u: &Universe) -> Partition {
    let n = u.atom_count();
    let mut bits = alloc::vec![0u32; n];
    for i in 0..n {
        bits[rng.random_range(0..n)] |= 1 << i;
    }
    let cells = bits
        .into_iter()
        .filter(|b| *b != 0)
        .map(|b| u.statement(b).expect("within width"))
        .collect();
    Partition::of_top(cells).expect("disjoint cover")
}

/// A nonempty statement.
pub fn statement<R: Rng>(rng: &mut R, u: &Universe) -> Statement {
    let max = u.top().bits();
    u.statement(rng.random_range(1..=max)).expect("within width")
}
