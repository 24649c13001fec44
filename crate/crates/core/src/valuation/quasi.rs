use alloc::vec::Vec;

use num_traits::{One, Signed, Zero};

use super::preprob::PreProb;
use crate::error::{Error, Result};
use crate::lattice::{Statement, Universe};
use crate::values::{q_coords, Rational, SemValue};

/// Canonical rational representative of a semantic-dimension-one
/// valuation: atoms sum to 1, or all vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiProb {
    universe: Universe,
    atomic: Vec<Rational>,
}

impl QuasiProb {
    pub fn new(universe: Universe, atomic: Vec<Rational>) -> Result<Self> {
        if atomic.len() != universe.atom_count() {
            return Err(Error::ArityMismatch {
                expected: universe.atom_count(),
                found: atomic.len(),
            });
        }
        let sum: Rational = atomic.iter().sum();
        if !sum.is_one() && !atomic.iter().all(Zero::is_zero) {
            return Err(Error::NotNormalised);
        }
        Ok(QuasiProb { universe, atomic })
    }

    pub fn zero(universe: Universe) -> Self {
        let atomic = alloc::vec![Rational::zero(); universe.atom_count()];
        QuasiProb { universe, atomic }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn atomic(&self) -> &[Rational] {
        &self.atomic
    }

    pub fn is_zero(&self) -> bool {
        self.atomic.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, s: Statement) -> Result<Rational> {
        self.universe.check(s)?;
        Ok(self.eval_unchecked(s))
    }

    pub(crate) fn eval_unchecked(&self, s: Statement) -> Rational {
        s.atoms().map(|i| &self.atomic[i]).sum()
    }

    /// Nonnegative on every atom, hence on every statement.
    pub fn is_probability(&self) -> bool {
        self.atomic.iter().all(|q| !q.is_negative())
    }

    /// The same valuation as a pre-probability over the basis `{1}`.
    pub fn to_preprob(&self) -> PreProb {
        PreProb::rational(self.universe.clone(), &self.atomic).expect("arity checked at construction")
    }
}

/// Quasi part and top-zero residuals of [`PreProb::canonical_split`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalSplit {
    pub quasi: QuasiProb,
    /// The value `R(⊤)` that rescales the quasi part back.
    pub top_value: SemValue,
    /// One pure pre-probability per remaining frame direction; each is 0 at ⊤.
    pub residuals: Vec<PreProb>,
}

impl CanonicalSplit {
    /// `R(s) = Q(s)·R(⊤) + Σ_k R^{(k)}(s)`, atomwise.
    pub fn reconstruct(&self, template: &PreProb) -> Result<PreProb> {
        let mut atomic: Vec<SemValue> = self
            .quasi
            .atomic()
            .iter()
            .map(|q| self.top_value.scale(q))
            .collect();
        if atomic.len() != template.atomic().len() {
            return Err(Error::ArityMismatch {
                expected: template.atomic().len(),
                found: atomic.len(),
            });
        }
        for r in &self.residuals {
            for (a, v) in atomic.iter_mut().zip(r.atomic()) {
                a.add_assign(v)?;
            }
        }
        PreProb::new(template.universe().clone(), template.basis().clone(), atomic)
    }
}

impl PreProb {
    /// The canonical quasi-probability `Q(s) = R(s)/R(⊤)` of a valuation of
    /// semantic dimension at most one.
    pub fn to_quasi(&self) -> Result<QuasiProb> {
        if self.is_zero() {
            return Ok(QuasiProb::zero(self.universe().clone()));
        }
        let dim = self.semantic_dimension();
        if dim > 1 {
            return Err(Error::HigherDimension(dim));
        }
        let top = self.top_value();
        if top.is_zero() {
            return Err(Error::TopIsZero);
        }
        let atomic = self
            .atomic()
            .iter()
            .map(|v| v.ratio(&top))
            .collect::<Result<Vec<_>>>()?;
        QuasiProb::new(self.universe().clone(), atomic)
    }

    /// Splits off the normalised direction using the canonical frame with
    /// ⊤ first: `Q = q_1`, and every other frame direction becomes a
    /// top-zero pre-probability.
    pub fn canonical_split(&self) -> Result<CanonicalSplit> {
        if self.is_zero() {
            return Ok(CanonicalSplit {
                quasi: QuasiProb::zero(self.universe().clone()),
                top_value: self.basis().zero(),
                residuals: Vec::new(),
            });
        }
        let frame = self.canonical_frame(true)?;
        let coords = self
            .atomic()
            .iter()
            .map(|v| q_coords(v, frame.values()))
            .collect::<Result<Vec<_>>>()?;
        let quasi_atomic: Vec<Rational> = coords.iter().map(|c| c[0].clone()).collect();
        let quasi = QuasiProb::new(self.universe().clone(), quasi_atomic)?;
        let residuals = (1..frame.len())
            .map(|k| {
                let value = &frame.values()[k];
                self.with_atomic(coords.iter().map(|c| value.scale(&c[k])).collect())
            })
            .collect();
        let split = CanonicalSplit {
            quasi,
            top_value: frame.values()[0].clone(),
            residuals,
        };
        debug_assert_eq!(split.reconstruct(self).as_ref(), Ok(self));
        Ok(split)
    }
}
