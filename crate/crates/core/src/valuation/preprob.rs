use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::lattice::{Statement, Universe};
use crate::values::{q_rank, Basis, GaugeMap, SemValue};

/// A finitely additive valuation: one value per atom, every other
/// statement by summation. `R(⊥) = 0` and `R(¬s) = R(⊤) − R(s)` hold by
/// construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreProb {
    universe: Universe,
    basis: Basis,
    atomic: Vec<SemValue>,
}

impl PreProb {
    /// Any atomic assignment is admissible.
    pub fn new(universe: Universe, basis: Basis, atomic: Vec<SemValue>) -> Result<Self> {
        if atomic.len() != universe.atom_count() {
            return Err(Error::ArityMismatch {
                expected: universe.atom_count(),
                found: atomic.len(),
            });
        }
        if let Some(v) = atomic.iter().find(|v| v.dim() != basis.dim()) {
            return Err(Error::BasisMismatch {
                left: basis.dim(),
                right: v.dim(),
            });
        }
        Ok(PreProb {
            universe,
            basis,
            atomic,
        })
    }

    /// Rational atomic values over the basis `{1}`.
    pub fn rational(universe: Universe, atomic: &[crate::Rational]) -> Result<Self> {
        let basis = Basis::rational();
        let atomic = atomic
            .iter()
            .map(|q| basis.rational_value(q.clone()))
            .collect();
        Self::new(universe, basis, atomic)
    }

    /// The invariant valuation, identically zero.
    pub fn zero(universe: Universe, basis: Basis) -> Self {
        let atomic = (0..universe.atom_count()).map(|_| basis.zero()).collect();
        PreProb {
            universe,
            basis,
            atomic,
        }
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn atomic(&self) -> &[SemValue] {
        &self.atomic
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn eval(&self, s: Statement) -> Result<SemValue> {
        self.universe.check(s)?;
        Ok(self.eval_unchecked(s))
    }

    pub(crate) fn eval_unchecked(&self, s: Statement) -> SemValue {
        let mut acc = self.basis.zero();
        for i in s.atoms() {
            acc.add_assign(&self.atomic[i]).expect("dimensions checked at construction");
        }
        acc
    }

    pub fn top_value(&self) -> SemValue {
        self.eval_unchecked(self.universe.top())
    }

    /// True for the invariant valuation.
    pub fn is_zero(&self) -> bool {
        self.atomic.iter().all(SemValue::is_zero)
    }

    pub fn apply_gauge(&self, gauge: &GaugeMap) -> Result<PreProb> {
        let atomic = self
            .atomic
            .iter()
            .map(|v| gauge.apply(v))
            .collect::<Result<Vec<_>>>()?;
        Ok(PreProb {
            universe: self.universe.clone(),
            basis: self.basis.clone(),
            atomic,
        })
    }

    /// Rank over ℚ of the atomic values; the size of every semantic frame.
    pub fn semantic_dimension(&self) -> usize {
        q_rank(&self.atomic)
    }

    /// Same universe and basis, new atomic values.
    pub(crate) fn with_atomic(&self, atomic: Vec<SemValue>) -> PreProb {
        debug_assert_eq!(atomic.len(), self.atomic.len());
        PreProb {
            universe: self.universe.clone(),
            basis: self.basis.clone(),
            atomic,
        }
    }

    /// Exact sum of valuations on the same universe and basis.
    pub fn checked_add(&self, other: &PreProb) -> Result<PreProb> {
        if self.universe != other.universe {
            return Err(Error::WidthMismatch {
                expected: self.universe.atom_count(),
                found: other.universe.atom_count(),
            });
        }
        let atomic = self
            .atomic
            .iter()
            .zip(&other.atomic)
            .map(|(a, b)| a.checked_add(b))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.with_atomic(atomic))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::{int, rat};
    use alloc::vec;

    fn standard_q() -> PreProb {
        let u = Universe::product(&[2, 2], &["A", "B"]).unwrap();
        PreProb::rational(u, &[rat(3, 10), rat(-3, 10), rat(3, 5), rat(2, 5)]).unwrap()
    }

    #[test]
    fn marginals_of_the_breakdown_example() {
        let r = standard_q();
        let u = r.universe().clone();
        let q = |e: &str| r.eval(u.event(e).unwrap()).unwrap();
        assert!(q("A=0").is_zero());
        assert_eq!(q("B=0"), SemValue::rational(1, rat(9, 10)));
        assert_eq!(q("B=1"), SemValue::rational(1, rat(1, 10)));
        assert_eq!(q("A=1"), SemValue::rational(1, int(1)));
        assert!(r.eval(u.bottom()).unwrap().is_zero());
    }

    #[test]
    fn arity_and_basis_checked() {
        let u = Universe::letters(2).unwrap();
        assert!(matches!(
            PreProb::rational(u.clone(), &[int(1)]),
            Err(Error::ArityMismatch { expected: 2, found: 1 })
        ));
        assert!(matches!(
            PreProb::new(u, Basis::rational(), vec![SemValue::zero(2), SemValue::zero(2)]),
            Err(Error::BasisMismatch { .. })
        ));
    }

    #[test]
    fn width_checked_on_eval() {
        let r = standard_q();
        assert!(r.eval(Statement::top(3)).is_err());
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(standard_q().semantic_dimension(), 1);
        let z = PreProb::zero(Universe::letters(3).unwrap(), Basis::rational());
        assert_eq!(z.semantic_dimension(), 0);
        assert!(z.is_zero());
    }
}
