use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::preprob::PreProb;
use crate::error::{Error, Result};
use crate::lattice::{Statement, Universe};
use crate::values::{rank_of, solve, Basis, Rational, SemValue};

/// Largest universe, in statements, accepted by [`deduce_missing`].
pub const DEDUCTION_LIMIT: u64 = 1 << 12;

/// Values on some statements only. `⊥ ↦ 0` is always present.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialValuation {
    universe: Universe,
    basis: Basis,
    assignments: BTreeMap<Statement, SemValue>,
}

impl PartialValuation {
    pub fn new(universe: Universe, basis: Basis) -> Self {
        let mut assignments = BTreeMap::new();
        assignments.insert(universe.bottom(), basis.zero());
        PartialValuation {
            universe,
            basis,
            assignments,
        }
    }

    /// Assigns `value` to `s`, replacing any earlier value. A nonzero value
    /// on ⊥ is rejected.
    pub fn assign(&mut self, s: Statement, value: SemValue) -> Result<()> {
        self.universe.check(s)?;
        if value.dim() != self.basis.dim() {
            return Err(Error::BasisMismatch {
                left: self.basis.dim(),
                right: value.dim(),
            });
        }
        if s.is_bottom() && !value.is_zero() {
            return Err(Error::BottomNotZero);
        }
        self.assignments.insert(s, value);
        Ok(())
    }

    pub fn with(mut self, s: Statement, value: SemValue) -> Result<Self> {
        self.assign(s, value)?;
        Ok(self)
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn get(&self, s: Statement) -> Option<&SemValue> {
        self.assignments.get(&s)
    }

    pub fn len(&self) -> usize {
        self.assignments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignments.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Statement, &SemValue)> {
        self.assignments.iter().map(|(s, v)| (*s, v))
    }

    /// The restriction of a total valuation to the given statements.
    pub fn restrict(r: &PreProb, statements: &[Statement]) -> Result<Self> {
        let mut p = PartialValuation::new(r.universe().clone(), r.basis().clone());
        for &s in statements {
            p.assign(s, r.eval(s)?)?;
        }
        Ok(p)
    }

    fn system(&self) -> (Vec<Vec<Rational>>, Vec<Vec<Rational>>) {
        let n = self.universe.atom_count();
        let mut a = Vec::with_capacity(self.assignments.len());
        let mut b = Vec::with_capacity(self.assignments.len());
        for (s, v) in &self.assignments {
            a.push(indicator(*s, n));
            b.push(v.coeffs().to_vec());
        }
        (a, b)
    }

    /// One admissible extension, all free atomic unknowns set to zero, and
    /// the number of free unknowns.
    pub fn extend(&self) -> Result<(PreProb, usize)> {
        if self
            .assignments
            .get(&self.universe.bottom())
            .is_some_and(|v| !v.is_zero())
        {
            return Err(Error::BottomNotZero);
        }
        let (a, b) = self.system();
        let sol = solve(&a, &b, self.universe.atom_count()).ok_or(Error::Inconsistent)?;
        let atomic = sol.values.into_iter().map(SemValue::new).collect();
        let r = PreProb::new(self.universe.clone(), self.basis.clone(), atomic)?;
        Ok((r, sol.free))
    }

    /// True iff some pre-probability extends these assignments.
    pub fn is_consistent(&self) -> bool {
        self.extend().is_ok()
    }
}

fn indicator(s: Statement, n: usize) -> Vec<Rational> {
    (0..n)
        .map(|i| {
            if s.contains_atom(i) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

/// See [`PartialValuation::extend`].
pub fn extend_partial(p: &PartialValuation) -> Result<(PreProb, usize)> {
    p.extend()
}

/// The value additivity forces on the single unassigned non-⊥ statement of
/// a small universe.
pub fn deduce_missing(p: &PartialValuation) -> Result<(Statement, SemValue)> {
    let u = p.universe();
    if u.statement_count() > DEDUCTION_LIMIT {
        return Err(Error::EnumerationTooLarge {
            count: u.statement_count(),
        });
    }
    let mut missing = u.enumerate()?.filter(|s| p.get(*s).is_none());
    let target = match (missing.next(), missing.next()) {
        (Some(s), None) => s,
        _ => return Err(Error::IncompleteAssignment),
    };
    let (r, _) = p.extend()?;
    let (mut a, _) = p.system();
    let before = rank_of(&a);
    a.push(indicator(target, u.atom_count()));
    if rank_of(&a) != before {
        return Err(Error::Underdetermined);
    }
    Ok((target, r.eval(target)?))
}
