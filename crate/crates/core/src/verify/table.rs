use alloc::format;
use alloc::vec::Vec;

use rand::Rng;

use super::random;
use super::report::{CheckReport, Counterexample};
use crate::error::{Error, Result};
use crate::lattice::{Statement, Universe};
use crate::valuation::PreProb;
use crate::values::{int, Basis, SemValue};

/// Largest universe checked over all statement pairs.
pub const EXHAUSTIVE_ATOMS: usize = 5;
const SAMPLED_PAIRS: u64 = 4096;

/// An explicit value for every statement, indexed by its bits. Unlike a
/// [`PreProb`] it need not be additive, so the checks below can fail.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StatementTable {
    universe: Universe,
    basis: Basis,
    values: Vec<SemValue>,
}

impl StatementTable {
    pub fn from_preprob(r: &PreProb) -> Result<Self> {
        let values = r
            .universe()
            .enumerate()?
            .map(|s| r.eval(s))
            .collect::<Result<Vec<_>>>()?;
        Ok(StatementTable {
            universe: r.universe().clone(),
            basis: r.basis().clone(),
            values,
        })
    }

    pub fn universe(&self) -> &Universe {
        &self.universe
    }

    pub fn get(&self, s: Statement) -> &SemValue {
        &self.values[s.bits() as usize]
    }

    /// Overwrites one entry.
    pub fn set(&mut self, s: Statement, v: SemValue) -> Result<()> {
        self.universe.check(s)?;
        if v.dim() != self.basis.dim() {
            return Err(Error::BasisMismatch {
                left: self.basis.dim(),
                right: v.dim(),
            });
        }
        self.values[s.bits() as usize] = v;
        Ok(())
    }

    fn show(&self, s: Statement) -> alloc::string::String {
        format!("{} = {}", self.universe.display(s), self.basis.format_value(self.get(s)))
    }

    fn additive_at(&self, s: Statement, t: Statement) -> bool {
        let sum = self.get(s).checked_add(self.get(t)).expect("one basis");
        *self.get(s.or(t)) == sum
    }

    fn negation_at(&self, s: Statement) -> bool {
        let top = self.get(self.universe.top());
        *self.get(s.complement()) == top.checked_sub(self.get(s)).expect("one basis")
    }

    fn constant_atoms(&self) -> Option<&SemValue> {
        let first = self.get(self.universe.atom(0));
        (1..self.universe.atom_count())
            .all(|i| self.get(self.universe.atom(i)) == first)
            .then_some(first)
    }

    fn level_at(&self, s: Statement, x: &SemValue) -> bool {
        *self.get(s) == x.scale(&int(s.level() as i64))
    }

    /// `R(⊥) = 0` and `R(s ∨ t) = R(s) + R(t)` for disjoint `s, t`; all
    /// pairs up to five atoms, a seeded sample above.
    pub fn check_additivity(&self) -> CheckReport {
        const NAME: &str = "additivity";
        let bottom = self.universe.bottom();
        if !self.get(bottom).is_zero() {
            return CheckReport::fail(
                NAME,
                1,
                Counterexample::Statements(alloc::vec![bottom]),
                self.show(bottom),
            );
        }
        let mut cases = 1u64;
        let mut violation = None;
        let mut visit = |s: Statement, t: Statement| {
            cases += 1;
            if violation.is_none() && !self.additive_at(s, t) {
                violation = Some((s, t));
            }
        };
        if self.universe.atom_count() <= EXHAUSTIVE_ATOMS {
            let top = self.universe.top().bits();
            for s in 0..=top {
                // every t inside the complement of s
                let rest = top & !s;
                let mut t = rest;
                loop {
                    visit(Statement::from_raw(self.universe.atom_count(), s), Statement::from_raw(self.universe.atom_count(), t));
                    if t == 0 {
                        break;
                    }
                    t = (t - 1) & rest;
                }
            }
        } else {
            let mut rng = random::rng(0);
            let top = self.universe.top().bits();
            for _ in 0..SAMPLED_PAIRS {
                let s = rng.random_range(0..=top);
                let t = rng.random_range(0..=top) & !s;
                let w = self.universe.atom_count();
                visit(Statement::from_raw(w, s), Statement::from_raw(w, t));
            }
        }
        match violation {
            None => CheckReport::pass(NAME, cases),
            Some((s, t)) => CheckReport::fail(
                NAME,
                cases,
                Counterexample::Statements(alloc::vec![s, t]),
                format!("{}; {}; but {}", self.show(s), self.show(t), self.show(s.or(t))),
            ),
        }
    }

    /// `R(¬s) = R(⊤) − R(s)` for every statement.
    pub fn check_negation(&self) -> CheckReport {
        const NAME: &str = "negation";
        let mut cases = 0;
        for s in self.universe.enumerate().expect("table exists") {
            cases += 1;
            if !self.negation_at(s) {
                return CheckReport::fail(
                    NAME,
                    cases,
                    Counterexample::Statements(alloc::vec![s]),
                    format!("{}; {}; {}", self.show(s), self.show(s.complement()), self.show(self.universe.top())),
                );
            }
        }
        CheckReport::pass(NAME, cases)
    }

    /// With all atoms equal to `x`, every statement of level `k` is `k·x`.
    /// Passes with no cases when the atoms differ.
    pub fn check_levels(&self) -> CheckReport {
        const NAME: &str = "level-constancy";
        let Some(x) = self.constant_atoms().cloned() else {
            return CheckReport::pass(NAME, 0).with_note("atomic values differ; not applicable");
        };
        let mut cases = 0;
        for s in self.universe.enumerate().expect("table exists") {
            cases += 1;
            if !self.level_at(s, &x) {
                return CheckReport::fail(
                    NAME,
                    cases,
                    Counterexample::Statements(alloc::vec![s]),
                    format!("{} at level {}", self.show(s), s.level()),
                );
            }
        }
        CheckReport::pass(NAME, cases)
    }

    /// Re-runs the failing case of a report produced by one of the checks
    /// above; true iff the violation is still present.
    pub fn replay(&self, report: &CheckReport) -> bool {
        let Some(Counterexample::Statements(ss)) = &report.counterexample else {
            return false;
        };
        match (report.name.as_str(), ss.as_slice()) {
            ("additivity", [b]) => b.is_bottom() && !self.get(*b).is_zero(),
            ("additivity", [s, t]) => !self.additive_at(*s, *t),
            ("negation", [s]) => !self.negation_at(*s),
            ("level-constancy", [s]) => self
                .constant_atoms()
                .is_some_and(|x| !self.level_at(*s, x)),
            _ => false,
        }
    }
}

pub fn check_additivity(r: &PreProb) -> Result<CheckReport> {
    Ok(StatementTable::from_preprob(r)?.check_additivity())
}

pub fn check_negation(r: &PreProb) -> Result<CheckReport> {
    Ok(StatementTable::from_preprob(r)?.check_negation())
}

pub fn check_levels(r: &PreProb) -> Result<CheckReport> {
    Ok(StatementTable::from_preprob(r)?.check_levels())
}
