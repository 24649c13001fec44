use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::lattice::{Statement, Universe};
use crate::valuation::{PreProb, QuasiProb};
use crate::values::{q_rank, Basis, Rational, SemValue};

/// A pre-probability on the ideal below `top`, one value per ambient atom
/// under `top` in ascending index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPreProb {
    ambient: Universe,
    top: Statement,
    basis: Basis,
    values: Vec<SemValue>,
}

impl LocalPreProb {
    pub fn new(ambient: Universe, top: Statement, basis: Basis, values: Vec<SemValue>) -> Result<Self> {
        ambient.check(top)?;
        if top.is_bottom() {
            return Err(Error::BottomConditioning);
        }
        let n = top.level() as usize;
        if values.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: values.len(),
            });
        }
        if let Some(v) = values.iter().find(|v| v.dim() != basis.dim()) {
            return Err(Error::BasisMismatch {
                left: basis.dim(),
                right: v.dim(),
            });
        }
        Ok(LocalPreProb {
            ambient,
            top,
            basis,
            values,
        })
    }

    pub fn ambient(&self) -> &Universe {
        &self.ambient
    }

    pub fn top(&self) -> Statement {
        self.top
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    /// Values aligned with `self.top().atoms()`.
    pub fn values(&self) -> &[SemValue] {
        &self.values
    }

    /// Value of a statement of the ideal.
    pub fn eval(&self, s: Statement) -> Result<SemValue> {
        self.ambient.check(s)?;
        if !s.below(self.top) {
            return Err(Error::NotBelow);
        }
        let mut acc = self.basis.zero();
        for (i, v) in self.top.atoms().zip(&self.values) {
            if s.contains_atom(i) {
                acc.add_assign(v)?;
            }
        }
        Ok(acc)
    }

    /// `R(s | t) = R_t([s]_t)` for any ambient statement.
    pub fn conditional(&self, s: Statement) -> Result<SemValue> {
        self.ambient.check(s)?;
        self.eval(s.and(self.top))
    }

    pub fn top_value(&self) -> SemValue {
        self.eval(self.top).expect("top is in its own ideal")
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(SemValue::is_zero)
    }

    pub fn semantic_dimension(&self) -> usize {
        q_rank(&self.values)
    }

    pub(crate) fn with_values(&self, values: Vec<SemValue>) -> Self {
        LocalPreProb {
            values,
            ..self.clone()
        }
    }

    /// Greedy frame over the atoms of the ideal.
    pub fn canonical_frame(&self) -> Vec<Statement> {
        let mut set = crate::values::IndependentSet::new();
        self.top
            .atoms()
            .zip(&self.values)
            .filter(|(_, v)| set.insert(v.coeffs()))
            .map(|(i, _)| self.ambient.atom(i))
            .collect()
    }
}

/// A quasi-probability on the ideal below `top`: rational values that sum
/// to 1, or all vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalQuasi {
    ambient: Universe,
    top: Statement,
    values: Vec<Rational>,
}

impl LocalQuasi {
    pub fn new(ambient: Universe, top: Statement, values: Vec<Rational>) -> Result<Self> {
        ambient.check(top)?;
        if top.is_bottom() {
            return Err(Error::BottomConditioning);
        }
        let n = top.level() as usize;
        if values.len() != n {
            return Err(Error::ArityMismatch {
                expected: n,
                found: values.len(),
            });
        }
        let sum: Rational = values.iter().sum();
        if sum != crate::values::one() && !values.iter().all(Zero::is_zero) {
            return Err(Error::NotNormalised);
        }
        Ok(LocalQuasi {
            ambient,
            top,
            values,
        })
    }

    fn zero(ambient: Universe, top: Statement) -> Self {
        let values = alloc::vec![Rational::zero(); top.level() as usize];
        LocalQuasi {
            ambient,
            top,
            values,
        }
    }

    pub fn ambient(&self) -> &Universe {
        &self.ambient
    }

    pub fn top(&self) -> Statement {
        self.top
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    pub fn eval(&self, s: Statement) -> Result<Rational> {
        self.ambient.check(s)?;
        if !s.below(self.top) {
            return Err(Error::NotBelow);
        }
        Ok(self
            .top
            .atoms()
            .zip(&self.values)
            .filter(|(i, _)| s.contains_atom(*i))
            .map(|(_, q)| q)
            .sum())
    }

    /// `Q(s | t) = Q_t([s]_t)`.
    pub fn conditional(&self, s: Statement) -> Result<Rational> {
        self.ambient.check(s)?;
        self.eval(s.and(self.top))
    }
}

/// Restriction of `r` to the ideal below `t`. Never fails for `t ≠ ⊥`.
pub fn relative_preprob(r: &PreProb, t: Statement) -> Result<LocalPreProb> {
    r.universe().check(t)?;
    if t.is_bottom() {
        return Err(Error::BottomConditioning);
    }
    let values = t.atoms().map(|i| r.atomic()[i].clone()).collect();
    LocalPreProb::new(r.universe().clone(), t, r.basis().clone(), values)
}

/// `R(s | t)`.
pub fn conditional_preprob(local: &LocalPreProb, s: Statement) -> Result<SemValue> {
    local.conditional(s)
}

/// `Q_t(s) = Q(s)/Q(t)` on the ideal below `t`. When `Q(t) = 0` the
/// restriction is either identically zero, returned as the zero local
/// quasi-probability, or not representable at all.
pub fn relative_quasi(q: &QuasiProb, t: Statement) -> Result<LocalQuasi> {
    q.universe().check(t)?;
    if t.is_bottom() {
        return Err(Error::BottomConditioning);
    }
    let qt = q.eval(t)?;
    let below: Vec<Rational> = t.atoms().map(|i| q.atomic()[i].clone()).collect();
    if qt.is_zero() {
        if below.iter().all(Zero::is_zero) {
            return Ok(LocalQuasi::zero(q.universe().clone(), t));
        }
        return Err(Error::RelativisationUnstable);
    }
    let values = below.into_iter().map(|x| x / &qt).collect();
    LocalQuasi::new(q.universe().clone(), t, values)
}

/// `Q(s | t)`.
pub fn conditional_quasi(q: &QuasiProb, s: Statement, t: Statement) -> Result<Rational> {
    q.universe().check(s)?;
    relative_quasi(q, t)?.conditional(s)
}

/// Relative probability at `t`; the zero local when `P(t) = 0`.
pub fn relative_probability(p: &QuasiProb, t: Statement) -> Result<LocalQuasi> {
    if !p.is_probability() {
        return Err(Error::NotAProbability);
    }
    let local = relative_quasi(p, t)?;
    debug_assert!(local.values().iter().all(|x| !x.is_negative()));
    Ok(local)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::{int, rat};
    use alloc::vec;

    fn standard_q() -> QuasiProb {
        let u = Universe::product(&[2, 2], &["A", "B"]).unwrap();
        QuasiProb::new(u, vec![rat(3, 10), rat(-3, 10), rat(3, 5), rat(2, 5)]).unwrap()
    }

    fn ev(q: &QuasiProb, e: &str) -> Statement {
        q.universe().event(e).unwrap()
    }

    #[test]
    fn relative_preprob_examples() {
        let q = standard_q();
        let r = q.to_preprob();
        let local = relative_preprob(&r, ev(&q, "A=0")).unwrap();
        let unit = |x| SemValue::rational(1, x);
        assert_eq!(local.values(), [unit(rat(3, 10)), unit(rat(-3, 10))]);
        assert!(local.top_value().is_zero());
        assert_eq!(conditional_preprob(&local, ev(&q, "B=0")).unwrap(), unit(rat(3, 10)));
        assert_eq!(conditional_preprob(&local, ev(&q, "A=1")).unwrap(), unit(int(0)));
        assert_eq!(conditional_preprob(&local, q.universe().top()).unwrap(), local.top_value());

        let whole = relative_preprob(&r, r.universe().top()).unwrap();
        assert_eq!(whole.values(), r.atomic());
        assert_eq!(relative_preprob(&r, r.universe().bottom()), Err(Error::BottomConditioning));

        let z = PreProb::zero(q.universe().clone(), Basis::rational());
        assert!(relative_preprob(&z, ev(&q, "B=1")).unwrap().is_zero());
    }

    #[test]
    fn relative_quasi_examples() {
        let q = standard_q();
        let local = relative_quasi(&q, ev(&q, "B=0")).unwrap();
        assert_eq!(local.values(), [rat(1, 3), rat(2, 3)]);
        assert_eq!(relative_quasi(&q, ev(&q, "A=0")), Err(Error::RelativisationUnstable));
        let whole = relative_quasi(&q, q.universe().top()).unwrap();
        assert_eq!(whole.values(), q.atomic());
    }

    #[test]
    fn conditional_quasi_examples() {
        let q = standard_q();
        let c = |s, t| conditional_quasi(&q, ev(&q, s), ev(&q, t)).unwrap();
        assert_eq!(c("A=0", "B=0"), rat(1, 3));
        assert_eq!(c("A=1", "B=0"), rat(2, 3));
        assert_eq!(c("B=0", "A=1"), rat(3, 5));
        assert_eq!(c("B=1", "A=1"), rat(2, 5));
        let top = q.universe().top();
        for s in q.universe().enumerate().unwrap() {
            assert_eq!(conditional_quasi(&q, s, top).unwrap(), q.eval(s).unwrap());
            assert_eq!(conditional_quasi(&q, q.universe().bottom(), s.or(ev(&q, "B=0"))).unwrap(), int(0));
        }
    }

    #[test]
    fn invariant_restriction_is_the_zero_local() {
        let u = Universe::product(&[2, 2], &["A", "B"]).unwrap();
        let q = QuasiProb::new(u.clone(), vec![rat(1, 4), rat(3, 4), int(0), int(0)]).unwrap();
        let local = relative_quasi(&q, u.event("A=1").unwrap()).unwrap();
        assert!(local.is_zero());
        assert_eq!(local.conditional(u.event("B=1").unwrap()).unwrap(), int(0));
    }

    #[test]
    fn relative_probability_examples() {
        let u = Universe::letters(4).unwrap();
        let p = QuasiProb::new(u.clone(), vec![rat(1, 2), rat(1, 4), rat(1, 4), int(0)]).unwrap();
        let ab = u.from_labels(&["a", "b"]).unwrap();
        assert_eq!(relative_probability(&p, ab).unwrap().values(), [rat(2, 3), rat(1, 3)]);
        assert!(relative_probability(&p, u.atom(3)).unwrap().is_zero());
        assert_eq!(relative_probability(&p, u.top()).unwrap().values(), p.atomic());
        assert_eq!(relative_probability(&standard_q(), ab), Err(Error::NotAProbability));
    }

    #[test]
    fn local_constructors_validate() {
        let u = Universe::letters(3).unwrap();
        let t = u.statement(0b101).unwrap();
        assert!(LocalQuasi::new(u.clone(), t, vec![rat(1, 2), rat(1, 2)]).is_ok());
        assert_eq!(
            LocalQuasi::new(u.clone(), t, vec![rat(1, 2), rat(1, 3)]),
            Err(Error::NotNormalised)
        );
        assert!(LocalPreProb::new(u.clone(), t, Basis::rational(), vec![]).is_err());
        let l = LocalPreProb::new(u.clone(), t, Basis::rational(), vec![SemValue::rational(1, int(1)); 2]).unwrap();
        assert_eq!(l.eval(u.atom(1)), Err(Error::NotBelow));
        assert_eq!(l.conditional(u.top()).unwrap(), SemValue::rational(1, int(2)));
    }
}
