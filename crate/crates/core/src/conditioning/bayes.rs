use num_traits::Zero;

use super::local::{conditional_quasi, LocalPreProb};
use crate::error::{Error, Result};
use crate::lattice::Statement;
use crate::valuation::QuasiProb;
use crate::values::{Rational, SemValue};

/// `Q(tB | tA) = Q(tA | tB) Q(tB) / Q(tA)`.
pub fn bayes_stable(q: &QuasiProb, ta: Statement, tb: Statement) -> Result<Rational> {
    let qa = q.eval(ta)?;
    let qb = q.eval(tb)?;
    if qa.is_zero() || qb.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    let out = conditional_quasi(q, ta, tb)? * qb / qa;
    Ok(out)
}

/// `R(B | A) = Q(A | B) Q(B) R(s̃ | A) / Q(s̃)` for a top-zero local
/// pre-probability on `A` and an anchor `s̃` of nonzero ambient value.
pub fn bayes_mixed(
    local_a: &LocalPreProb,
    anchor: Statement,
    anchor_ambient: &Rational,
    cond_other: &Rational,
    weight_other: &Rational,
) -> Result<SemValue> {
    let reference = local_a.eval(anchor)?;
    if reference.is_zero() || anchor_ambient.is_zero() {
        return Err(Error::ZeroAnchor);
    }
    Ok(reference.scale(&(cond_other * weight_other / anchor_ambient)))
}

/// A conditional on an ideal carrying the invariant valuation.
pub fn bayes_invariant() -> Rational {
    Rational::zero()
}

/// Bayes for probabilities; a zero-probability condition yields 0.
pub fn bayes_classical(p: &QuasiProb, ta: Statement, tb: Statement) -> Result<Rational> {
    if !p.is_probability() {
        return Err(Error::NotAProbability);
    }
    if p.eval(ta)?.is_zero() || p.eval(tb)?.is_zero() {
        return Ok(Rational::zero());
    }
    bayes_stable(p, ta, tb)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditioning::{relative_preprob, synchronize, FrameAssignment};
    use crate::lattice::Universe;
    use crate::values::{int, rat, Basis};
    use alloc::vec;

    fn ab(atomic: [Rational; 4]) -> QuasiProb {
        let u = Universe::product(&[2, 2], &["A", "B"]).unwrap();
        QuasiProb::new(u, atomic.to_vec()).unwrap()
    }

    #[test]
    fn stable_examples() {
        let q = ab([rat(3, 10), rat(-3, 10), rat(3, 5), rat(2, 5)]);
        let u = q.universe();
        let (b0, a1) = (u.event("B=0").unwrap(), u.event("A=1").unwrap());
        assert_eq!(bayes_stable(&q, b0, a1).unwrap(), rat(2, 3));
        assert_eq!(bayes_stable(&q, b0, b0).unwrap(), int(1));
        let b1 = u.event("B=1").unwrap();
        assert_eq!(bayes_stable(&q, b0, b1).unwrap(), int(0));
        assert_eq!(bayes_stable(&q, u.event("A=0").unwrap(), b0), Err(Error::ZeroDenominator));
    }

    #[test]
    fn mixed_matches_direct_synchronisation() {
        // Q(A=0) = 0 with Q(a) = 3/10
        let q = ab([rat(3, 10), rat(-3, 10), rat(3, 5), rat(2, 5)]);
        let u = q.universe();
        let a0 = u.event("A=0").unwrap();
        let b1 = u.event("B=1").unwrap();
        let anchor = u.atom(0);
        // a locally gauged view of the cell A=0
        let local = LocalPreProb::new(
            u.clone(),
            a0,
            Basis::rational(),
            vec![SemValue::rational(1, int(1)), SemValue::rational(1, int(-1))],
        )
        .unwrap();
        let cond_other = conditional_quasi(&q, a0, b1).unwrap();
        let weight = q.eval(b1).unwrap();
        let out = bayes_mixed(&local, anchor, &q.eval(anchor).unwrap(), &cond_other, &weight).unwrap();

        // the formula lands in the local gauge
        assert_eq!(out, local.conditional(b1).unwrap());
        assert_eq!(out, SemValue::rational(1, int(-1)));

        // synchronising through the anchor recovers the ambient value Q(A=0|B=1)Q(B=1)
        let frame = FrameAssignment::new(vec![(anchor, SemValue::rational(1, q.eval(anchor).unwrap()))]);
        let synced = synchronize(&local, &frame).unwrap();
        let ambient = relative_preprob(&q.to_preprob(), a0).unwrap();
        assert_eq!(synced, ambient);
        assert_eq!(synced.conditional(b1).unwrap(), SemValue::rational(1, &cond_other * &weight));
    }

    #[test]
    fn mixed_edge_cases() {
        let u = Universe::letters(4).unwrap();
        let t = u.statement(0b0011).unwrap();
        let local = LocalPreProb::new(
            u.clone(),
            t,
            Basis::rational(),
            vec![SemValue::rational(1, rat(2, 3)), SemValue::rational(1, rat(-2, 3))],
        )
        .unwrap();
        let out = bayes_mixed(&local, u.atom(0), &rat(1, 5), &int(0), &rat(1, 2)).unwrap();
        assert!(out.is_zero());
        // anchoring at the target itself returns cond·weight
        let out = bayes_mixed(&local, u.atom(1), &rat(-1, 5), &rat(1, 2), &rat(-2, 5)).unwrap();
        assert_eq!(out.ratio(&local.eval(u.atom(1)).unwrap()).unwrap() * rat(-1, 5), rat(-1, 5));
        assert_eq!(
            bayes_mixed(&local, u.atom(0), &int(0), &int(1), &int(1)),
            Err(Error::ZeroAnchor)
        );
        assert_eq!(
            bayes_mixed(&local, u.atom(2), &int(1), &int(1), &int(1)),
            Err(Error::NotBelow)
        );
        assert_eq!(bayes_invariant(), int(0));
    }

    #[test]
    fn classical() {
        let p = ab([rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)]);
        let u = p.universe();
        let (a0, b1) = (u.event("A=0").unwrap(), u.event("B=1").unwrap());
        assert_eq!(bayes_classical(&p, a0, b1).unwrap(), rat(1, 2));
        let skew = ab([rat(1, 2), rat(1, 2), int(0), int(0)]);
        assert_eq!(bayes_classical(&skew, u.event("A=1").unwrap(), b1).unwrap(), int(0));
    }
}
