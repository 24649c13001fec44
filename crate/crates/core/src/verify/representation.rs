use alloc::format;
use alloc::vec::Vec;

use super::report::{CheckReport, Counterexample};
use crate::error::{Error, Result};
use crate::lattice::Statement;
use crate::valuation::PreProb;
use crate::values::SemValue;

const NAME: &str = "representation";

/// A finite bijection `x ↦ φ(x)` from universal values to additive values
/// whose range contains 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeTable {
    pairs: Vec<(SemValue, SemValue)>,
}

impl GaugeTable {
    pub fn new(pairs: Vec<(SemValue, SemValue)>) -> Result<Self> {
        let dim = pairs.first().map(|(x, _)| x.dim());
        for (x, y) in &pairs {
            for v in [x, y] {
                if Some(v.dim()) != dim {
                    return Err(Error::BasisMismatch {
                        left: dim.unwrap_or(0),
                        right: v.dim(),
                    });
                }
            }
        }
        for (i, (x, y)) in pairs.iter().enumerate() {
            if pairs[..i].iter().any(|(x2, y2)| x2 == x || y2 == y) {
                return Err(Error::TableNotInjective);
            }
        }
        if !pairs.iter().any(|(_, y)| y.is_zero()) {
            return Err(Error::TableIncomplete);
        }
        Ok(GaugeTable { pairs })
    }

    /// `φ = id` on the given values, which must include 0.
    pub fn identity(values: &[SemValue]) -> Result<Self> {
        Self::new(values.iter().map(|v| (v.clone(), v.clone())).collect())
    }

    pub fn pairs(&self) -> &[(SemValue, SemValue)] {
        &self.pairs
    }

    pub fn forward(&self, x: &SemValue) -> Option<&SemValue> {
        self.pairs.iter().find(|(a, _)| a == x).map(|(_, b)| b)
    }

    pub fn backward(&self, y: &SemValue) -> Option<&SemValue> {
        self.pairs.iter().find(|(_, b)| b == y).map(|(a, _)| a)
    }

    /// `φ⁻¹(0)`.
    pub fn neutral(&self) -> &SemValue {
        self.pairs
            .iter()
            .find(|(_, y)| y.is_zero())
            .map(|(x, _)| x)
            .expect("range contains 0")
    }

    /// `G(x, y) = φ⁻¹(φ(x) + φ(y))` where defined on the table.
    pub fn combine(&self, x: &SemValue, y: &SemValue) -> Option<SemValue> {
        let sum = self.forward(x)?.checked_add(self.forward(y)?).ok()?;
        self.backward(&sum).cloned()
    }

    fn domain(&self) -> impl Iterator<Item = &SemValue> {
        self.pairs.iter().map(|(x, _)| x)
    }
}

/// With `V = φ⁻¹ ∘ R` and `G` as in [`GaugeTable::combine`]: `V(s ∨ t) =
/// G(V(s), V(t))` on disjoint pairs, and `G` is commutative, associative,
/// cancellative with neutral element `φ⁻¹(0)` on the table's domain.
pub fn check_representation(table: &GaugeTable, r: &PreProb) -> Result<CheckReport> {
    let statements: Vec<Statement> = r.universe().enumerate()?.collect();
    let mut v = Vec::with_capacity(statements.len());
    for &s in &statements {
        let value = r.eval(s)?;
        if value.dim() != table.neutral().dim() {
            return Err(Error::BasisMismatch {
                left: table.neutral().dim(),
                right: value.dim(),
            });
        }
        v.push(table.backward(&value).cloned().ok_or(Error::TableIncomplete)?);
    }
    let at = |s: Statement| &v[s.bits() as usize];
    let mut cases = 0u64;
    for &s in &statements {
        for &t in &statements {
            if s.bits() & t.bits() != 0 {
                continue;
            }
            cases += 1;
            if table.combine(at(s), at(t)).as_ref() != Some(at(s.or(t))) {
                return Ok(CheckReport::fail(
                    NAME,
                    cases,
                    Counterexample::Statements(alloc::vec![s, t]),
                    format!("V({}) differs from G(V(s), V(t))", r.universe().display(s.or(t))),
                ));
            }
        }
    }

    let phi = table.neutral();
    let domain: Vec<&SemValue> = table.domain().collect();
    let fail = |cases, values: &[&SemValue], what: &str| {
        CheckReport::fail(
            NAME,
            cases,
            Counterexample::Values(values.iter().map(|x| (*x).clone()).collect()),
            what.into(),
        )
    };
    for &x in &domain {
        cases += 1;
        if table.combine(x, phi).as_ref() != Some(x) {
            return Ok(fail(cases, &[x], "neutral element"));
        }
        for &y in &domain {
            let xy = table.combine(x, y);
            cases += 1;
            if xy != table.combine(y, x) {
                return Ok(fail(cases, &[x, y], "commutativity"));
            }
            for &z in &domain {
                let xz = table.combine(x, z);
                cases += 1;
                if xy.is_some() && xy == xz && y != z {
                    return Ok(fail(cases, &[x, y, z], "cancellativity"));
                }
                let left = xy.as_ref().and_then(|xy| table.combine(xy, z));
                let right = table.combine(y, z).and_then(|yz| table.combine(x, &yz));
                if left.is_some() && right.is_some() && left != right {
                    return Ok(fail(cases, &[x, y, z], "associativity"));
                }
            }
        }
    }
    Ok(CheckReport::pass(NAME, cases).with_note("monoid laws and cancellativity sampled, not universal"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Universe;
    use crate::values::rat;
    use alloc::vec;

    fn q(n: i64, d: i64) -> SemValue {
        SemValue::rational(1, rat(n, d))
    }

    fn uniform4() -> PreProb {
        PreProb::rational(Universe::letters(4).unwrap(), &[rat(1, 4), rat(1, 4), rat(1, 4), rat(1, 4)]).unwrap()
    }

    #[test]
    fn identity_table_is_addition() {
        let values: Vec<SemValue> = (0..=4).map(|k| q(k, 4)).collect();
        let table = GaugeTable::identity(&values).unwrap();
        assert_eq!(table.combine(&q(1, 4), &q(1, 2)), Some(q(3, 4)));
        assert_eq!(table.combine(&q(3, 4), &q(1, 2)), None);
        let report = check_representation(&table, &uniform4()).unwrap();
        assert!(report.passed(), "{:?}", report.note);
        assert!(report.cases_run > 81);
    }

    #[test]
    fn transported_addition_passes() {
        // universal value ↦ additive value, a permutation of {0, 1/4, 1/2, 3/4, 1}
        let table = GaugeTable::new(vec![
            (q(1, 2), q(0, 1)),
            (q(0, 1), q(1, 4)),
            (q(1, 1), q(1, 2)),
            (q(1, 4), q(3, 4)),
            (q(3, 4), q(1, 1)),
        ])
        .unwrap();
        assert_eq!(table.neutral(), &q(1, 2));
        assert_eq!(table.combine(&q(0, 1), &q(0, 1)), Some(q(1, 1)));
        assert!(check_representation(&table, &uniform4()).unwrap().passed());
    }

    #[test]
    fn table_errors() {
        let r = uniform4();
        let small = GaugeTable::identity(&[q(0, 1), q(1, 4)]).unwrap();
        assert_eq!(check_representation(&small, &r), Err(Error::TableIncomplete));
        assert_eq!(
            GaugeTable::new(vec![(q(0, 1), q(0, 1)), (q(1, 1), q(0, 1))]),
            Err(Error::TableNotInjective)
        );
        assert_eq!(
            GaugeTable::identity(&[q(1, 1)]),
            Err(Error::TableIncomplete)
        );
        assert!(GaugeTable::new(vec![(q(0, 1), SemValue::zero(2))]).is_err());
    }
}
