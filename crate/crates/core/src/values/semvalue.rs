use alloc::vec;
use alloc::vec::Vec;

use num_traits::Zero;

use super::rational::Rational;
use crate::error::{Error, Result};

/// A value in the declared ℚ-span: coefficient `j` multiplies basis symbol `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SemValue {
    coeffs: Vec<Rational>,
}

impl SemValue {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        SemValue { coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        SemValue {
            coeffs: vec![Rational::zero(); dim],
        }
    }

    /// The rational `q` embedded along the unit symbol.
    pub fn rational(dim: usize, q: Rational) -> Self {
        let mut v = Self::zero(dim);
        v.coeffs[0] = q;
        v
    }

    /// `q` times basis symbol `j`.
    pub fn along(dim: usize, j: usize, q: Rational) -> Self {
        let mut v = Self::zero(dim);
        v.coeffs[j] = q;
        v
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize) -> &Rational {
        &self.coeffs[j]
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// The rational this value equals, if it lies on the unit direction.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
        }
    }

    fn same_dim(&self, other: &SemValue) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::BasisMismatch {
                left: self.dim(),
                right: other.dim(),
            })
        }
    }

    pub fn checked_add(&self, other: &SemValue) -> Result<SemValue> {
        let mut out = self.clone();
        out.add_assign(other)?;
        Ok(out)
    }

    pub fn checked_sub(&self, other: &SemValue) -> Result<SemValue> {
        self.same_dim(other)?;
        Ok(SemValue {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add_assign(&mut self, other: &SemValue) -> Result<()> {
        self.same_dim(other)?;
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b;
        }
        Ok(())
    }

    pub fn neg(&self) -> SemValue {
        SemValue {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, q: &Rational) -> SemValue {
        SemValue {
            coeffs: self.coeffs.iter().map(|a| a * q).collect(),
        }
    }

    /// The rational `q` with `self = q · v`.
    ///
    /// This is the only division the calculus performs: in semantic
    /// dimension one all nonzero values are rationally proportional.
    pub fn ratio(&self, v: &SemValue) -> Result<Rational> {
        self.same_dim(v)?;
        let j = v
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::ZeroDivisor)?;
        let q = &self.coeffs[j] / &v.coeffs[j];
        let proportional = self
            .coeffs
            .iter()
            .zip(&v.coeffs)
            .all(|(a, b)| *a == &q * b);
        if proportional {
            Ok(q)
        } else {
            Err(Error::NotProportional)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::rational::{int, rat};

    fn sv(c: &[(i64, i64)]) -> SemValue {
        SemValue::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn rational_plus_irrational_parts() {
        // 1/2 - √2/10 and 1/2 + √2/10 over {1, √2}
        let a = sv(&[(1, 2), (-1, 10)]);
        let b = sv(&[(1, 2), (1, 10)]);
        assert_eq!(a.checked_add(&b).unwrap(), sv(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn negation_and_scaling() {
        let u = sv(&[(3, 7), (-2, 5)]);
        assert!(u.checked_add(&u.neg()).unwrap().is_zero());
        assert_eq!(sv(&[(3, 4), (0, 1)]).scale(&rat(2, 3)), sv(&[(1, 2), (0, 1)]));
    }

    #[test]
    fn dimension_mismatch() {
        let u = SemValue::zero(1);
        let v = SemValue::zero(2);
        assert_eq!(
            u.checked_add(&v),
            Err(Error::BasisMismatch { left: 1, right: 2 })
        );
        assert!(u.ratio(&v).is_err());
    }

    #[test]
    fn ratio_examples() {
        assert_eq!(
            sv(&[(3, 10), (0, 1)]).ratio(&sv(&[(9, 10), (0, 1)])).unwrap(),
            rat(1, 3)
        );
        assert_eq!(SemValue::zero(2).ratio(&sv(&[(0, 1), (5, 1)])).unwrap(), int(0));
        assert_eq!(
            sv(&[(0, 1), (1, 1)]).ratio(&sv(&[(1, 1), (0, 1)])),
            Err(Error::NotProportional)
        );
        assert_eq!(
            sv(&[(1, 1), (1, 1)]).ratio(&SemValue::zero(2)),
            Err(Error::ZeroDivisor)
        );
    }

    #[test]
    fn ratio_times_divisor_restores_value() {
        let v = sv(&[(2, 3), (-5, 7)]);
        let u = v.scale(&rat(-11, 13));
        let q = u.ratio(&v).unwrap();
        assert_eq!(v.scale(&q), u);
    }
}
