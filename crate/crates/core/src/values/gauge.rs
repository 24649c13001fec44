use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::linalg::{inverse, rank_of, Matrix};
use super::rational::Rational;
use super::semvalue::SemValue;
use crate::error::{Error, Result};

/// An invertible rational matrix acting on value coefficients: a
/// constructive additive bijection of the declared ℚ-span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GaugeMap {
    matrix: Matrix,
}

impl GaugeMap {
    /// Rows of the matrix; `apply` computes `matrix · coeffs`.
    pub fn new(matrix: Vec<Vec<Rational>>) -> Result<Self> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(Error::NotSquare);
        }
        if rank_of(&matrix) != n {
            return Err(Error::SingularMatrix);
        }
        Ok(GaugeMap { matrix })
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, Rational::one()).expect("1 is nonzero")
    }

    /// `diag(c, …, c)`: the only gauges surviving a holomorphic restriction.
    pub fn scalar(dim: usize, c: Rational) -> Result<Self> {
        if c.is_zero() {
            return Err(Error::ZeroScalar);
        }
        Self::diagonal((0..dim).map(|_| c.clone()).collect())
    }

    pub fn diagonal(entries: Vec<Rational>) -> Result<Self> {
        let n = entries.len();
        let mut m = alloc::vec![alloc::vec![Rational::zero(); n]; n];
        for (i, e) in entries.into_iter().enumerate() {
            m[i][i] = e;
        }
        Self::new(m)
    }

    pub fn dim(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &[Vec<Rational>] {
        &self.matrix
    }

    pub fn apply(&self, v: &SemValue) -> Result<SemValue> {
        if v.dim() != self.dim() {
            return Err(Error::BasisMismatch {
                left: self.dim(),
                right: v.dim(),
            });
        }
        Ok(SemValue::new(
            self.matrix
                .iter()
                .map(|row| {
                    row.iter()
                        .zip(v.coeffs())
                        .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                        .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
                })
                .collect(),
        ))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &GaugeMap) -> Result<GaugeMap> {
        if other.dim() != self.dim() {
            return Err(Error::BasisMismatch {
                left: self.dim(),
                right: other.dim(),
            });
        }
        let n = self.dim();
        let m = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(Rational::zero(), |acc, k| {
                            acc + &self.matrix[i][k] * &other.matrix[k][j]
                        })
                    })
                    .collect()
            })
            .collect();
        Ok(GaugeMap { matrix: m })
    }

    pub fn inverse(&self) -> GaugeMap {
        GaugeMap {
            matrix: inverse(&self.matrix).expect("gauge maps are invertible by construction"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::values::rational::{int, rat};
    use alloc::vec;

    fn sv(c: &[(i64, i64)]) -> SemValue {
        SemValue::new(c.iter().map(|&(n, d)| rat(n, d)).collect())
    }

    #[test]
    fn rescale_irrational_direction() {
        let a = GaugeMap::diagonal(vec![int(1), int(2)]).unwrap();
        assert_eq!(
            a.apply(&sv(&[(1, 2), (-1, 10)])).unwrap(),
            sv(&[(1, 2), (-1, 5)])
        );
    }

    #[test]
    fn identity_and_inverse() {
        let v = sv(&[(3, 7), (-1, 9)]);
        assert_eq!(GaugeMap::identity(2).apply(&v).unwrap(), v);
        let a = GaugeMap::new(vec![vec![int(2), int(1)], vec![int(1), int(1)]]).unwrap();
        let back = a.inverse().apply(&a.apply(&v).unwrap()).unwrap();
        assert_eq!(back, v);
        assert_eq!(a.compose(&a.inverse()).unwrap(), GaugeMap::identity(2));
    }

    #[test]
    fn multiplication_by_sqrt2_as_matrix() {
        // √2 · (x + y√2) = 2y + x√2
        let m = GaugeMap::new(vec![vec![int(0), int(2)], vec![int(1), int(0)]]).unwrap();
        assert_eq!(m.apply(&sv(&[(1, 1), (0, 1)])).unwrap(), sv(&[(0, 1), (1, 1)]));
        assert_eq!(m.apply(&sv(&[(0, 1), (1, 1)])).unwrap(), sv(&[(2, 1), (0, 1)]));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            GaugeMap::new(vec![vec![int(1), int(1)], vec![int(2), int(2)]]),
            Err(Error::SingularMatrix)
        );
        assert_eq!(GaugeMap::new(vec![vec![int(1), int(1)]]), Err(Error::NotSquare));
        assert_eq!(GaugeMap::scalar(2, int(0)), Err(Error::ZeroScalar));
        assert!(GaugeMap::identity(2).apply(&SemValue::zero(3)).is_err());
    }

    #[test]
    fn scalar_gauges() {
        assert_eq!(GaugeMap::scalar(3, int(1)).unwrap(), GaugeMap::identity(3));
        let c = GaugeMap::scalar(2, rat(-5, 3)).unwrap();
        let d = GaugeMap::diagonal(vec![int(4), rat(1, 7)]).unwrap();
        assert_eq!(c.compose(&d).unwrap(), d.compose(&c).unwrap());
    }
}
