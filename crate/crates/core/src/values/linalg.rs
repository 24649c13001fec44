//! Exact Gauss–Jordan elimination over ℚ.

use alloc::vec;
use alloc::vec::Vec;

use num_traits::{One, Zero};

use super::rational::{height, Rational};
use super::semvalue::SemValue;
use crate::error::{Error, Result};

pub(crate) type Matrix = Vec<Vec<Rational>>;

/// Row with the smallest-height nonzero entry in `col` among `rows[from..]`.
fn choose_pivot(m: &Matrix, col: usize, from: usize) -> Option<usize> {
    let mut best: Option<(usize, num_bigint::BigInt)> = None;
    for (r, row) in m.iter().enumerate().skip(from) {
        let x = &row[col];
        if x.is_zero() {
            continue;
        }
        let h = height(x);
        match &best {
            Some((_, bh)) if *bh <= h => {}
            _ => best = Some((r, h)),
        }
    }
    best.map(|(r, _)| r)
}

/// Reduces `m` in place to reduced row echelon form, pivoting only within
/// the first `cols` columns (trailing columns are carried along as
/// right-hand sides). Returns the pivot columns.
pub(crate) fn rref(m: &mut Matrix, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(p) = choose_pivot(m, col, row) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        if !inv.is_one() {
            for x in m[row].iter_mut() {
                *x *= &inv;
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (x, p) in other.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub(crate) fn rank_of(rows: &[Vec<Rational>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut m = rows.to_vec();
    rref(&mut m, cols).len()
}

/// Rank over ℚ of a list of values sharing one basis.
pub fn q_rank(vals: &[SemValue]) -> usize {
    let rows: Vec<Vec<Rational>> = vals.iter().map(|v| v.coeffs().to_vec()).collect();
    rank_of(&rows)
}

/// Solution of `A x = B` with several right-hand sides.
pub(crate) struct Solution {
    /// One row per unknown, one column per right-hand side; free unknowns 0.
    pub values: Matrix,
    pub free: usize,
}

/// Solves `a · x = b` where `a` is `eqs × unknowns` and `b` is `eqs × rhs`.
/// Returns `None` when inconsistent.
pub(crate) fn solve(a: &[Vec<Rational>], b: &[Vec<Rational>], unknowns: usize) -> Option<Solution> {
    let rhs = b.first().map_or(0, Vec::len);
    let mut m: Matrix = a
        .iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().chain(rb).cloned().collect())
        .collect();
    let pivots = rref(&mut m, unknowns);
    for row in &m[pivots.len()..] {
        if row[unknowns..].iter().any(|x| !x.is_zero()) {
            return None;
        }
    }
    let mut values = vec![vec![Rational::zero(); rhs]; unknowns];
    for (r, &col) in pivots.iter().enumerate() {
        values[col] = m[r][unknowns..].to_vec();
    }
    Some(Solution {
        values,
        free: unknowns - pivots.len(),
    })
}

/// The unique rationals `q` with `target = Σ q_k · frame[k]`.
pub fn q_coords(target: &SemValue, frame: &[SemValue]) -> Result<Vec<Rational>> {
    let dim = target.dim();
    if let Some(v) = frame.iter().find(|v| v.dim() != dim) {
        return Err(Error::BasisMismatch {
            left: dim,
            right: v.dim(),
        });
    }
    if q_rank(frame) != frame.len() {
        return Err(Error::DependentFrame);
    }
    if frame.is_empty() {
        return if target.is_zero() {
            Ok(Vec::new())
        } else {
            Err(Error::NotInSpan)
        };
    }
    let a: Matrix = (0..dim)
        .map(|j| frame.iter().map(|v| v.coeff(j).clone()).collect())
        .collect();
    let b: Matrix = target.coeffs().iter().map(|x| vec![x.clone()]).collect();
    let sol = solve(&a, &b, frame.len()).ok_or(Error::NotInSpan)?;
    debug_assert_eq!(sol.free, 0);
    Ok(sol.values.into_iter().map(|mut col| col.remove(0)).collect())
}

pub(crate) fn inverse(m: &[Vec<Rational>]) -> Result<Matrix> {
    let n = m.len();
    let mut aug: Matrix = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    if rref(&mut aug, n).len() != n {
        return Err(Error::SingularMatrix);
    }
    Ok(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

/// Incrementally maintained set of ℚ-independent vectors.
#[derive(Clone, Debug, Default)]
pub(crate) struct IndependentSet {
    /// Echelon rows with their pivot column; each pivot entry is 1.
    rows: Vec<(usize, Vec<Rational>)>,
}

impl IndependentSet {
    pub fn new() -> Self {
        Self::default()
    }

    #[cfg(test)]
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &[Rational]) -> Vec<Rational> {
        let mut r = v.to_vec();
        for (col, row) in &self.rows {
            if r[*col].is_zero() {
                continue;
            }
            let f = r[*col].clone();
            for (x, y) in r.iter_mut().zip(row) {
                *x -= &f * y;
            }
        }
        r
    }

    /// Adds `v` if it is independent of the current set.
    pub fn insert(&mut self, v: &[Rational]) -> bool {
        let r = self.reduce(v);
        let Some(col) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[col].recip();
        let r: Vec<Rational> = r.iter().map(|x| x * &inv).collect();
        for (_, row) in self.rows.iter_mut() {
            if !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&r) {
                    *x -= &f * y;
                }
            }
        }
        self.rows.push((col, r));
        true
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
    fn rank_examples() {
        assert_eq!(q_rank(&[sv(&[(1, 1), (0, 1)]), sv(&[(0, 1), (1, 1)])]), 2);
        assert_eq!(q_rank(&[sv(&[(1, 2), (-1, 10)]), sv(&[(1, 2), (1, 10)])]), 2);
        // (1), (2/3), (-5): every row is a multiple of the first
        assert_eq!(
            q_rank(&[sv(&[(1, 1), (0, 1)]), sv(&[(2, 3), (0, 1)]), sv(&[(-5, 1), (0, 1)])]),
            1
        );
        assert_eq!(q_rank(&[]), 0);
        assert_eq!(q_rank(&[SemValue::zero(3)]), 0);
    }

    #[test]
    fn coords_examples() {
        // (1/2, 1/10) = q1 (1, 0) + q2 (1/2, -1/10): q2 = -1, q1 = 1
        let frame = [sv(&[(1, 1), (0, 1)]), sv(&[(1, 2), (-1, 10)])];
        assert_eq!(
            q_coords(&sv(&[(1, 2), (1, 10)]), &frame).unwrap(),
            [int(1), int(-1)]
        );
        assert_eq!(q_coords(&frame[0], &frame).unwrap(), [int(1), int(0)]);
        assert_eq!(q_coords(&SemValue::zero(2), &frame).unwrap(), [int(0), int(0)]);
    }

    #[test]
    fn coords_errors() {
        let frame = [sv(&[(1, 1), (0, 1)])];
        assert_eq!(q_coords(&sv(&[(0, 1), (1, 1)]), &frame), Err(Error::NotInSpan));
        let dependent = [sv(&[(1, 1), (0, 1)]), sv(&[(2, 1), (0, 1)])];
        assert_eq!(
            q_coords(&sv(&[(1, 1), (0, 1)]), &dependent),
            Err(Error::DependentFrame)
        );
        assert_eq!(q_coords(&SemValue::zero(2), &[]).unwrap(), []);
        assert_eq!(q_coords(&frame[0], &[]), Err(Error::NotInSpan));
    }

    #[test]
    fn inverse_and_singular() {
        let m = vec![vec![int(1), int(2)], vec![int(3), int(4)]];
        let inv = inverse(&m).unwrap();
        assert_eq!(
            inv,
            vec![vec![int(-2), int(1)], vec![rat(3, 2), rat(-1, 2)]]
        );
        let s = vec![vec![int(1), int(2)], vec![int(2), int(4)]];
        assert_eq!(inverse(&s), Err(Error::SingularMatrix));
    }

    #[test]
    fn independent_set_matches_rank() {
        let vs = [
            sv(&[(1, 1), (2, 1), (0, 1)]),
            sv(&[(2, 1), (4, 1), (0, 1)]),
            sv(&[(0, 1), (1, 3), (1, 1)]),
            sv(&[(1, 1), (7, 3), (1, 1)]),
        ];
        let mut set = IndependentSet::new();
        let taken: Vec<bool> = vs.iter().map(|v| set.insert(v.coeffs())).collect();
        assert_eq!(taken, [true, false, true, false]);
        assert_eq!(set.len(), q_rank(&vs));
    }

    #[test]
    fn multi_rhs_solve_reports_free_unknowns() {
        // x0 + x1 = 1 with two right-hand sides; one free unknown
        let a = vec![vec![int(1), int(1)]];
        let b = vec![vec![int(1), int(2)]];
        let sol = solve(&a, &b, 2).unwrap();
        assert_eq!(sol.free, 1);
        assert_eq!(sol.values, vec![vec![int(1), int(2)], vec![int(0), int(0)]]);
        let inconsistent_a = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        let inconsistent_b = vec![vec![int(1)], vec![int(3)]];
        assert!(solve(&inconsistent_a, &inconsistent_b, 2).is_none());
    }
}
