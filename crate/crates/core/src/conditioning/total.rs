use alloc::vec::Vec;

use num_traits::Zero;

use super::local::{relative_preprob, relative_quasi, LocalPreProb, LocalQuasi};
use crate::error::{Error, Result};
use crate::lattice::{Partition, Statement};
use crate::valuation::{PreProb, QuasiProb};
use crate::values::{q_coords, q_rank, Rational, SemValue};

/// Ambient values for the statements of a local semantic frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrameAssignment {
    pairs: Vec<(Statement, SemValue)>,
}

impl FrameAssignment {
    pub fn new(pairs: Vec<(Statement, SemValue)>) -> Self {
        FrameAssignment { pairs }
    }

    /// The local canonical frame mapped to its own local values.
    pub fn identity(local: &LocalPreProb) -> Self {
        let pairs = local
            .canonical_frame()
            .into_iter()
            .map(|s| (s, local.eval(s).expect("frame lies in the ideal")))
            .collect();
        FrameAssignment { pairs }
    }

    /// The local canonical frame mapped to the values of an ambient valuation.
    pub fn from_ambient(local: &LocalPreProb, ambient: &PreProb) -> Result<Self> {
        let pairs = local
            .canonical_frame()
            .into_iter()
            .map(|s| Ok((s, ambient.eval(s)?)))
            .collect::<Result<Vec<_>>>()?;
        Ok(FrameAssignment { pairs })
    }

    pub fn pairs(&self) -> &[(Statement, SemValue)] {
        &self.pairs
    }

    pub fn statements(&self) -> impl Iterator<Item = Statement> + '_ {
        self.pairs.iter().map(|(s, _)| *s)
    }
}

/// Rewrites `local` so that its frame statements take the assigned ambient
/// values; every other value follows from its rational frame coordinates.
pub fn synchronize(local: &LocalPreProb, frame: &FrameAssignment) -> Result<LocalPreProb> {
    let local_values = frame
        .pairs
        .iter()
        .map(|(s, _)| local.eval(*s))
        .collect::<Result<Vec<_>>>()?;
    let ambient: Vec<SemValue> = frame.pairs.iter().map(|(_, v)| v.clone()).collect();
    if let Some(v) = ambient.iter().find(|v| v.dim() != local.basis().dim()) {
        return Err(Error::BasisMismatch {
            left: local.basis().dim(),
            right: v.dim(),
        });
    }
    if q_rank(&local_values) != local_values.len() {
        return Err(Error::DependentFrame);
    }
    if local_values.len() != local.semantic_dimension() {
        return Err(Error::NotAFrame);
    }
    if q_rank(&ambient) != ambient.len() {
        return Err(Error::NonInjectiveGauge);
    }
    let values = local
        .values()
        .iter()
        .map(|v| {
            let q = q_coords(v, &local_values)?;
            let mut acc = local.basis().zero();
            for (qk, a) in q.iter().zip(&ambient) {
                acc.add_assign(&a.scale(qk))?;
            }
            Ok(acc)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(local.with_values(values))
}

fn check_cells(cells: &Partition, tops: impl Iterator<Item = Statement>, count: usize) -> Result<()> {
    if count != cells.len() {
        return Err(Error::CellCountMismatch {
            cells: cells.len(),
            data: count,
        });
    }
    if !cells.top().is_top() {
        return Err(Error::InvalidPartition("cells must join to the top"));
    }
    if cells.cells().iter().zip(tops).any(|(c, t)| *c != t) {
        return Err(Error::InvalidPartition("local data does not sit on its cell"));
    }
    Ok(())
}

/// `R(s) = Σ_j a_j(R(s | s_j))`, each `a_j` given by a frame assignment.
pub fn total_preprob(
    cells: &Partition,
    locals: &[(LocalPreProb, FrameAssignment)],
    s: Statement,
) -> Result<SemValue> {
    check_cells(cells, locals.iter().map(|(l, _)| l.top()), locals.len())?;
    let mut acc: Option<SemValue> = None;
    for (local, frame) in locals {
        let v = synchronize(local, frame)?.conditional(s)?;
        match &mut acc {
            Some(a) => a.add_assign(&v)?,
            None => acc = Some(v),
        }
    }
    acc.ok_or(Error::InvalidPartition("no cells"))
}

/// The whole ambient valuation, synchronising each cell once.
pub fn reconstruct_preprob(
    cells: &Partition,
    locals: &[(LocalPreProb, FrameAssignment)],
) -> Result<PreProb> {
    check_cells(cells, locals.iter().map(|(l, _)| l.top()), locals.len())?;
    let (first, _) = locals.first().ok_or(Error::InvalidPartition("no cells"))?;
    let universe = first.ambient().clone();
    let basis = first.basis().clone();
    let mut atomic = alloc::vec![basis.zero(); universe.atom_count()];
    for (local, frame) in locals {
        let synced = synchronize(local, frame)?;
        for (i, v) in synced.top().atoms().zip(synced.values()) {
            atomic[i] = v.clone();
        }
    }
    PreProb::new(universe, basis, atomic)
}

/// What is known on one cell of a partition of ⊤.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CellData {
    /// A conditional quasi-probability and the cell's ambient weight.
    Stable { cond: LocalQuasi, weight: Rational },
    /// A top-zero local pre-probability and one reference statement of
    /// known ambient value.
    Unstable {
        local: LocalPreProb,
        anchor: Statement,
        anchor_ambient: Rational,
    },
    /// The local valuation vanishes.
    Invariant { cell: Statement },
}

impl CellData {
    pub fn stable(cond: LocalQuasi, weight: Rational) -> Result<Self> {
        if weight.is_zero() {
            return Err(Error::ZeroWeight);
        }
        Ok(CellData::Stable { cond, weight })
    }

    pub fn unstable(local: LocalPreProb, anchor: Statement, anchor_ambient: Rational) -> Result<Self> {
        if !local.top_value().is_zero() {
            return Err(Error::NonzeroLocalTop);
        }
        if local.eval(anchor)?.is_zero() || anchor_ambient.is_zero() {
            return Err(Error::ZeroAnchor);
        }
        Ok(CellData::Unstable {
            local,
            anchor,
            anchor_ambient,
        })
    }

    pub fn invariant(cell: Statement) -> Self {
        CellData::Invariant { cell }
    }

    /// Classifies the restriction of `q` to `cell`. An unstable cell is
    /// anchored at its first atom of nonzero value.
    pub fn derive(q: &QuasiProb, cell: Statement) -> Result<Self> {
        match relative_quasi(q, cell) {
            Ok(cond) if cond.is_zero() => Ok(CellData::invariant(cell)),
            Ok(cond) => CellData::stable(cond, q.eval(cell)?),
            Err(Error::RelativisationUnstable) => {
                let anchor = cell
                    .atoms()
                    .find(|&i| !q.atomic()[i].is_zero())
                    .map(|i| q.universe().atom(i))
                    .expect("an unstable cell has a nonzero atom");
                Self::derive_anchored(q, cell, anchor)
            }
            Err(e) => Err(e),
        }
    }

    /// An unstable cell of `q` with a chosen anchor.
    pub fn derive_anchored(q: &QuasiProb, cell: Statement, anchor: Statement) -> Result<Self> {
        let local = relative_preprob(&q.to_preprob(), cell)?;
        CellData::unstable(local, anchor, q.eval(anchor)?)
    }

    pub fn cell(&self) -> Statement {
        match self {
            CellData::Stable { cond, .. } => cond.top(),
            CellData::Unstable { local, .. } => local.top(),
            CellData::Invariant { cell } => *cell,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CellData::Stable { .. } => "stable",
            CellData::Unstable { .. } => "unstable",
            CellData::Invariant { .. } => "invariant",
        }
    }

    /// This cell's term in the total rule.
    pub fn contribution(&self, s: Statement) -> Result<Rational> {
        match self {
            CellData::Stable { cond, weight } => Ok(cond.conditional(s)? * weight),
            CellData::Unstable {
                local,
                anchor,
                anchor_ambient,
            } => {
                let ratio = local.conditional(s)?.ratio(&local.eval(*anchor)?)?;
                Ok(ratio * anchor_ambient)
            }
            CellData::Invariant { .. } => Ok(Rational::zero()),
        }
    }
}

/// Total quasi-probability with stable, unstable and invariant cells.
pub fn total_quasi(cells: &Partition, data: &[CellData], s: Statement) -> Result<Rational> {
    check_cells(cells, data.iter().map(CellData::cell), data.len())?;
    data.iter().map(|d| d.contribution(s)).sum()
}

/// `P(s) = Σ_j P(s | s_j) P(s_j)`; cells of probability zero drop out.
pub fn total_probability(p: &QuasiProb, cells: &Partition, s: Statement) -> Result<Rational> {
    if !p.is_probability() {
        return Err(Error::NotAProbability);
    }
    let data = cells
        .cells()
        .iter()
        .map(|&c| CellData::derive(p, c))
        .collect::<Result<Vec<_>>>()?;
    assert!(
        data.iter().all(|d| !matches!(d, CellData::Unstable { .. })),
        "probabilities have no mixed cases"
    );
    total_quasi(cells, &data, s)
}
