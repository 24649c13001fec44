use alloc::vec::Vec;

use super::statement::Statement;
use super::universe::MAX_ENUMERATION;
use crate::error::{Error, Result};

/// A Boolean sub-universe: the ideal below a statement, or the coarse
/// graining generated by a partition of its top into atom blocks.
///
/// Every Boolean sublattice of a finite Boolean algebra arises as a coarse
/// graining, so the two constructors cover the sub-universes the calculus
/// needs. Composing them (an ideal inside a coarse graining, a coarse
/// graining of an ideal) yields another `CoarseGrain` whose top is not ⊤.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SubUniverse {
    Ideal(Statement),
    CoarseGrain { blocks: Vec<Statement> },
}

impl SubUniverse {
    pub fn ideal(t: Statement) -> Self {
        SubUniverse::Ideal(t)
    }

    /// Blocks must be non-empty and pairwise disjoint; their union is the
    /// top of the sub-universe.
    pub fn coarse_grain(blocks: Vec<Statement>) -> Result<Self> {
        let first = *blocks
            .first()
            .ok_or(Error::InvalidPartition("no blocks"))?;
        let mut seen = Statement::bottom(first.width());
        for &b in &blocks {
            if b.width() != first.width() {
                return Err(Error::WidthMismatch {
                    expected: first.width(),
                    found: b.width(),
                });
            }
            if b.is_bottom() {
                return Err(Error::InvalidPartition("empty block"));
            }
            if !b.and(seen).is_bottom() {
                return Err(Error::InvalidPartition("blocks overlap"));
            }
            seen = seen.or(b);
        }
        let mut blocks = blocks;
        blocks.sort();
        Ok(SubUniverse::CoarseGrain { blocks })
    }

    /// Coarse graining of the whole universe; blocks must cover ⊤.
    pub fn coarse_grain_of_top(blocks: Vec<Statement>) -> Result<Self> {
        let sub = Self::coarse_grain(blocks)?;
        if !sub.top().is_top() {
            return Err(Error::InvalidPartition("blocks do not cover the top"));
        }
        Ok(sub)
    }

    pub fn width(&self) -> usize {
        match self {
            SubUniverse::Ideal(t) => t.width(),
            SubUniverse::CoarseGrain { blocks } => blocks[0].width(),
        }
    }

    pub fn top(&self) -> Statement {
        match self {
            SubUniverse::Ideal(t) => *t,
            SubUniverse::CoarseGrain { blocks } => blocks
                .iter()
                .fold(Statement::bottom(blocks[0].width()), |acc, &b| acc.or(b)),
        }
    }

    pub fn contains(&self, s: Statement) -> bool {
        if s.width() != self.width() {
            return false;
        }
        match self {
            SubUniverse::Ideal(t) => s.below(*t),
            SubUniverse::CoarseGrain { blocks } => {
                s.below(self.top())
                    && blocks.iter().all(|&b| {
                        let part = s.and(b);
                        part.is_bottom() || part == b
                    })
            }
        }
    }

    /// Complement relative to the sub-universe's top.
    pub fn complement(&self, s: Statement) -> Result<Statement> {
        if !self.contains(s) {
            return Err(Error::NotBelow);
        }
        Ok(self.top().and(s.complement()))
    }

    /// Members in ascending order: ⊥ first, the sub-universe top last.
    pub fn enumerate(&self) -> Result<Vec<Statement>> {
        match self {
            SubUniverse::Ideal(t) => {
                let count = 1u64 << t.level();
                if count > MAX_ENUMERATION {
                    return Err(Error::EnumerationTooLarge { count });
                }
                let m = t.bits();
                let mut out = Vec::with_capacity(count as usize);
                let mut sub = 0u32;
                loop {
                    out.push(Statement::from_raw(t.width(), sub));
                    if sub == m {
                        break;
                    }
                    sub = (sub.wrapping_sub(m)) & m;
                }
                Ok(out)
            }
            SubUniverse::CoarseGrain { blocks } => {
                let count = 1u64 << blocks.len();
                if count > MAX_ENUMERATION {
                    return Err(Error::EnumerationTooLarge { count });
                }
                let width = blocks[0].width();
                let mut out: Vec<Statement> = (0..count)
                    .map(|k| {
                        blocks
                            .iter()
                            .enumerate()
                            .filter(|(i, _)| k & (1 << i) != 0)
                            .fold(Statement::bottom(width), |acc, (_, &b)| acc.or(b))
                    })
                    .collect();
                out.sort();
                Ok(out)
            }
        }
    }

    /// The ideal below `t` inside this sub-universe.
    pub fn restrict(&self, t: Statement) -> Result<SubUniverse> {
        if !self.contains(t) {
            return Err(Error::NotBelow);
        }
        match self {
            SubUniverse::Ideal(_) => Ok(SubUniverse::Ideal(t)),
            SubUniverse::CoarseGrain { blocks } => {
                if t.is_bottom() {
                    return Ok(SubUniverse::Ideal(t));
                }
                SubUniverse::coarse_grain(blocks.iter().copied().filter(|b| b.below(t)).collect())
            }
        }
    }
}

/// Pairwise disjoint, non-bottom cells whose join is a declared top.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Partition {
    cells: Vec<Statement>,
    top: Statement,
}

impl Partition {
    pub fn new(cells: Vec<Statement>, top: Statement) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::InvalidPartition("no cells"));
        }
        let mut seen = Statement::bottom(top.width());
        for &c in &cells {
            if c.width() != top.width() {
                return Err(Error::WidthMismatch {
                    expected: top.width(),
                    found: c.width(),
                });
            }
            if c.is_bottom() {
                return Err(Error::InvalidPartition("empty cell"));
            }
            if !c.and(seen).is_bottom() {
                return Err(Error::InvalidPartition("cells overlap"));
            }
            seen = seen.or(c);
        }
        if seen != top {
            return Err(Error::InvalidPartition("cells do not join to the top"));
        }
        Ok(Partition { cells, top })
    }

    /// Partition of ⊤.
    pub fn of_top(cells: Vec<Statement>) -> Result<Self> {
        let width = cells
            .first()
            .ok_or(Error::InvalidPartition("no cells"))?
            .width();
        Self::new(cells, Statement::top(width))
    }

    pub fn cells(&self) -> &[Statement] {
        &self.cells
    }

    pub fn top(&self) -> Statement {
        self.top
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Image under `[·]_t`, dropping cells that localise to ⊥.
    pub fn localise(&self, t: Statement) -> Result<Partition> {
        if t.width() != self.top.width() {
            return Err(Error::WidthMismatch {
                expected: self.top.width(),
                found: t.width(),
            });
        }
        let cells: Vec<Statement> = self
            .cells
            .iter()
            .map(|&c| c.and(t))
            .filter(|c| !c.is_bottom())
            .collect();
        Partition::new(cells, self.top.and(t))
    }
}
