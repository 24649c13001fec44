use core::fmt;

use crate::error::{Error, Result};

/// Largest number of atoms a universe may have; keeps a statement in one `u32`.
pub const MAX_ATOMS: usize = 24;

/// A statement of a finite universe: the set of atoms below it.
///
/// Ordering is by bitset value, which is the canonical order used for
/// enumeration, frames and reports.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Statement {
    bits: u32,
    width: u8,
}

#[inline]
pub(crate) fn mask(width: usize) -> u32 {
    if width >= 32 {
        u32::MAX
    } else {
        (1u32 << width) - 1
    }
}

impl Statement {
    pub fn new(width: usize, bits: u32) -> Result<Self> {
        if width == 0 {
            return Err(Error::NoAtoms);
        }
        if width > MAX_ATOMS {
            return Err(Error::TooManyAtoms { count: width });
        }
        if bits & !mask(width) != 0 {
            return Err(Error::BitsOutOfRange { bits, width });
        }
        Ok(Self::from_raw(width, bits))
    }

    #[inline]
    pub(crate) fn from_raw(width: usize, bits: u32) -> Self {
        debug_assert!(width <= MAX_ATOMS && bits & !mask(width) == 0);
        Statement {
            bits,
            width: width as u8,
        }
    }

    pub fn bottom(width: usize) -> Self {
        Self::from_raw(width, 0)
    }

    pub fn top(width: usize) -> Self {
        Self::from_raw(width, mask(width))
    }

    /// The atom with index `index`. Panics if `index >= width`.
    pub fn atom(width: usize, index: usize) -> Self {
        assert!(index < width, "atom index {index} out of range for width {width}");
        Self::from_raw(width, 1 << index)
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.bits
    }

    #[inline]
    pub fn width(self) -> usize {
        self.width as usize
    }

    /// Number of atoms below the statement.
    #[inline]
    pub fn level(self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_bottom(self) -> bool {
        self.bits == 0
    }

    pub fn is_top(self) -> bool {
        self.bits == mask(self.width())
    }

    pub fn is_atom(self) -> bool {
        self.level() == 1
    }

    pub fn contains_atom(self, index: usize) -> bool {
        index < self.width() && self.bits & (1 << index) != 0
    }

    /// Indices of the atoms below the statement, ascending.
    pub fn atoms(self) -> Atoms {
        Atoms { rest: self.bits }
    }

    fn same_width(self, other: Statement) -> Result<()> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(Error::WidthMismatch {
                expected: self.width(),
                found: other.width(),
            })
        }
    }

    pub fn join(self, other: Statement) -> Result<Statement> {
        self.same_width(other)?;
        Ok(self.or(other))
    }

    pub fn meet(self, other: Statement) -> Result<Statement> {
        self.same_width(other)?;
        Ok(self.and(other))
    }

    pub fn complement(self) -> Statement {
        Self::from_raw(self.width(), !self.bits & mask(self.width()))
    }

    /// `self ≤ other`, i.e. `self ∧ other = self`.
    pub fn leq(self, other: Statement) -> Result<bool> {
        self.same_width(other)?;
        Ok(self.below(other))
    }

    pub fn is_disjoint(self, other: Statement) -> Result<bool> {
        self.same_width(other)?;
        Ok(self.bits & other.bits == 0)
    }

    #[inline]
    pub(crate) fn or(self, other: Statement) -> Statement {
        Self::from_raw(self.width(), self.bits | other.bits)
    }

    #[inline]
    pub(crate) fn and(self, other: Statement) -> Statement {
        Self::from_raw(self.width(), self.bits & other.bits)
    }

    #[inline]
    pub(crate) fn below(self, other: Statement) -> bool {
        self.bits & other.bits == self.bits
    }
}

impl fmt::Debug for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Statement({:0width$b})", self.bits, width = self.width())
    }
}

/// Iterator over set atom indices.
#[derive(Clone, Debug)]
pub struct Atoms {
    rest: u32,
}

impl Iterator for Atoms {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.rest == 0 {
            return None;
        }
        let i = self.rest.trailing_zeros() as usize;
        self.rest &= self.rest - 1;
        Some(i)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.rest.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Atoms {}

/// `¬_t s = ¬(¬t ∨ s)`, the complement of `s` inside the ideal of `t`.
pub fn relative_complement(t: Statement, s: Statement) -> Result<Statement> {
    if !s.leq(t)? {
        return Err(Error::NotBelow);
    }
    Ok(t.complement().or(s).complement())
}

/// The localisation map `[s]_t = s ∧ t`.
pub fn localise(s: Statement, t: Statement) -> Result<Statement> {
    s.meet(t)
}
