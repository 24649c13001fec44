use alloc::vec::Vec;

use super::preprob::PreProb;
use crate::error::{Error, Result};
use crate::lattice::Statement;
use crate::values::{q_coords, q_rank, SemValue};
use crate::values::IndependentSet;

/// A maximal set of statements whose values are ℚ-linearly independent.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemanticFrame {
    statements: Vec<Statement>,
    values: Vec<SemValue>,
}

impl SemanticFrame {
    pub fn statements(&self) -> &[Statement] {
        &self.statements
    }

    pub fn values(&self) -> &[SemValue] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.statements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.statements.is_empty()
    }

    /// Statements in ascending order, for set comparison.
    pub fn statement_set(&self) -> Vec<Statement> {
        let mut s = self.statements.clone();
        s.sort();
        s
    }
}

impl PreProb {
    /// Deterministic frame: ⊤ first when requested, then atoms in ascending
    /// index order, each kept iff its value stays independent of those
    /// already chosen.
    pub fn canonical_frame(&self, include_top: bool) -> Result<SemanticFrame> {
        let mut set = IndependentSet::new();
        let mut statements = Vec::new();
        let mut values = Vec::new();
        if include_top {
            let top = self.top_value();
            if top.is_zero() {
                return Err(Error::TopIsZero);
            }
            set.insert(top.coeffs());
            statements.push(self.universe().top());
            values.push(top);
        }
        for (i, v) in self.atomic().iter().enumerate() {
            if set.insert(v.coeffs()) {
                statements.push(self.universe().atom(i));
                values.push(v.clone());
            }
        }
        Ok(SemanticFrame { statements, values })
    }

    /// Validates `statements` as a semantic frame of this valuation.
    pub fn frame_of(&self, statements: &[Statement]) -> Result<SemanticFrame> {
        let values = statements
            .iter()
            .map(|&s| self.eval(s))
            .collect::<Result<Vec<_>>>()?;
        if q_rank(&values) != values.len() {
            return Err(Error::DependentFrame);
        }
        if values.len() != self.semantic_dimension() {
            return Err(Error::NotAFrame);
        }
        Ok(SemanticFrame {
            statements: statements.to_vec(),
            values,
        })
    }

    /// Semantic decomposition relative to `frame`: component `k` takes the
    /// value `q_k(s) · R(s_k)`, where `q` are the rational coordinates of
    /// `R(s)` in the frame values.
    pub fn components_frame(&self, frame: &SemanticFrame) -> Result<Vec<PreProb>> {
        for (s, v) in frame.statements.iter().zip(&frame.values) {
            if &self.eval(*s)? != v {
                return Err(Error::NotAFrame);
            }
        }
        let coords = self
            .atomic()
            .iter()
            .map(|v| {
                q_coords(v, &frame.values).map_err(|e| match e {
                    Error::NotInSpan => Error::NotAFrame,
                    other => other,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok((0..frame.len())
            .map(|k| {
                let value = &frame.values[k];
                self.with_atomic(coords.iter().map(|c| value.scale(&c[k])).collect())
            })
            .collect())
    }

    /// Decomposition along basis directions: component `j` keeps only
    /// coefficient `j` of every atomic value.
    pub fn components_basis(&self) -> Vec<PreProb> {
        (0..self.dim())
            .map(|j| {
                self.with_atomic(
                    self.atomic()
                        .iter()
                        .map(|v| SemValue::along(self.dim(), j, v.coeff(j).clone()))
                        .collect(),
                )
            })
            .collect()
    }
}
