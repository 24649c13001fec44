use alloc::string::String;
use alloc::vec::Vec;

use crate::lattice::Statement;
use crate::values::SemValue;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
}

/// The inputs that broke a check, in a form the check can re-run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Counterexample {
    /// Offending statements of a value table.
    Statements(Vec<Statement>),
    /// The seed of the random case that failed.
    Seed(u64),
    /// Offending elements of a gauge-table domain.
    Values(Vec<SemValue>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub name: String,
    pub verdict: Verdict,
    pub cases_run: u64,
    pub counterexample: Option<Counterexample>,
    /// Readable account of the counterexample, or a caveat on a pass.
    pub note: Option<String>,
}

impl CheckReport {
    pub(crate) fn pass(name: &str, cases_run: u64) -> Self {
        CheckReport {
            name: name.into(),
            verdict: Verdict::Pass,
            cases_run,
            counterexample: None,
            note: None,
        }
    }

    pub(crate) fn fail(name: &str, cases_run: u64, cx: Counterexample, note: String) -> Self {
        CheckReport {
            name: name.into(),
            verdict: Verdict::Fail,
            cases_run,
            counterexample: Some(cx),
            note: Some(note),
        }
    }

    pub(crate) fn with_note(mut self, note: &str) -> Self {
        if self.note.is_none() {
            self.note = Some(note.into());
        }
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }
}
