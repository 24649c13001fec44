use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

/// Every failure the calculus can report.
///
/// [`Error::name`] gives the bare variant name, which front ends surface
/// verbatim.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("statement width {found} does not match universe width {expected}")]
    WidthMismatch { expected: usize, found: usize },
    #[error("a universe needs at least one atom")]
    NoAtoms,
    #[error("{count} atoms exceed the cap of 24")]
    TooManyAtoms { count: usize },
    #[error("duplicate atom label {0:?}")]
    DuplicateLabel(String),
    #[error("atom labels must be non-empty")]
    EmptyLabel,
    #[error("unknown atom label {0:?}")]
    UnknownAtom(String),
    #[error("bits {bits:#x} do not fit in width {width}")]
    BitsOutOfRange { bits: u32, width: usize },
    #[error("statement is not below the given top")]
    NotBelow,
    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),
    #[error("enumeration of {count} statements exceeds the cap of 2^20")]
    EnumerationTooLarge { count: u64 },
    #[error("product universe of {count} atoms exceeds 2^24")]
    ProductTooLarge { count: u128 },
    #[error("invalid product universe: {0}")]
    InvalidProduct(&'static str),
    #[error("not a product universe")]
    NotProduct,
    #[error("cannot parse event {0:?}")]
    EventSyntax(String),
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("outcome {value} out of range for variable {name:?}")]
    UnknownOutcome { name: String, value: String },

    #[error("value dimensions differ: {left} vs {right}")]
    BasisMismatch { left: usize, right: usize },
    #[error("invalid basis: {0}")]
    InvalidBasis(String),
    #[error("values are not proportional over the rationals")]
    NotProportional,
    #[error("division by a zero value")]
    ZeroDivisor,
    #[error("target is not in the rational span of the frame")]
    NotInSpan,
    #[error("frame values are rationally dependent")]
    DependentFrame,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("matrix is not square or has the wrong dimension")]
    NotSquare,
    #[error("scalar gauge needs a nonzero factor")]
    ZeroScalar,
    #[error("symbol {0:?} has a nonzero coefficient but no enclosure")]
    MissingEnclosure(String),
    #[error("symbol {0:?} has a nonzero imaginary enclosure")]
    ComplexValued(String),

    #[error("expected {expected} values, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("valuation of the top statement is zero")]
    TopIsZero,
    #[error("semantic dimension {0} exceeds 1")]
    HigherDimension(usize),
    #[error("quasi-probability atoms must sum to 1 or all be 0")]
    NotNormalised,
    #[error("statements do not form a semantic frame of this valuation")]
    NotAFrame,
    #[error("partial valuation is inconsistent with additivity")]
    Inconsistent,
    #[error("partial valuation assigns a nonzero value to the bottom statement")]
    BottomNotZero,
    #[error("partial valuation does not determine the requested value")]
    Underdetermined,
    #[error("partial valuation must cover every statement except the missing one")]
    IncompleteAssignment,

    #[error("cannot relativise to the bottom statement")]
    BottomConditioning,
    #[error("relativisation is unstable: the conditioning statement has value 0 but the restriction is not identically 0")]
    RelativisationUnstable,
    #[error("denominator value is zero")]
    ZeroDenominator,
    #[error("anchor has zero value")]
    ZeroAnchor,
    #[error("stable cell weight must be nonzero")]
    ZeroWeight,
    #[error("unstable cell must have a zero local top")]
    NonzeroLocalTop,
    #[error("input is not a probability")]
    NotAProbability,
    #[error("expected one cell datum per partition cell: {cells} cells, {data} data")]
    CellCountMismatch { cells: usize, data: usize },
    #[error("ambient frame values are rationally dependent; the gauge would not be injective")]
    NonInjectiveGauge,

    #[error("gauge table does not contain a required value")]
    TableIncomplete,
    #[error("gauge table is not injective")]
    TableNotInjective,

    #[error("time {0} is beyond the simulated horizon or the 2^22 cap")]
    HorizonTooLarge(u64),
    #[error("time index must be at least 1")]
    ZeroTime,
    #[error("unknown demo {0:?}")]
    UnknownDemo(String),
}

impl Error {
    pub fn name(&self) -> &'static str {
        match self {
            Error::WidthMismatch { .. } => "WidthMismatch",
            Error::NoAtoms => "NoAtoms",
            Error::TooManyAtoms { .. } => "TooManyAtoms",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::EmptyLabel => "EmptyLabel",
            Error::UnknownAtom(_) => "UnknownAtom",
            Error::BitsOutOfRange { .. } => "BitsOutOfRange",
            Error::NotBelow => "NotBelow",
            Error::InvalidPartition(_) => "InvalidPartition",
            Error::EnumerationTooLarge { .. } => "EnumerationTooLarge",
            Error::ProductTooLarge { .. } => "ProductTooLarge",
            Error::InvalidProduct(_) => "InvalidProduct",
            Error::NotProduct => "NotProduct",
            Error::EventSyntax(_) => "EventSyntax",
            Error::UnknownVariable(_) => "UnknownVariable",
            Error::UnknownOutcome { .. } => "UnknownOutcome",
            Error::BasisMismatch { .. } => "BasisMismatch",
            Error::InvalidBasis(_) => "InvalidBasis",
            Error::NotProportional => "NotProportional",
            Error::ZeroDivisor => "ZeroDivisor",
            Error::NotInSpan => "NotInSpan",
            Error::DependentFrame => "DependentFrame",
            Error::SingularMatrix => "SingularMatrix",
            Error::NotSquare => "NotSquare",
            Error::ZeroScalar => "ZeroScalar",
            Error::MissingEnclosure(_) => "MissingEnclosure",
            Error::ComplexValued(_) => "ComplexValued",
            Error::ArityMismatch { .. } => "ArityMismatch",
            Error::TopIsZero => "TopIsZero",
            Error::HigherDimension(_) => "HigherDimension",
            Error::NotNormalised => "NotNormalised",
            Error::NotAFrame => "NotAFrame",
            Error::Inconsistent => "Inconsistent",
            Error::BottomNotZero => "BottomNotZero",
            Error::Underdetermined => "Underdetermined",
            Error::IncompleteAssignment => "IncompleteAssignment",
            Error::BottomConditioning => "BottomConditioning",
            Error::RelativisationUnstable => "RelativisationUnstable",
            Error::ZeroDenominator => "ZeroDenominator",
            Error::ZeroAnchor => "ZeroAnchor",
            Error::ZeroWeight => "ZeroWeight",
            Error::NonzeroLocalTop => "NonzeroLocalTop",
            Error::NotAProbability => "NotAProbability",
            Error::CellCountMismatch { .. } => "CellCountMismatch",
            Error::NonInjectiveGauge => "NonInjectiveGauge",
            Error::TableIncomplete => "TableIncomplete",
            Error::TableNotInjective => "TableNotInjective",
            Error::HorizonTooLarge(_) => "HorizonTooLarge",
            Error::ZeroTime => "ZeroTime",
            Error::UnknownDemo(_) => "UnknownDemo",
        }
    }
}
