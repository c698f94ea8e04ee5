use thiserror::Error;

use crate::identities::IdentityReport;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree must be at least 1")]
    InvalidDegree,

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("not a bijection: value {value} appears more than once or is out of range")]
    NotBijection { value: usize },

    #[error("cycle notation at byte {position}: {message}")]
    CycleParse { position: usize, message: String },

    #[error("table is empty")]
    EmptyTable,

    #[error("order {order} exceeds the supported maximum of {max}")]
    OrderTooLarge { order: usize, max: usize },

    #[error("row {row} has {len} entries, expected {order}")]
    NonSquare { row: usize, len: usize, order: usize },

    #[error("entry {value} at ({row}, {col}) is not below the order {order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },

    #[error("Latin violation in {line} {index}: value {value} repeats")]
    LatinViolation { line: Line, index: usize, value: usize },

    #[error("no two-sided identity element")]
    NoIdentity,

    #[error("element {element} is not below the order {order}")]
    ElementOutOfRange { element: usize, order: usize },

    #[error(
        "powers of {x} are ambiguous: x^{left_exp}*x^{right_exp} = {product} but x^{total} = {expected}"
    )]
    PowerAmbiguity {
        x: usize,
        left_exp: usize,
        right_exp: usize,
        total: usize,
        product: usize,
        expected: usize,
    },

    #[error("not an autotopism: equation fails at x={x}, y={y}")]
    NotAutotopism { x: usize, y: usize },

    #[error("{side}-central triple of x={x} is not an autotopism: fails at ({}, {})", .pair.0, .pair.1)]
    NotCentral { side: Side, x: usize, pair: (usize, usize) },

    #[error("loop fails the {}", .0.describe())]
    IdentityFails(Box<IdentityReport>),

    #[error("the theorem hypothesis excludes Steiner loops")]
    SteinerInput,

    #[error("construction produced an empty triple family")]
    EmptyFamily,

    #[error("gamma component bracketings disagree at z={z}: (x^-2 z) x^2 = {left}, x^-2 (z x^2) = {right}")]
    BracketingMismatch { z: usize, left: usize, right: usize },

    #[error("theorem violation: {0}")]
    TheoremViolation(String),

    #[error("order {order} is above the enumeration limit {max}")]
    EnumerationTooLarge { order: usize, max: usize },

    #[error("bases file line {line}: {message}")]
    BasesFormat { line: usize, message: String },

    #[error("triple {triple} refers to point {point}, but the ground set has {size} points")]
    TriplePointOutOfRange { triple: usize, point: usize, size: usize },

    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },

    #[error("table file line {line}: {message}")]
    TableFormat { line: usize, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

impl std::fmt::Display for Side {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Side::Left => f.write_str("left"),
            Side::Right => f.write_str("right"),
        }
    }
}

impl Error {
    /// Stable machine-readable tag, used as the `ERROR <kind>:` prefix by the CLI.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::InvalidDegree => "invalid-degree",
            Error::DegreeMismatch { .. } => "degree-mismatch",
            Error::NotBijection { .. } => "not-bijection",
            Error::CycleParse { .. } => "cycle-parse",
            Error::EmptyTable => "empty-table",
            Error::OrderTooLarge { .. } => "order-too-large",
            Error::NonSquare { .. } => "non-square",
            Error::EntryOutOfRange { .. } => "entry-out-of-range",
            Error::LatinViolation { .. } => "latin-violation",
            Error::NoIdentity => "no-identity",
            Error::ElementOutOfRange { .. } => "element-out-of-range",
            Error::PowerAmbiguity { .. } => "power-ambiguity",
            Error::NotAutotopism { .. } => "not-autotopism",
            Error::NotCentral { side: Side::Left, .. } => "not-lc",
            Error::NotCentral { side: Side::Right, .. } => "not-rc",
            Error::IdentityFails(_) => "identity-fails",
            Error::SteinerInput => "steiner-input",
            Error::EmptyFamily => "empty-family",
            Error::BracketingMismatch { .. } => "bracketing-mismatch",
            Error::TheoremViolation(_) => "theorem-violation",
            Error::EnumerationTooLarge { .. } => "enumeration-too-large",
            Error::TableFormat { .. } => "table-format",
            Error::BasesFormat { .. } => "bases-format",
            Error::Io { .. } => "io",
            Error::TriplePointOutOfRange { .. } => "triple-point-out-of-range",
        }
    }
}
