use thiserror::Error;

/// Crate-wide error type.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Division by the zero rational function.
    #[error("zero divisor")]
    ZeroDivisor,

    /// Substitution point is a root of the denominator (or a negative power
    /// of q was evaluated at 0).
    #[error("pole at q = {0}")]
    Pole(String),

    /// A q-bracket that is exactly zero survived in a denominator.
    #[error("zero bracket [{m};q^{t}] in denominator")]
    ZeroBracket { m: i64, t: i64 },

    /// Malformed text or JSON wire form.
    #[error("parse error: {0}")]
    Parse(String),

    /// Row {row} of a plane partition increases at column {col}.
    #[error("row {row} is not weakly decreasing at column {col}")]
    RowNotDecreasing { row: usize, col: usize },

    /// Column {col} of a plane partition is not strictly decreasing.
    #[error("column {col} is not strictly decreasing at row {row}")]
    ColumnNotStrict { row: usize, col: usize },

    /// Row lengths of a plane partition do not form a partition.
    #[error("row {row} is longer than the row above it")]
    ShapeNotPartition { row: usize },

    /// A part of a plane partition lies outside the allowed range.
    #[error("part {value} at row {row}, column {col} is out of range")]
    PartOutOfRange { row: usize, col: usize, value: i64 },

    /// A Gelfand-Tsetlin pattern has the wrong number of rows or row lengths.
    #[error("pattern row {row} has {got} entries, expected {expected}")]
    PatternShape { row: usize, got: usize, expected: usize },

    /// A fixed boundary entry of a pattern does not have its required value.
    #[error("pattern boundary entry ({i},{j}) is {got}, expected {expected}")]
    PatternBoundary { i: usize, j: i64, got: i64, expected: i64 },

    /// The betweenness condition fails at entry (i, j).
    #[error("betweenness violated at pattern entry ({i},{j})")]
    Betweenness { i: usize, j: i64 },

    /// A pattern passed to the bijection has an inversion.
    #[error("pattern has {0} inversions, bijection requires none")]
    PatternHasInversions(usize),

    /// Bijection precondition on the source object fails.
    #[error("bijection precondition violated: {0}")]
    BijectionDomain(String),

    /// Interpolation nodes are not pairwise distinct.
    #[error("duplicate interpolation node {0}")]
    DuplicateNode(i64),

    /// Not enough samples to determine an interpolant.
    #[error("need at least {needed} samples of parity {parity}, got {got}")]
    InsufficientSamples {
        parity: &'static str,
        needed: usize,
        got: usize,
    },

    /// Samples are inconsistent with any quasi-polynomial within the bounds.
    #[error("no quasi-polynomial fit within bounds")]
    NoQuasiFit,

    /// Two independent computation routes disagree (test signal).
    #[error("internal mismatch in {what}: {detail}")]
    InternalMismatch { what: &'static str, detail: String },

    /// A recursion denominator vanished where a nonzero value is required.
    #[error("vanishing denominator in {0}")]
    VanishingDenominator(&'static str),

    /// Operation invoked outside its supported parameter range.
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
}

pub type Result<T> = std::result::Result<T, Error>;
