//! Error type shared by all modules of the crate.

use alloc::string::String;
use core::fmt;

/// Everything that can go wrong when encoding, measuring or classifying.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// An input coordinate was NaN or infinite.
    NonFiniteInput,
    /// An argument had the wrong number of coordinates or the wrong matrix
    /// dimension for the operation.
    DimensionMismatch { expected: usize, actual: usize },
    /// Two sequences that must be equally long were not.
    LengthMismatch { left: usize, right: usize },
    /// The stereographic projection was evaluated at the north pole, where
    /// it is undefined.
    NorthPole,
    /// A Bloch vector that must lie on the unit sphere did not.
    NotUnitNorm { norm_sq: f64 },
    /// A normalization factor had a vanishing denominator (a state at or
    /// numerically indistinguishable from the north pole).
    SingularNormalization,
    /// Only Hilbert-space dimensions 2 and 3 are supported.
    UnsupportedDimension(usize),
    /// A feature count outside the band representable in the requested
    /// Hilbert-space dimension.
    UnsupportedFeatureCount { features: usize, dimension: usize },
    /// A matrix failed a density-operator requirement (Hermiticity, unit
    /// trace, positive semidefiniteness or purity).
    NotADensityMatrix(&'static str),
    /// A training class contained no patterns.
    EmptyClass(usize),
    /// A class label at or above the declared class count.
    LabelOutOfRange { label: usize, class_count: usize },
    /// An invalid generator or dataset specification.
    InvalidSpec(&'static str),
    /// A text record that could not be parsed; `line` is 1-based.
    Parse { line: usize, message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NonFiniteInput => write!(f, "input contains a non-finite coordinate"),
            Error::DimensionMismatch { expected, actual } => {
                write!(f, "dimension mismatch: expected {expected}, got {actual}")
            }
            Error::LengthMismatch { left, right } => {
                write!(f, "length mismatch: {left} vs {right}")
            }
            Error::NorthPole => {
                write!(f, "stereographic projection is undefined at the north pole")
            }
            Error::NotUnitNorm { norm_sq } => {
                write!(
                    f,
                    "Bloch vector is not on the unit sphere (|r|^2 = {norm_sq})"
                )
            }
            Error::SingularNormalization => {
                write!(
                    f,
                    "normalization factor is singular (state at the north pole)"
                )
            }
            Error::UnsupportedDimension(n) => {
                write!(
                    f,
                    "unsupported Hilbert-space dimension {n} (supported: 2, 3)"
                )
            }
            Error::UnsupportedFeatureCount {
                features,
                dimension,
            } => write!(
                f,
                "{features} features cannot be represented in Hilbert dimension {dimension}"
            ),
            Error::NotADensityMatrix(what) => write!(f, "not a density matrix: {what}"),
            Error::EmptyClass(c) => write!(f, "class {c} has no training patterns"),
            Error::LabelOutOfRange { label, class_count } => {
                write!(f, "label {label} out of range for {class_count} classes")
            }
            Error::InvalidSpec(what) => write!(f, "invalid specification: {what}"),
            Error::Parse { line, message } => write!(f, "line {line}: {message}"),
        }
    }
}

impl core::error::Error for Error {}
