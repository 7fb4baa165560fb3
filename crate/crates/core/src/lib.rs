//! Quantum-geometric encoding of real feature vectors and the classifiers
//! built on top of it.
//!
//! A real pattern `(x, y)` is mapped through the inverse stereographic
//! projection onto the surface of the Bloch sphere and from there to a pure
//! 2x2 density operator (a *density pattern*). Distances between density
//! patterns are measured with the trace distance; multiplied by the right
//! normalization factor this reproduces the Euclidean distance between the
//! original patterns exactly, so the Nearest Mean Classifier can be expressed
//! entirely in terms of quantum states. Dropping the normalization and
//! replacing class means with *quantum centroids* (uniform mixtures of a
//! class's density patterns) yields a genuinely different classifier that is
//! sensitive to the dispersion of each class, not just its mean.
//!
//! The crate is `no_std` (with `alloc`) and has no global state; every
//! operation is a pure function of its inputs.
//!
//! ```
//! use bloch_core::{encode, FeatureVector};
//! use bloch_core::distance::normalized_trace_distance;
//!
//! let a = encode(&FeatureVector::new([0.0, 0.0]).unwrap()).unwrap();
//! let b = encode(&FeatureVector::new([3.0, 4.0]).unwrap()).unwrap();
//! let d = normalized_trace_distance(&a, &b).unwrap();
//! assert!((d.normalized - 5.0).abs() < 1e-9);
//! ```

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod classify;
pub mod datasets;
pub mod distance;
pub mod encoding;
pub mod error;
pub mod matrix;
pub mod metrics;
pub mod rng;

pub use classify::{
    classify_nmc, classify_qc, discriminant_function, oracle_combine, quantum_discriminant,
    train_nmc, train_qc, LabeledDataset, NmcModel, QcModel, QdfCoefficients, QuantumCentroid,
};
pub use datasets::{generate_gaussian, generate_moon, generate_three_gaussian, GaussianSpec};
pub use distance::{
    euclidean_distance, generalized_normalized_trace_distance, normalized_trace_distance,
    trace_distance, TraceDistanceBreakdown,
};
pub use encoding::{
    bloch_components, encode, encode_generalized, gell_mann_basis, inverse_stereographic,
    stereographic, BlochVector, DensityPattern, FeatureVector, GeneralizedBasis,
    GeneralizedDensityPattern,
};
pub use error::Error;
pub use matrix::CMatrix;
pub use metrics::{confusion, report, ConfusionMatrix, MetricsReport};

/// Tolerance for checks that hold exactly up to floating-point rounding
/// (Hermiticity, unit trace, basis orthogonality).
pub const EXACT_TOL: f64 = 1e-12;

/// Tolerance for checks whose error accumulates over several arithmetic
/// steps (unit norms, purity, round trips, distance identities).
pub const ACCUM_TOL: f64 = 1e-9;
