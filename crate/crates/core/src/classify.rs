//! Nearest-centroid classification, classical and quantum.
//!
//! The Nearest Mean Classifier (NMC) assigns a pattern to the class whose
//! feature-space centroid is closest in Euclidean distance. Its quantum
//! reformulation replaces patterns with density patterns and the Euclidean
//! distance with the normalized trace distance; for two classes the decision
//! boundary is captured by a discriminant function in either picture.
//!
//! The Quantum Classifier (QC) goes further: each class is summarized by a
//! *quantum centroid*, the uniform mixture of the class's density patterns.
//! That mixture is generally a mixed state and, unlike the classical
//! centroid, changes under uniform rescaling of the data, so it retains
//! dispersion information. Classification uses the raw (un-normalized)
//! trace distance to each quantum centroid.

use alloc::vec;
use alloc::vec::Vec;

use crate::distance::{euclidean_distance, trace_distance};
use crate::encoding::{encode, BlochVector, DensityPattern, FeatureVector};
use crate::error::Error;
use crate::matrix::CMatrix;
use crate::EXACT_TOL;

/// A training set: patterns with class labels in `0..class_count`.
#[derive(Debug, Clone, PartialEq)]
pub struct LabeledDataset {
    patterns: Vec<FeatureVector>,
    labels: Vec<usize>,
    class_count: usize,
}

impl LabeledDataset {
    /// Validates that patterns and labels line up, that all patterns share
    /// one dimension, that every label is in range and that no class is
    /// empty.
    pub fn new(
        patterns: Vec<FeatureVector>,
        labels: Vec<usize>,
        class_count: usize,
    ) -> Result<Self, Error> {
        if patterns.len() != labels.len() {
            return Err(Error::LengthMismatch {
                left: patterns.len(),
                right: labels.len(),
            });
        }
        if class_count == 0 || patterns.is_empty() {
            return Err(Error::InvalidSpec(
                "dataset needs at least one class and one pattern",
            ));
        }
        let dim = patterns[0].dim();
        if let Some(p) = patterns.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: p.dim(),
            });
        }
        let mut sizes = vec![0usize; class_count];
        for &label in &labels {
            if label >= class_count {
                return Err(Error::LabelOutOfRange { label, class_count });
            }
            sizes[label] += 1;
        }
        if let Some(empty) = sizes.iter().position(|&n| n == 0) {
            return Err(Error::EmptyClass(empty));
        }
        Ok(LabeledDataset {
            patterns,
            labels,
            class_count,
        })
    }

    pub fn patterns(&self) -> &[FeatureVector] {
        &self.patterns
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.patterns[0].dim()
    }

    pub fn class_sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.class_count];
        for &label in &self.labels {
            sizes[label] += 1;
        }
        sizes
    }

    /// Patterns of one class, in dataset order.
    pub fn class_patterns(&self, class: usize) -> impl Iterator<Item = &FeatureVector> {
        self.patterns
            .iter()
            .zip(&self.labels)
            .filter(move |(_, &l)| l == class)
            .map(|(p, _)| p)
    }

    /// The subset at the given indices, revalidated (fails if a class loses
    /// all its patterns).
    pub fn subset(&self, indices: &[usize]) -> Result<LabeledDataset, Error> {
        let patterns = indices.iter().map(|&i| self.patterns[i].clone()).collect();
        let labels = indices.iter().map(|&i| self.labels[i]).collect();
        LabeledDataset::new(patterns, labels, self.class_count)
    }
}

/// The Nearest Mean Classifier: one feature-space centroid per class.
#[derive(Debug, Clone, PartialEq)]
pub struct NmcModel {
    centroids: Vec<FeatureVector>,
}

impl NmcModel {
    pub fn centroids(&self) -> &[FeatureVector] {
        &self.centroids
    }

    pub fn from_centroids(centroids: Vec<FeatureVector>) -> Result<Self, Error> {
        if centroids.is_empty() {
            return Err(Error::InvalidSpec("model needs at least one centroid"));
        }
        let dim = centroids[0].dim();
        if let Some(c) = centroids.iter().find(|c| c.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                actual: c.dim(),
            });
        }
        Ok(NmcModel { centroids })
    }
}

/// Fits the NMC: centroid `i` is the arithmetic mean of class `i`.
pub fn train_nmc(data: &LabeledDataset) -> Result<NmcModel, Error> {
    let mut centroids = Vec::with_capacity(data.class_count());
    for class in 0..data.class_count() {
        let mut sum = vec![0.0f64; data.dim()];
        let mut count = 0usize;
        for p in data.class_patterns(class) {
            for (acc, x) in sum.iter_mut().zip(p.coords()) {
                *acc += x;
            }
            count += 1;
        }
        if count == 0 {
            return Err(Error::EmptyClass(class));
        }
        for acc in sum.iter_mut() {
            *acc /= count as f64;
        }
        centroids.push(FeatureVector::new(sum)?);
    }
    Ok(NmcModel { centroids })
}

/// Assigns a pattern to the class with the nearest centroid; ties break
/// toward the lowest class index.
pub fn classify_nmc(model: &NmcModel, v: &FeatureVector) -> Result<usize, Error> {
    let mut best = 0usize;
    let mut best_dist = f64::INFINITY;
    for (i, centroid) in model.centroids.iter().enumerate() {
        let d = euclidean_distance(v, centroid)?;
        if d < best_dist {
            best = i;
            best_dist = d;
        }
    }
    Ok(best)
}

/// Two-class linear discriminant for centroids `a*`, `b*` evaluated at `v`:
/// `2(x_a - x_b) x + 2(y_a - y_b) y + (|b*|^2 - |a*|^2)`. Positive means
/// closer to `a*`, negative closer to `b*`, zero the boundary.
pub fn discriminant_function(
    a_star: &FeatureVector,
    b_star: &FeatureVector,
    v: &FeatureVector,
) -> Result<f64, Error> {
    for arg in [a_star, b_star, v] {
        if arg.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: arg.dim(),
            });
        }
    }
    let (xa, ya) = (a_star.coords()[0], a_star.coords()[1]);
    let (xb, yb) = (b_star.coords()[0], b_star.coords()[1]);
    let (x, y) = (v.coords()[0], v.coords()[1]);
    let norm_a = xa * xa + ya * ya;
    let norm_b = xb * xb + yb * yb;
    Ok(2.0 * (xa - xb) * x + 2.0 * (ya - yb) * y + (norm_b - norm_a))
}

/// Coefficients of the quantum discriminant: the squared factor ratio
/// `K^2 = (1 - r_a3)/(1 - r_b3)` and the direction
/// `F_i = r_a_i - K^2 r_b_i`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QdfCoefficients {
    k_tilde_sq: f64,
    f: [f64; 3],
}

impl QdfCoefficients {
    /// Builds the coefficients from the two (pure) centroid density
    /// patterns. Fails if either centroid sits at the north pole.
    pub fn from_centroids(a_star: &DensityPattern, b_star: &DensityPattern) -> Result<Self, Error> {
        let da = 1.0 - a_star.r3();
        let db = 1.0 - b_star.r3();
        if da < EXACT_TOL || db < EXACT_TOL {
            return Err(Error::SingularNormalization);
        }
        let k_tilde_sq = da / db;
        let ra = a_star.bloch().components();
        let rb = b_star.bloch().components();
        let f = [
            ra[0] - k_tilde_sq * rb[0],
            ra[1] - k_tilde_sq * rb[1],
            ra[2] - k_tilde_sq * rb[2],
        ];
        if f.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFiniteInput);
        }
        Ok(QdfCoefficients { k_tilde_sq, f })
    }

    pub fn k_tilde_sq(&self) -> f64 {
        self.k_tilde_sq
    }

    pub fn f(&self) -> &[f64; 3] {
        &self.f
    }
}

/// Quantum discriminant `F . r + K^2 - 1` at a surface Bloch vector. Its
/// sign agrees with [`discriminant_function`] on the stereographic
/// preimages.
pub fn quantum_discriminant(coeffs: &QdfCoefficients, r: &BlochVector) -> Result<f64, Error> {
    if r.len() != 3 {
        return Err(Error::DimensionMismatch {
            expected: 3,
            actual: r.len(),
        });
    }
    if !r.is_surface() {
        return Err(Error::NotUnitNorm {
            norm_sq: r.norm_sq(),
        });
    }
    let c = r.components();
    Ok(coeffs.f[0] * c[0] + coeffs.f[1] * c[1] + coeffs.f[2] * c[2] + coeffs.k_tilde_sq - 1.0)
}

/// Uniform mixture of a class's density patterns: generally a mixed state.
#[derive(Debug, Clone, PartialEq)]
pub struct QuantumCentroid {
    matrix: CMatrix,
    member_count: usize,
}

impl QuantumCentroid {
    pub fn matrix(&self) -> &CMatrix {
        &self.matrix
    }

    pub fn member_count(&self) -> usize {
        self.member_count
    }

    /// `tr(rho^2)`; 1 only when all members coincide.
    pub fn purity(&self) -> f64 {
        self.matrix.purity()
    }

    /// Rebuilds a centroid from a stored matrix (validates the
    /// density-operator requirements).
    pub fn from_matrix(matrix: CMatrix, member_count: usize) -> Result<Self, Error> {
        if matrix.dim() != 2 {
            return Err(Error::DimensionMismatch {
                expected: 2,
                actual: matrix.dim(),
            });
        }
        if member_count == 0 {
            return Err(Error::InvalidSpec(
                "quantum centroid needs at least one member",
            ));
        }
        matrix.validate_density()?;
        Ok(QuantumCentroid {
            matrix,
            member_count,
        })
    }
}

/// The Quantum Classifier: one quantum centroid per class.
#[derive(Debug, Clone, PartialEq)]
pub struct QcModel {
    quantum_centroids: Vec<QuantumCentroid>,
}

impl QcModel {
    pub fn quantum_centroids(&self) -> &[QuantumCentroid] {
        &self.quantum_centroids
    }

    pub fn from_centroids(quantum_centroids: Vec<QuantumCentroid>) -> Result<Self, Error> {
        if quantum_centroids.is_empty() {
            return Err(Error::InvalidSpec("model needs at least one centroid"));
        }
        Ok(QcModel { quantum_centroids })
    }
}

/// Fits the QC on two-feature data: centroid `i` is the uniform mixture of
/// the encodings of class `i`.
pub fn train_qc(data: &LabeledDataset) -> Result<QcModel, Error> {
    if data.dim() != 2 {
        return Err(Error::DimensionMismatch {
            expected: 2,
            actual: data.dim(),
        });
    }
    let mut quantum_centroids = Vec::with_capacity(data.class_count());
    for class in 0..data.class_count() {
        let mut sum = CMatrix::zeros(2);
        let mut count = 0usize;
        for p in data.class_patterns(class) {
            sum = sum + *encode(p)?.matrix();
            count += 1;
        }
        if count == 0 {
            return Err(Error::EmptyClass(class));
        }
        quantum_centroids.push(QuantumCentroid {
            matrix: sum.scale(1.0 / count as f64),
            member_count: count,
        });
    }
    Ok(QcModel { quantum_centroids })
}

/// Assigns a pattern to the class whose quantum centroid is nearest in raw
/// trace distance (no normalization factor); ties break toward the lowest
/// class index.
pub fn classify_qc(model: &QcModel, v: &FeatureVector) -> Result<usize, Error> {
    let rho = encode(v)?;
    let mut best = 0usize;
    let mut best_dist = f64::INFINITY;
    for (i, centroid) in model.quantum_centroids.iter().enumerate() {
        let d = trace_distance(rho.matrix(), centroid.matrix())?;
        if d < best_dist {
            best = i;
            best_dist = d;
        }
    }
    Ok(best)
}

/// The per-pattern selection rule that keeps whichever of two prediction
/// streams is right; when both are wrong the first stream's label is kept.
/// Its error rate lower-bounds any combination of the two classifiers.
pub fn oracle_combine(
    preds_a: &[usize],
    preds_b: &[usize],
    truth: &[usize],
) -> Result<Vec<usize>, Error> {
    if preds_a.len() != preds_b.len() {
        return Err(Error::LengthMismatch {
            left: preds_a.len(),
            right: preds_b.len(),
        });
    }
    if preds_a.len() != truth.len() {
        return Err(Error::LengthMismatch {
            left: preds_a.len(),
            right: truth.len(),
        });
    }
    Ok(preds_a
        .iter()
        .zip(preds_b)
        .zip(truth)
        .map(|((&a, &b), &t)| if a == t || b == t { t } else { a })
        .collect())
}
