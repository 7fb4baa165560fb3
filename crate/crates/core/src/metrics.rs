//! Confusion matrices and the statistical indices derived from them.
//!
//! Counts are kept as integers and every index is an exact integer ratio,
//! so identities such as `E + TP/C = 1` survive down to the last bit;
//! rounding happens only when values are displayed.

use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// Per-class one-vs-rest tallies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassTally {
    /// Patterns of this class predicted as this class.
    pub true_positive: u64,
    /// Patterns of other classes predicted as other classes.
    pub true_negative: u64,
    /// Patterns of other classes predicted as this class.
    pub false_positive: u64,
    /// Patterns of this class predicted as another class.
    pub false_negative: u64,
}

/// A `C x C` matrix of prediction counts; rows are truth, columns are
/// predictions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConfusionMatrix {
    counts: Vec<u64>,
    class_count: usize,
    tallies: Vec<ClassTally>,
}

impl ConfusionMatrix {
    /// Builds a confusion matrix directly from counts (row-major).
    pub fn from_counts(counts: Vec<u64>, class_count: usize) -> Result<Self, Error> {
        if class_count == 0 || counts.len() != class_count * class_count {
            return Err(Error::InvalidSpec(
                "counts must form a square class_count matrix",
            ));
        }
        let mut cm = ConfusionMatrix {
            counts,
            class_count,
            tallies: Vec::new(),
        };
        cm.tallies = (0..class_count).map(|j| cm.tally_for(j)).collect();
        Ok(cm)
    }

    pub fn class_count(&self) -> usize {
        self.class_count
    }

    /// Count of patterns of true class `i` predicted as class `j`.
    pub fn count(&self, truth: usize, pred: usize) -> u64 {
        self.counts[truth * self.class_count + pred]
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    pub fn row_sum(&self, truth: usize) -> u64 {
        (0..self.class_count).map(|j| self.count(truth, j)).sum()
    }

    pub fn col_sum(&self, pred: usize) -> u64 {
        (0..self.class_count).map(|i| self.count(i, pred)).sum()
    }

    /// One-vs-rest tallies for every class.
    pub fn tallies(&self) -> &[ClassTally] {
        &self.tallies
    }

    fn tally_for(&self, class: usize) -> ClassTally {
        let tp = self.count(class, class);
        let row = self.row_sum(class);
        let col = self.col_sum(class);
        ClassTally {
            true_positive: tp,
            false_negative: row - tp,
            false_positive: col - tp,
            true_negative: (self.total() + tp) - row - col,
        }
    }
}

/// Tallies predictions against ground truth into a confusion matrix.
pub fn confusion(
    preds: &[usize],
    truth: &[usize],
    class_count: usize,
) -> Result<ConfusionMatrix, Error> {
    if preds.len() != truth.len() {
        return Err(Error::LengthMismatch {
            left: preds.len(),
            right: truth.len(),
        });
    }
    let mut counts = vec![0u64; class_count * class_count];
    for (&p, &t) in preds.iter().zip(truth) {
        if p >= class_count {
            return Err(Error::LabelOutOfRange {
                label: p,
                class_count,
            });
        }
        if t >= class_count {
            return Err(Error::LabelOutOfRange {
                label: t,
                class_count,
            });
        }
        counts[t * class_count + p] += 1;
    }
    ConfusionMatrix::from_counts(counts, class_count)
}

/// The statistical indices of one evaluation.
///
/// Rates (TPR, FPR, TNR, FNR) are one-vs-rest per class and averaged
/// uniformly over the classes for which they are defined. The error `E` and
/// precision use aggregate tallies; accuracy is the mean of the per-class
/// one-vs-rest accuracies. For two classes these conventions make
/// `TPR = TNR`, `FPR = FNR` and `Ac = Pr` hold exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct MetricsReport {
    /// Aggregate error `1 - TP/C`.
    pub error: f64,
    /// Fraction of each class's patterns that were misclassified.
    pub per_class_errors: Vec<f64>,
    /// Mean over classes of `(TP_j + TN_j) / C`.
    pub accuracy: f64,
    /// Aggregate precision `TP / (TP + FP)`.
    pub precision: f64,
    /// Cohen's kappa `(Pr(a) - Pr(e)) / (1 - Pr(e))`; `None` when the
    /// expected agreement `Pr(e)` is 1 and kappa is undefined.
    pub cohen_k: Option<f64>,
    pub true_positive_rate: f64,
    pub false_positive_rate: f64,
    pub true_negative_rate: f64,
    pub false_negative_rate: f64,
}

fn mean_of_defined(parts: impl Iterator<Item = (u64, u64)>) -> f64 {
    let mut sum = 0.0;
    let mut n = 0usize;
    for (num, den) in parts {
        if den > 0 {
            sum += num as f64 / den as f64;
            n += 1;
        }
    }
    if n == 0 {
        f64::NAN
    } else {
        sum / n as f64
    }
}

/// Derives every index from a confusion matrix with at least one count.
pub fn report(cm: &ConfusionMatrix) -> Result<MetricsReport, Error> {
    let total = cm.total();
    if total == 0 {
        return Err(Error::InvalidSpec(
            "confusion matrix has no evaluated patterns",
        ));
    }
    let tallies = cm.tallies();
    let tp: u64 = tallies.iter().map(|t| t.true_positive).sum();
    let tn: u64 = tallies.iter().map(|t| t.true_negative).sum();
    let fp: u64 = tallies.iter().map(|t| t.false_positive).sum();

    let error = (total - tp) as f64 / total as f64;
    let per_class_errors = (0..cm.class_count())
        .map(|j| {
            let row = cm.row_sum(j);
            if row == 0 {
                f64::NAN
            } else {
                (row - cm.count(j, j)) as f64 / row as f64
            }
        })
        .collect();
    let accuracy = (tp + tn) as f64 / (cm.class_count() as u64 * total) as f64;
    let precision = tp as f64 / (tp + fp) as f64;

    let true_positive_rate = mean_of_defined(
        tallies
            .iter()
            .map(|t| (t.true_positive, t.true_positive + t.false_negative)),
    );
    let false_negative_rate = mean_of_defined(
        tallies
            .iter()
            .map(|t| (t.false_negative, t.false_negative + t.true_positive)),
    );
    let true_negative_rate = mean_of_defined(
        tallies
            .iter()
            .map(|t| (t.true_negative, t.true_negative + t.false_positive)),
    );
    let false_positive_rate = mean_of_defined(
        tallies
            .iter()
            .map(|t| (t.false_positive, t.false_positive + t.true_negative)),
    );

    // Cohen's kappa from observed agreement TP/C and the marginal-product
    // expected agreement sum_j row_j col_j / C^2.
    let chance_sum: u64 = (0..cm.class_count())
        .map(|j| cm.row_sum(j) * cm.col_sum(j))
        .sum();
    let total_sq = total * total;
    let cohen_k = if chance_sum == total_sq {
        None
    } else {
        let pa = tp as f64 / total as f64;
        let pe = chance_sum as f64 / total_sq as f64;
        Some((pa - pe) / (1.0 - pe))
    };

    Ok(MetricsReport {
        error,
        per_class_errors,
        accuracy,
        precision,
        cohen_k,
        true_positive_rate,
        false_positive_rate,
        true_negative_rate,
        false_negative_rate,
    })
}
