//! Seeded synthetic dataset generators and the CSV codec.
//!
//! Generators stream from one [`Xoshiro256`] state, class by class and
//! pattern by pattern, so a seed pins the dataset byte-for-byte across
//! platforms. The CSV format is one pattern per line: comma-separated
//! feature values with a trailing integer class label, optionally preceded
//! by a single header line (auto-detected on load).

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use libm::{cos, sin, sqrt};

use crate::classify::LabeledDataset;
use crate::encoding::FeatureVector;
use crate::error::Error;
use crate::rng::Xoshiro256;

/// One Gaussian class: mean, per-axis variances and sample count.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassGaussian {
    pub mean: [f64; 2],
    /// Diagonal of the covariance matrix (variances, not deviations).
    pub variance: [f64; 2],
    pub count: usize,
}

/// A mixture of axis-aligned Gaussian classes.
#[derive(Debug, Clone, PartialEq)]
pub struct GaussianSpec {
    classes: Vec<ClassGaussian>,
}

impl GaussianSpec {
    pub fn new(classes: Vec<ClassGaussian>) -> Result<Self, Error> {
        if classes.is_empty() {
            return Err(Error::InvalidSpec("at least one class is required"));
        }
        for c in &classes {
            if c.count == 0 {
                return Err(Error::InvalidSpec("class counts must be positive"));
            }
            if c.variance.iter().any(|&v| !v.is_finite() || v <= 0.0) {
                return Err(Error::InvalidSpec("variances must be positive"));
            }
            if c.mean.iter().any(|m| !m.is_finite()) {
                return Err(Error::InvalidSpec("means must be finite"));
            }
        }
        Ok(GaussianSpec { classes })
    }

    pub fn classes(&self) -> &[ClassGaussian] {
        &self.classes
    }

    /// The benchmark two-class mixture: means (1,1) and (2,2), variances
    /// (20,50) and (5,5), 100 patterns each.
    pub fn two_class(per_class: usize) -> Self {
        GaussianSpec {
            classes: alloc::vec![
                ClassGaussian {
                    mean: [1.0, 1.0],
                    variance: [20.0, 50.0],
                    count: per_class
                },
                ClassGaussian {
                    mean: [2.0, 2.0],
                    variance: [5.0, 5.0],
                    count: per_class
                },
            ],
        }
    }

    /// The benchmark three-class mixture: means (-3,-3), (5,5), (7,7) with
    /// variances (50,100), (10,5), (30,70).
    pub fn three_class(per_class: usize) -> Self {
        GaussianSpec {
            classes: alloc::vec![
                ClassGaussian {
                    mean: [-3.0, -3.0],
                    variance: [50.0, 100.0],
                    count: per_class
                },
                ClassGaussian {
                    mean: [5.0, 5.0],
                    variance: [10.0, 5.0],
                    count: per_class
                },
                ClassGaussian {
                    mean: [7.0, 7.0],
                    variance: [30.0, 70.0],
                    count: per_class
                },
            ],
        }
    }
}

/// Samples a Gaussian mixture dataset, deterministic per seed. Patterns are
/// emitted class by class; each pattern draws its x then y deviate.
pub fn generate_gaussian(spec: &GaussianSpec, seed: u64) -> Result<LabeledDataset, Error> {
    GaussianSpec::new(spec.classes.clone())?;
    let mut rng = Xoshiro256::new(seed);
    let total: usize = spec.classes.iter().map(|c| c.count).sum();
    let mut patterns = Vec::with_capacity(total);
    let mut labels = Vec::with_capacity(total);
    for (label, class) in spec.classes.iter().enumerate() {
        let sd = [sqrt(class.variance[0]), sqrt(class.variance[1])];
        for _ in 0..class.count {
            let x = class.mean[0] + sd[0] * rng.next_gaussian();
            let y = class.mean[1] + sd[1] * rng.next_gaussian();
            patterns.push(FeatureVector::new([x, y])?);
            labels.push(label);
        }
    }
    LabeledDataset::new(patterns, labels, spec.classes.len())
}

/// The three-class Gaussian benchmark with 150 patterns per class.
pub fn generate_three_gaussian(seed: u64) -> LabeledDataset {
    generate_gaussian(&GaussianSpec::three_class(150), seed).expect("built-in spec is always valid")
}

/// Two interleaving half-circle classes with isotropic Gaussian noise.
///
/// Class 0 walks the upper unit half-circle `(cos t, sin t)`; class 1 is
/// that arc reflected and shifted, `(1 - cos t, 1/2 - sin t)`, for `t`
/// evenly spaced on `[0, pi]`. With `noise_sigma = 0` the points sit
/// exactly on the two arcs.
pub fn generate_moon(
    n_per_class: usize,
    noise_sigma: f64,
    seed: u64,
) -> Result<LabeledDataset, Error> {
    if n_per_class == 0 {
        return Err(Error::InvalidSpec("class counts must be positive"));
    }
    if !noise_sigma.is_finite() || noise_sigma < 0.0 {
        return Err(Error::InvalidSpec(
            "noise sigma must be finite and nonnegative",
        ));
    }
    let mut rng = Xoshiro256::new(seed);
    let mut patterns = Vec::with_capacity(2 * n_per_class);
    let mut labels = Vec::with_capacity(2 * n_per_class);
    let step = if n_per_class == 1 {
        0.0
    } else {
        core::f64::consts::PI / (n_per_class - 1) as f64
    };
    for class in 0..2usize {
        for i in 0..n_per_class {
            let t = step * i as f64;
            let (mut x, mut y) = if class == 0 {
                (cos(t), sin(t))
            } else {
                (1.0 - cos(t), 0.5 - sin(t))
            };
            if noise_sigma > 0.0 {
                x += noise_sigma * rng.next_gaussian();
                y += noise_sigma * rng.next_gaussian();
            }
            patterns.push(FeatureVector::new([x, y])?);
            labels.push(class);
        }
    }
    LabeledDataset::new(patterns, labels, 2)
}

/// Serializes a dataset to CSV: feature values then the integer label, one
/// pattern per line, no header. Floats print in shortest round-trip form,
/// so save-then-load is the identity.
pub fn dataset_to_csv(data: &LabeledDataset) -> String {
    let mut out = String::new();
    for (pattern, label) in data.patterns().iter().zip(data.labels()) {
        for x in pattern.coords() {
            out.push_str(&format!("{x},"));
        }
        out.push_str(&format!("{label}\n"));
    }
    out
}

/// Parses CSV text into a dataset plus the sorted original label set.
///
/// Labels may be any integers (for example -1/+1); they are remapped to
/// `0..k` in ascending order and the original values are returned alongside
/// the dataset, index-aligned with the new labels. A single leading header
/// line is skipped when its fields do not parse as numbers.
pub fn dataset_from_csv(text: &str) -> Result<(LabeledDataset, Vec<i64>), Error> {
    let mut rows: Vec<(Vec<f64>, i64)> = Vec::new();
    let mut lines = text.lines().enumerate().peekable();

    if let Some((_, first)) = lines.peek() {
        if looks_like_header(first) {
            lines.next();
        }
    }
    for (idx, line) in lines {
        let line_no = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        let fields: Vec<&str> = trimmed.split(',').collect();
        if fields.len() < 2 {
            return Err(Error::Parse {
                line: line_no,
                message: "expected at least one feature and a label".to_string(),
            });
        }
        let mut coords = Vec::with_capacity(fields.len() - 1);
        for f in &fields[..fields.len() - 1] {
            let v: f64 = f.trim().parse().map_err(|_| Error::Parse {
                line: line_no,
                message: format!("cannot parse feature value {:?}", f.trim()),
            })?;
            if !v.is_finite() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "feature value is not finite".to_string(),
                });
            }
            coords.push(v);
        }
        let label_field = fields[fields.len() - 1].trim();
        let label: i64 = parse_label(label_field).ok_or_else(|| Error::Parse {
            line: line_no,
            message: format!("cannot parse class label {label_field:?}"),
        })?;
        rows.push((coords, label));
    }
    if rows.is_empty() {
        return Err(Error::Parse {
            line: 0,
            message: "no data rows".to_string(),
        });
    }

    let mut label_set: Vec<i64> = rows.iter().map(|(_, l)| *l).collect();
    label_set.sort_unstable();
    label_set.dedup();

    let mut patterns = Vec::with_capacity(rows.len());
    let mut labels = Vec::with_capacity(rows.len());
    for (coords, label) in rows {
        patterns.push(FeatureVector::new(coords)?);
        labels.push(
            label_set
                .binary_search(&label)
                .expect("label was collected above"),
        );
    }
    let data = LabeledDataset::new(patterns, labels, label_set.len())?;
    Ok((data, label_set))
}

/// Labels are integers, but files in the wild often write them as floats
/// (`-1.0`, `2.0`); those are accepted when they are exactly integral.
fn parse_label(field: &str) -> Option<i64> {
    if let Ok(v) = field.parse::<i64>() {
        return Some(v);
    }
    let f: f64 = field.parse().ok()?;
    (libm::floor(f) == f && libm::fabs(f) < i64::MAX as f64).then_some(f as i64)
}

fn looks_like_header(line: &str) -> bool {
    line.trim()
        .split(',')
        .any(|field| !field.trim().is_empty() && field.trim().parse::<f64>().is_err())
}
