//! Dataset selection shared by every subcommand.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use anyhow::{Context, Result};
use bloch_core::datasets::{dataset_from_csv, generate_gaussian, generate_moon, GaussianSpec};
use bloch_core::LabeledDataset;

/// Which dataset a command operates on: one of the built-in generators or
/// an external CSV file (`csv:path`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DatasetSelector {
    Gaussian,
    ThreeGaussian,
    Moon,
    Csv(PathBuf),
}

impl FromStr for DatasetSelector {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(DatasetSelector::Gaussian),
            "three-gaussian" => Ok(DatasetSelector::ThreeGaussian),
            "moon" => Ok(DatasetSelector::Moon),
            other => {
                if let Some(path) = other.strip_prefix("csv:") {
                    if path.is_empty() {
                        anyhow::bail!("csv selector needs a path, e.g. csv:data.csv");
                    }
                    Ok(DatasetSelector::Csv(PathBuf::from(path)))
                } else {
                    anyhow::bail!(
                        "unknown dataset {other:?} (expected gaussian, three-gaussian, moon or csv:PATH)"
                    )
                }
            }
        }
    }
}

impl fmt::Display for DatasetSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DatasetSelector::Gaussian => write!(f, "gaussian"),
            DatasetSelector::ThreeGaussian => write!(f, "three-gaussian"),
            DatasetSelector::Moon => write!(f, "moon"),
            DatasetSelector::Csv(path) => write!(f, "csv:{}", path.display()),
        }
    }
}

/// Generator knobs a command may override.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenParams {
    /// Patterns per class; `None` keeps each generator's default
    /// (100 for gaussian and moon, 150 for three-gaussian).
    pub n_per_class: Option<usize>,
    /// Noise standard deviation for the moon generator.
    pub noise_sigma: f64,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            n_per_class: None,
            noise_sigma: 0.1,
        }
    }
}

/// Produces the dataset behind a selector: generated for the built-ins,
/// loaded from disk for `csv:`.
pub fn realize(
    selector: &DatasetSelector,
    params: &GenParams,
    seed: u64,
) -> Result<LabeledDataset> {
    Ok(realize_with_labels(selector, params, seed)?.0)
}

/// Like [`realize`], additionally returning the file's original label set
/// (ascending, index-aligned with the remapped labels) for `csv:` sources.
pub fn realize_with_labels(
    selector: &DatasetSelector,
    params: &GenParams,
    seed: u64,
) -> Result<(LabeledDataset, Option<Vec<i64>>)> {
    match selector {
        DatasetSelector::Gaussian => {
            let spec = GaussianSpec::two_class(params.n_per_class.unwrap_or(100));
            Ok((generate_gaussian(&spec, seed)?, None))
        }
        DatasetSelector::ThreeGaussian => {
            let spec = GaussianSpec::three_class(params.n_per_class.unwrap_or(150));
            Ok((generate_gaussian(&spec, seed)?, None))
        }
        DatasetSelector::Moon => Ok((
            generate_moon(params.n_per_class.unwrap_or(100), params.noise_sigma, seed)?,
            None,
        )),
        DatasetSelector::Csv(path) => {
            let (data, labels) = load_csv(path)?;
            Ok((data, Some(labels)))
        }
    }
}

/// Loads a CSV dataset file; returns the dataset and the original label set
/// in ascending order (index-aligned with the remapped labels).
pub fn load_csv(path: &std::path::Path) -> Result<(LabeledDataset, Vec<i64>)> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read dataset {}", path.display()))?;
    dataset_from_csv(&text).with_context(|| format!("cannot parse {}", path.display()))
}

/// Human-readable class size summary, e.g. `200 patterns, 2 classes (100, 100)`.
pub fn describe(data: &LabeledDataset) -> String {
    let sizes: Vec<String> = data.class_sizes().iter().map(|n| n.to_string()).collect();
    format!(
        "{} patterns, {} classes ({})",
        data.len(),
        data.class_count(),
        sizes.join(", ")
    )
}

/// [`describe`], extended with the original label set of a loaded file.
pub fn describe_with_labels(data: &LabeledDataset, labels: Option<&[i64]>) -> String {
    match labels {
        None => describe(data),
        Some(set) => {
            let shown: Vec<String> = set.iter().map(|l| l.to_string()).collect();
            format!("{}, label set [{}]", describe(data), shown.join(", "))
        }
    }
}
