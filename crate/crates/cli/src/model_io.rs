//! Trained-model files: a flat key-value text format with full-precision
//! floats, so a saved model classifies exactly like the one in memory.

use std::path::Path;

use anyhow::{bail, Context, Result};
use bloch_core::matrix::CMatrix;
use bloch_core::{classify_nmc, classify_qc, FeatureVector, NmcModel, QcModel, QuantumCentroid};
use num_complex::Complex64;

/// A model restored from (or about to be written to) disk.
#[derive(Debug, Clone)]
pub enum TrainedModel {
    Nmc(NmcModel),
    Qc(QcModel),
}

impl TrainedModel {
    pub fn kind(&self) -> &'static str {
        match self {
            TrainedModel::Nmc(_) => "nmc",
            TrainedModel::Qc(_) => "qc",
        }
    }

    pub fn class_count(&self) -> usize {
        match self {
            TrainedModel::Nmc(m) => m.centroids().len(),
            TrainedModel::Qc(m) => m.quantum_centroids().len(),
        }
    }

    pub fn classify(&self, v: &FeatureVector) -> Result<usize> {
        match self {
            TrainedModel::Nmc(m) => Ok(classify_nmc(m, v)?),
            TrainedModel::Qc(m) => Ok(classify_qc(m, v)?),
        }
    }
}

fn floats_csv(values: impl Iterator<Item = f64>) -> String {
    values.map(|v| v.to_string()).collect::<Vec<_>>().join(",")
}

/// Serializes a model to the key-value text format.
pub fn model_to_string(model: &TrainedModel) -> String {
    let mut out = String::new();
    out.push_str(&format!("model = {}\n", model.kind()));
    out.push_str(&format!("classes = {}\n", model.class_count()));
    match model {
        TrainedModel::Nmc(m) => {
            out.push_str(&format!("dim = {}\n", m.centroids()[0].dim()));
            for (i, c) in m.centroids().iter().enumerate() {
                out.push_str(&format!(
                    "centroid_{i} = {}\n",
                    floats_csv(c.coords().iter().copied())
                ));
            }
        }
        TrainedModel::Qc(m) => {
            out.push_str("dim = 2\n");
            for (i, c) in m.quantum_centroids().iter().enumerate() {
                let mm = c.matrix();
                let entries = (0..2).flat_map(|r| (0..2).map(move |q| (r, q)));
                let flat: Vec<f64> = entries.flat_map(|idx| [mm[idx].re, mm[idx].im]).collect();
                out.push_str(&format!(
                    "centroid_{i} = {}\n",
                    floats_csv(flat.into_iter())
                ));
                out.push_str(&format!("members_{i} = {}\n", c.member_count()));
            }
        }
    }
    out
}

pub fn save_model(path: &Path, model: &TrainedModel) -> Result<()> {
    std::fs::write(path, model_to_string(model))
        .with_context(|| format!("cannot write model {}", path.display()))
}

fn parse_floats(raw: &str, expected: usize, key: &str) -> Result<Vec<f64>> {
    let values: Vec<f64> = raw
        .split(',')
        .map(|f| f.trim().parse::<f64>())
        .collect::<Result<_, _>>()
        .with_context(|| format!("bad float list for {key}"))?;
    if values.len() != expected {
        bail!("{key}: expected {expected} values, got {}", values.len());
    }
    Ok(values)
}

/// Parses the key-value model format back into a model.
pub fn model_from_string(text: &str) -> Result<TrainedModel> {
    let cfg = crate::config::ConfigFile::parse(text)?;
    let kind = cfg.get_raw("model").context("missing key: model")?;
    let classes: usize = cfg.get("classes")?.context("missing key: classes")?;
    if classes == 0 {
        bail!("model needs at least one class");
    }
    match kind {
        "nmc" => {
            let dim: usize = cfg.get("dim")?.context("missing key: dim")?;
            let mut centroids = Vec::with_capacity(classes);
            for i in 0..classes {
                let key = format!("centroid_{i}");
                let raw = cfg
                    .get_raw(&key)
                    .with_context(|| format!("missing key: {key}"))?;
                centroids.push(FeatureVector::new(parse_floats(raw, dim, &key)?)?);
            }
            Ok(TrainedModel::Nmc(NmcModel::from_centroids(centroids)?))
        }
        "qc" => {
            let mut centroids = Vec::with_capacity(classes);
            for i in 0..classes {
                let key = format!("centroid_{i}");
                let raw = cfg
                    .get_raw(&key)
                    .with_context(|| format!("missing key: {key}"))?;
                let flat = parse_floats(raw, 8, &key)?;
                let mut m = CMatrix::zeros(2);
                for (e, chunk) in flat.chunks(2).enumerate() {
                    m[(e / 2, e % 2)] = Complex64::new(chunk[0], chunk[1]);
                }
                let members: usize = cfg
                    .get(&format!("members_{i}"))?
                    .with_context(|| format!("missing key: members_{i}"))?;
                centroids.push(QuantumCentroid::from_matrix(m, members)?);
            }
            Ok(TrainedModel::Qc(QcModel::from_centroids(centroids)?))
        }
        other => bail!("unknown model kind {other:?}"),
    }
}

pub fn load_model(path: &Path) -> Result<TrainedModel> {
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("cannot read model {}", path.display()))?;
    model_from_string(&text).with_context(|| format!("cannot parse model {}", path.display()))
}
