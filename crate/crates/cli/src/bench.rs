//! The benchmark harness: repeated generate/train/evaluate runs with
//! mean and standard-deviation aggregation of every index.

use std::str::FromStr;

use anyhow::{bail, Context, Result};
use bloch_core::rng::Xoshiro256;
use bloch_core::{
    classify_nmc, classify_qc, confusion, oracle_combine, report, train_nmc, train_qc,
    LabeledDataset, MetricsReport,
};

use crate::report_fmt::{index_labels, index_values, BenchmarkRow, BenchmarkTable, IndexStats};
use crate::selector::{realize, DatasetSelector, GenParams};

/// Offset mixed into the repetition seed for the holdout shuffle, so the
/// split draws from a stream independent of the generator's.
const SPLIT_STREAM: u64 = 0x9E37_79B9_7F4A_7C15;

/// How models are evaluated in each repetition.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EvalMode {
    /// Train and evaluate on the full dataset.
    Resubstitution,
    /// Hold out this fraction of patterns (seeded shuffle) for evaluation
    /// and train on the rest.
    Holdout(f64),
}

impl EvalMode {
    pub fn describe(&self) -> String {
        match self {
            EvalMode::Resubstitution => "resubstitution".to_string(),
            EvalMode::Holdout(f) => format!("holdout {f}"),
        }
    }
}

/// Which classifier rows a benchmark reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassifierSet {
    pub nmc: bool,
    pub qc: bool,
    pub oracle: bool,
}

impl Default for ClassifierSet {
    fn default() -> Self {
        ClassifierSet {
            nmc: true,
            qc: true,
            oracle: true,
        }
    }
}

impl FromStr for ClassifierSet {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut set = ClassifierSet {
            nmc: false,
            qc: false,
            oracle: false,
        };
        for part in s.split(',') {
            match part.trim() {
                "nmc" => set.nmc = true,
                "qc" => set.qc = true,
                "oracle" => set.oracle = true,
                other => bail!("unknown classifier {other:?} (expected nmc, qc, oracle)"),
            }
        }
        if !(set.nmc || set.qc || set.oracle) {
            bail!("at least one classifier must be selected");
        }
        Ok(set)
    }
}

/// Everything one benchmark run needs.
#[derive(Debug, Clone)]
pub struct BenchmarkSettings {
    pub dataset: DatasetSelector,
    pub gen: GenParams,
    pub seed: u64,
    pub reps: usize,
    pub eval: EvalMode,
    pub classifiers: ClassifierSet,
}

impl BenchmarkSettings {
    fn validate(&self) -> Result<()> {
        if self.reps == 0 {
            bail!("reps must be at least 1");
        }
        if let EvalMode::Holdout(f) = self.eval {
            if !(f > 0.0 && f < 1.0) {
                bail!("holdout fraction must be strictly between 0 and 1");
            }
        }
        Ok(())
    }
}

/// The evaluation half of one repetition: predictions of each classifier on
/// the evaluation patterns plus the matching truth labels.
struct RepPredictions {
    truth: Vec<usize>,
    nmc: Vec<usize>,
    qc: Vec<usize>,
    class_count: usize,
}

fn split_indices(n: usize, fraction: f64, rng: &mut Xoshiro256) -> (Vec<usize>, Vec<usize>) {
    let mut order: Vec<usize> = (0..n).collect();
    // Fisher-Yates from the back.
    for i in (1..n).rev() {
        order.swap(i, rng.next_index(i + 1));
    }
    let test_count = ((n as f64 * fraction).round() as usize).clamp(1, n - 1);
    let test = order[..test_count].to_vec();
    let train = order[test_count..].to_vec();
    (train, test)
}

fn run_repetition(settings: &BenchmarkSettings, rep: usize) -> Result<RepPredictions> {
    let rep_seed = settings.seed.wrapping_add(rep as u64);
    let data = realize(&settings.dataset, &settings.gen, rep_seed)?;
    let class_count = data.class_count();
    // The evaluation side is plain patterns + truth: unlike the training
    // side it is allowed to miss classes under a small holdout.
    let (train, eval_patterns, truth): (LabeledDataset, Vec<_>, Vec<usize>) = match settings.eval {
        EvalMode::Resubstitution => (
            data.clone(),
            data.patterns().to_vec(),
            data.labels().to_vec(),
        ),
        EvalMode::Holdout(f) => {
            let mut rng = Xoshiro256::new(rep_seed.wrapping_add(SPLIT_STREAM));
            let (train_idx, test_idx) = split_indices(data.len(), f, &mut rng);
            let train = data
                .subset(&train_idx)
                .context("holdout split left a class without training patterns")?;
            let patterns = test_idx
                .iter()
                .map(|&i| data.patterns()[i].clone())
                .collect();
            let labels = test_idx.iter().map(|&i| data.labels()[i]).collect();
            (train, patterns, labels)
        }
    };

    let nmc_model = train_nmc(&train)?;
    let qc_model = train_qc(&train)?;
    let mut nmc_preds = Vec::with_capacity(eval_patterns.len());
    let mut qc_preds = Vec::with_capacity(eval_patterns.len());
    for p in &eval_patterns {
        nmc_preds.push(classify_nmc(&nmc_model, p)?);
        qc_preds.push(classify_qc(&qc_model, p)?);
    }
    Ok(RepPredictions {
        truth,
        nmc: nmc_preds,
        qc: qc_preds,
        class_count,
    })
}

fn aggregate(name: &str, reports: &[MetricsReport]) -> BenchmarkRow {
    let columns = index_values(&reports[0]).len();
    let mut stats = Vec::with_capacity(columns);
    for c in 0..columns {
        let values: Vec<f64> = reports
            .iter()
            .map(|r| index_values(r)[c])
            .filter(|v| !v.is_nan())
            .collect();
        if values.is_empty() {
            stats.push(IndexStats {
                mean: f64::NAN,
                sd: f64::NAN,
            });
            continue;
        }
        let n = values.len() as f64;
        let mean = values.iter().sum::<f64>() / n;
        let sd = if values.len() < 2 {
            0.0
        } else {
            (values.iter().map(|v| (v - mean) * (v - mean)).sum::<f64>() / (n - 1.0)).sqrt()
        };
        stats.push(IndexStats { mean, sd });
    }
    BenchmarkRow {
        name: name.to_string(),
        stats,
    }
}

/// The per-repetition reports of every requested classifier.
pub struct BenchmarkOutcome {
    pub class_count: usize,
    pub nmc: Vec<MetricsReport>,
    pub qc: Vec<MetricsReport>,
    pub oracle: Vec<MetricsReport>,
}

/// Runs all repetitions and collects per-classifier reports.
pub fn run_benchmark(settings: &BenchmarkSettings) -> Result<BenchmarkOutcome> {
    settings.validate()?;
    let mut outcome = BenchmarkOutcome {
        class_count: 0,
        nmc: Vec::new(),
        qc: Vec::new(),
        oracle: Vec::new(),
    };
    for rep in 0..settings.reps {
        let preds =
            run_repetition(settings, rep).with_context(|| format!("repetition {rep} failed"))?;
        outcome.class_count = preds.class_count;
        let wanted = settings.classifiers;
        if wanted.nmc {
            let cm = confusion(&preds.nmc, &preds.truth, preds.class_count)?;
            outcome.nmc.push(report(&cm)?);
        }
        if wanted.qc {
            let cm = confusion(&preds.qc, &preds.truth, preds.class_count)?;
            outcome.qc.push(report(&cm)?);
        }
        if wanted.oracle {
            let combined = oracle_combine(&preds.nmc, &preds.qc, &preds.truth)?;
            let cm = confusion(&combined, &preds.truth, preds.class_count)?;
            outcome.oracle.push(report(&cm)?);
        }
    }
    Ok(outcome)
}

/// Runs the benchmark and aggregates it into a renderable table.
pub fn benchmark_table(settings: &BenchmarkSettings) -> Result<BenchmarkTable> {
    let outcome = run_benchmark(settings)?;
    let mut rows = Vec::new();
    if !outcome.nmc.is_empty() {
        rows.push(aggregate("NMC", &outcome.nmc));
    }
    if !outcome.qc.is_empty() {
        rows.push(aggregate("QC", &outcome.qc));
    }
    if !outcome.oracle.is_empty() {
        rows.push(aggregate("NMC-QC", &outcome.oracle));
    }
    let preamble = format!(
        "dataset: {}  seed: {}  reps: {}  eval: {}",
        settings.dataset,
        settings.seed,
        settings.reps,
        settings.eval.describe()
    );
    Ok(BenchmarkTable {
        preamble,
        labels: index_labels(outcome.class_count),
        rows,
    })
}
