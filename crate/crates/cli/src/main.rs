use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use bloch_cli::bench::{benchmark_table, BenchmarkSettings, ClassifierSet, EvalMode};
use bloch_cli::config::{merge, ConfigFile};
use bloch_cli::model_io::{load_model, save_model, TrainedModel};
use bloch_cli::plot::render_svg;
use bloch_cli::report_fmt::key_value_block;
use bloch_cli::selector::{
    describe, describe_with_labels, realize, realize_with_labels, DatasetSelector, GenParams,
};
use bloch_core::datasets::dataset_to_csv;
use bloch_core::{confusion, report, train_nmc, train_qc};

#[derive(Parser)]
#[command(
    name = "blochc",
    version,
    about = "Bloch-sphere pattern classification benchmark"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ClassifierArg {
    Nmc,
    Qc,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Table,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a synthetic dataset and write it as CSV.
    Generate {
        /// Dataset to generate: gaussian, three-gaussian or moon.
        dataset: DatasetSelector,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Patterns per class (generator default when omitted).
        #[arg(long)]
        n: Option<usize>,
        /// Noise standard deviation (moon only).
        #[arg(long, default_value_t = 0.1)]
        noise: f64,
        /// Output file; defaults to DATASET.csv.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Train a classifier and write the model file.
    Train {
        /// Training data: gaussian, three-gaussian, moon or csv:PATH.
        dataset: DatasetSelector,
        #[arg(long, value_enum)]
        classifier: ClassifierArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0.1)]
        noise: f64,
        /// Model file to write; defaults to CLASSIFIER.model.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Classify a dataset with a saved model; writes feature,label CSV.
    Classify {
        /// Data to classify: gaussian, three-gaussian, moon or csv:PATH.
        dataset: DatasetSelector,
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0.1)]
        noise: f64,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run repeated train/evaluate comparisons and print aggregated tables.
    Benchmark {
        #[arg(long)]
        dataset: Option<DatasetSelector>,
        #[arg(long)]
        seed: Option<u64>,
        /// Number of seeded repetitions.
        #[arg(long)]
        reps: Option<usize>,
        /// Evaluate on a held-out fraction instead of resubstitution.
        #[arg(long)]
        holdout: Option<f64>,
        /// Comma-separated subset of nmc,qc,oracle.
        #[arg(long)]
        classifiers: Option<ClassifierSet>,
        #[arg(long, value_enum)]
        format: Option<FormatArg>,
        /// Print full-precision numbers instead of three decimals.
        #[arg(long, default_value_t = false)]
        full_precision: bool,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        noise: Option<f64>,
        /// Key-value configuration file; flags override its values.
        #[arg(long)]
        config: Option<PathBuf>,
        /// Output file (stdout when omitted).
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Render a decision-region plot as SVG.
    Plot {
        /// Data to plot: gaussian, three-gaussian, moon or csv:PATH.
        dataset: DatasetSelector,
        #[arg(long, value_enum)]
        classifier: ClassifierArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0.1)]
        noise: f64,
        /// SVG file to write; defaults to DATASET-CLASSIFIER.svg.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn train_on(data: &bloch_core::LabeledDataset, which: ClassifierArg) -> Result<TrainedModel> {
    Ok(match which {
        ClassifierArg::Nmc => TrainedModel::Nmc(train_nmc(data)?),
        ClassifierArg::Qc => TrainedModel::Qc(train_qc(data)?),
    })
}

fn write_or_print(out: Option<&PathBuf>, content: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, content)
            .with_context(|| format!("cannot write {}", path.display())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_generate(
    dataset: DatasetSelector,
    seed: u64,
    n: Option<usize>,
    noise: f64,
    out: Option<PathBuf>,
) -> Result<()> {
    if matches!(dataset, DatasetSelector::Csv(_)) {
        anyhow::bail!("generate needs a synthetic dataset selector, not csv:");
    }
    let params = GenParams {
        n_per_class: n,
        noise_sigma: noise,
    };
    let data = realize(&dataset, &params, seed)?;
    let path = out.unwrap_or_else(|| PathBuf::from(format!("{dataset}.csv")));
    std::fs::write(&path, dataset_to_csv(&data))
        .with_context(|| format!("cannot write {}", path.display()))?;
    println!("wrote {}: {}", path.display(), describe(&data));
    Ok(())
}

fn cmd_train(
    dataset: DatasetSelector,
    classifier: ClassifierArg,
    seed: u64,
    n: Option<usize>,
    noise: f64,
    out: Option<PathBuf>,
) -> Result<()> {
    let params = GenParams {
        n_per_class: n,
        noise_sigma: noise,
    };
    let (data, label_set) = realize_with_labels(&dataset, &params, seed)?;
    let model = train_on(&data, classifier)?;
    let path = out.unwrap_or_else(|| PathBuf::from(format!("{}.model", model.kind())));
    save_model(&path, &model)?;
    // Resubstitution summary of the freshly trained model.
    let preds: Result<Vec<usize>> = data.patterns().iter().map(|p| model.classify(p)).collect();
    let cm = confusion(&preds?, data.labels(), data.class_count())?;
    println!(
        "wrote {} ({} on {})",
        path.display(),
        model.kind(),
        describe_with_labels(&data, label_set.as_deref())
    );
    print!("{}", key_value_block(&report(&cm)?, false));
    Ok(())
}

fn cmd_classify(
    dataset: DatasetSelector,
    model_path: PathBuf,
    seed: u64,
    n: Option<usize>,
    noise: f64,
    out: Option<PathBuf>,
) -> Result<()> {
    let params = GenParams {
        n_per_class: n,
        noise_sigma: noise,
    };
    let (data, label_set) = realize_with_labels(&dataset, &params, seed)?;
    let model = load_model(&model_path)?;
    let mut csv = String::new();
    for p in data.patterns() {
        let label = model.classify(p)?;
        for x in p.coords() {
            csv.push_str(&format!("{x},"));
        }
        csv.push_str(&format!("{label}\n"));
    }
    write_or_print(out.as_ref(), &csv)?;
    eprintln!(
        "classified {} with {}",
        describe_with_labels(&data, label_set.as_deref()),
        model.kind()
    );
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_benchmark(
    dataset: Option<DatasetSelector>,
    seed: Option<u64>,
    reps: Option<usize>,
    holdout: Option<f64>,
    classifiers: Option<ClassifierSet>,
    format: Option<FormatArg>,
    full_precision: bool,
    n: Option<usize>,
    noise: Option<f64>,
    config: Option<PathBuf>,
    out: Option<PathBuf>,
) -> Result<()> {
    let cfg = match config {
        Some(path) => ConfigFile::load(&path)?,
        None => ConfigFile::default(),
    };
    let dataset = merge(dataset, cfg.get("dataset")?).unwrap_or(DatasetSelector::Gaussian);
    let seed = merge(seed, cfg.get("seed")?).unwrap_or(0);
    let reps = merge(reps, cfg.get("reps")?).unwrap_or(1);
    let holdout = merge(holdout, cfg.get("holdout")?);
    let classifiers = merge(classifiers, cfg.get("classifiers")?).unwrap_or_default();
    let n = merge(n, cfg.get("n")?);
    let noise = merge(noise, cfg.get("noise")?).unwrap_or(0.1);
    let format_from_cfg = match cfg.get_raw("format") {
        Some("csv") => Some(FormatArg::Csv),
        Some("table") => Some(FormatArg::Table),
        Some(other) => anyhow::bail!("config key format: unknown value {other:?}"),
        None => None,
    };
    let format = merge(format, format_from_cfg).unwrap_or(FormatArg::Table);

    let settings = BenchmarkSettings {
        dataset,
        gen: GenParams {
            n_per_class: n,
            noise_sigma: noise,
        },
        seed,
        reps,
        eval: match holdout {
            Some(f) => EvalMode::Holdout(f),
            None => EvalMode::Resubstitution,
        },
        classifiers,
    };
    let table = benchmark_table(&settings)?;
    let rendered = match format {
        FormatArg::Table => table.to_table(full_precision),
        FormatArg::Csv => table.to_csv(full_precision),
    };
    write_or_print(out.as_ref(), &rendered)
}

fn cmd_plot(
    dataset: DatasetSelector,
    classifier: ClassifierArg,
    seed: u64,
    n: Option<usize>,
    noise: f64,
    out: Option<PathBuf>,
) -> Result<()> {
    let params = GenParams {
        n_per_class: n,
        noise_sigma: noise,
    };
    let data = realize(&dataset, &params, seed)?;
    let model = train_on(&data, classifier)?;
    let predictions: Result<Vec<usize>> =
        data.patterns().iter().map(|p| model.classify(p)).collect();
    let svg = render_svg(&data, &predictions?, &mut |v| model.classify(v))?;
    let path = out.unwrap_or_else(|| {
        PathBuf::from(format!("{}-{}.svg", dataset_stub(&dataset), model.kind()))
    });
    std::fs::write(&path, svg).with_context(|| format!("cannot write {}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(())
}

fn dataset_stub(selector: &DatasetSelector) -> String {
    match selector {
        DatasetSelector::Csv(path) => path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| "data".to_string()),
        other => other.to_string(),
    }
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::Generate {
            dataset,
            seed,
            n,
            noise,
            out,
        } => cmd_generate(dataset, seed, n, noise, out),
        Command::Train {
            dataset,
            classifier,
            seed,
            n,
            noise,
            out,
        } => cmd_train(dataset, classifier, seed, n, noise, out),
        Command::Classify {
            dataset,
            model,
            seed,
            n,
            noise,
            out,
        } => cmd_classify(dataset, model, seed, n, noise, out),
        Command::Benchmark {
            dataset,
            seed,
            reps,
            holdout,
            classifiers,
            format,
            full_precision,
            n,
            noise,
            config,
            out,
        } => cmd_benchmark(
            dataset,
            seed,
            reps,
            holdout,
            classifiers,
            format,
            full_precision,
            n,
            noise,
            config,
            out,
        ),
        Command::Plot {
            dataset,
            classifier,
            seed,
            n,
            noise,
            out,
        } => cmd_plot(dataset, classifier, seed, n, noise, out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        // Help and version render to stdout and exit cleanly.
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .find(|l| !l.trim().is_empty())
                .unwrap_or("error: invalid arguments");
            eprintln!("{first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
