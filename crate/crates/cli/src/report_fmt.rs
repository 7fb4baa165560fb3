//! Rendering of metrics reports and benchmark results: flat key-value
//! blocks, CSV rows and aligned tables. Both output modes share one number
//! formatter so they always carry identical values.

use bloch_core::MetricsReport;

/// Formats one index value: three decimals by default, shortest round-trip
/// form when `full` is set. Undefined values print as `nan`.
pub fn fmt_value(x: f64, full: bool) -> String {
    if x.is_nan() {
        return "nan".to_string();
    }
    if full {
        x.to_string()
    } else {
        format!("{x:.3}")
    }
}

fn kappa_value(report: &MetricsReport) -> f64 {
    report.cohen_k.unwrap_or(f64::NAN)
}

/// Column labels for a report with the given number of classes:
/// `E, E1..EC, Ac, Pr, k, TPR, FPR, TNR, FNR`.
pub fn index_labels(class_count: usize) -> Vec<String> {
    let mut labels = vec!["E".to_string()];
    for i in 1..=class_count {
        labels.push(format!("E{i}"));
    }
    for tail in ["Ac", "Pr", "k", "TPR", "FPR", "TNR", "FNR"] {
        labels.push(tail.to_string());
    }
    labels
}

/// The report's indices in the [`index_labels`] order.
pub fn index_values(report: &MetricsReport) -> Vec<f64> {
    let mut values = vec![report.error];
    values.extend(report.per_class_errors.iter().copied());
    values.extend([
        report.accuracy,
        report.precision,
        kappa_value(report),
        report.true_positive_rate,
        report.false_positive_rate,
        report.true_negative_rate,
        report.false_negative_rate,
    ]);
    values
}

/// Flat `key = value` block for one evaluation.
pub fn key_value_block(report: &MetricsReport, full: bool) -> String {
    let mut out = String::new();
    for (label, value) in index_labels(report.per_class_errors.len())
        .iter()
        .zip(index_values(report))
    {
        out.push_str(&format!("{label} = {}\n", fmt_value(value, full)));
    }
    out
}

/// One CSV row per classifier: `name,<index>,...`.
pub fn csv_row(name: &str, report: &MetricsReport, full: bool) -> String {
    let mut fields = vec![name.to_string()];
    fields.extend(index_values(report).into_iter().map(|v| fmt_value(v, full)));
    fields.join(",")
}

/// Mean and standard deviation of one index across repetitions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IndexStats {
    pub mean: f64,
    pub sd: f64,
}

/// A named benchmark row: one classifier, one stat per index column.
#[derive(Debug, Clone)]
pub struct BenchmarkRow {
    pub name: String,
    pub stats: Vec<IndexStats>,
}

/// Aggregated benchmark results ready for rendering.
#[derive(Debug, Clone)]
pub struct BenchmarkTable {
    pub preamble: String,
    pub labels: Vec<String>,
    pub rows: Vec<BenchmarkRow>,
}

impl BenchmarkTable {
    /// CSV rendering: a header line, then one row per classifier with mean
    /// and standard-deviation columns.
    pub fn to_csv(&self, full: bool) -> String {
        let mut out = String::from("classifier");
        for label in &self.labels {
            out.push_str(&format!(",{label}_mean,{label}_sd"));
        }
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.name);
            for s in &row.stats {
                out.push_str(&format!(
                    ",{},{}",
                    fmt_value(s.mean, full),
                    fmt_value(s.sd, full)
                ));
            }
            out.push('\n');
        }
        out
    }

    /// Aligned human-readable rendering with `mean+-sd` cells.
    pub fn to_table(&self, full: bool) -> String {
        let mut header = vec!["classifier".to_string()];
        header.extend(self.labels.clone());
        let mut grid: Vec<Vec<String>> = vec![header];
        for row in &self.rows {
            let mut cells = vec![row.name.clone()];
            cells.extend(
                row.stats
                    .iter()
                    .map(|s| format!("{}\u{b1}{}", fmt_value(s.mean, full), fmt_value(s.sd, full))),
            );
            grid.push(cells);
        }
        let widths: Vec<usize> = (0..grid[0].len())
            .map(|c| grid.iter().map(|r| r[c].chars().count()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        if !self.preamble.is_empty() {
            out.push_str(&self.preamble);
            out.push('\n');
        }
        for row in &grid {
            let line: Vec<String> = row
                .iter()
                .zip(&widths)
                .map(|(cell, w)| format!("{cell:<width$}", width = w))
                .collect();
            out.push_str(line.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}
