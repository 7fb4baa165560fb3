//! Decision-region plots as standalone SVG 1.1 documents.
//!
//! The classifier is evaluated on a dense grid over the padded bounding box
//! of the data; runs of equal predictions merge into one rectangle per row,
//! so the region shading stays compact. Data points are drawn on top:
//! fill color is the true class, marker shape the predicted class. All
//! coordinates print with fixed precision, so identical inputs produce
//! byte-identical files.

use anyhow::{bail, Result};
use bloch_core::{FeatureVector, LabeledDataset};

/// Grid resolution along each axis.
pub const GRID: usize = 400;

const MARGIN: f64 = 20.0;
const PLOT: f64 = 640.0;

const PALETTE: [&str; 6] = [
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
];

fn class_color(class: usize) -> &'static str {
    PALETTE[class % PALETTE.len()]
}

struct Frame {
    x_min: f64,
    y_min: f64,
    x_span: f64,
    y_span: f64,
}

impl Frame {
    /// Data bounding box padded by 10% on every side.
    fn around(data: &LabeledDataset) -> Frame {
        let xs = data.patterns().iter().map(|p| p.coords()[0]);
        let ys = data.patterns().iter().map(|p| p.coords()[1]);
        let (mut x_min, mut x_max) = (f64::INFINITY, f64::NEG_INFINITY);
        for x in xs {
            x_min = x_min.min(x);
            x_max = x_max.max(x);
        }
        let (mut y_min, mut y_max) = (f64::INFINITY, f64::NEG_INFINITY);
        for y in ys {
            y_min = y_min.min(y);
            y_max = y_max.max(y);
        }
        let pad_x = 0.1 * (x_max - x_min).max(1e-9);
        let pad_y = 0.1 * (y_max - y_min).max(1e-9);
        Frame {
            x_min: x_min - pad_x,
            y_min: y_min - pad_y,
            x_span: (x_max - x_min) + 2.0 * pad_x,
            y_span: (y_max - y_min) + 2.0 * pad_y,
        }
    }

    fn to_px(&self, x: f64, y: f64) -> (f64, f64) {
        let px = MARGIN + (x - self.x_min) / self.x_span * PLOT;
        // SVG y grows downward.
        let py = MARGIN + (1.0 - (y - self.y_min) / self.y_span) * PLOT;
        (px, py)
    }

    fn cell_center(&self, ix: usize, iy: usize) -> (f64, f64) {
        let x = self.x_min + (ix as f64 + 0.5) / GRID as f64 * self.x_span;
        let y = self.y_min + (iy as f64 + 0.5) / GRID as f64 * self.y_span;
        (x, y)
    }
}

fn marker(pred: usize, px: f64, py: f64, fill: &str) -> String {
    let style = format!("fill=\"{fill}\" stroke=\"#333333\" stroke-width=\"0.5\"");
    match pred % 4 {
        0 => format!("<circle cx=\"{px:.2}\" cy=\"{py:.2}\" r=\"3\" {style}/>\n"),
        1 => format!(
            "<rect x=\"{:.2}\" y=\"{:.2}\" width=\"6\" height=\"6\" {style}/>\n",
            px - 3.0,
            py - 3.0
        ),
        2 => format!(
            "<path d=\"M {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} Z\" {style}/>\n",
            px,
            py - 3.6,
            px - 3.4,
            py + 2.8,
            px + 3.4,
            py + 2.8
        ),
        _ => format!(
            "<path d=\"M {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} L {:.2} {:.2} Z\" {style}/>\n",
            px,
            py - 4.0,
            px + 4.0,
            py,
            px,
            py + 4.0,
            px - 4.0,
            py
        ),
    }
}

/// Evaluates the classifier on every grid cell. Returns the row-major label
/// grid (row 0 at the bottom of the data range).
pub fn decision_grid(
    data: &LabeledDataset,
    classify: &mut dyn FnMut(&FeatureVector) -> Result<usize>,
) -> Result<Vec<usize>> {
    let frame = Frame::around(data);
    let mut labels = Vec::with_capacity(GRID * GRID);
    for iy in 0..GRID {
        for ix in 0..GRID {
            let (x, y) = frame.cell_center(ix, iy);
            labels.push(classify(&FeatureVector::new([x, y])?)?);
        }
    }
    Ok(labels)
}

/// Renders the full SVG: shaded decision regions, then the data points.
/// `predictions` must hold the classifier's label for every pattern.
pub fn render_svg(
    data: &LabeledDataset,
    predictions: &[usize],
    classify: &mut dyn FnMut(&FeatureVector) -> Result<usize>,
) -> Result<String> {
    if data.dim() != 2 {
        bail!(
            "plotting requires two-dimensional data, got {} features",
            data.dim()
        );
    }
    if predictions.len() != data.len() {
        bail!(
            "{} predictions for {} patterns",
            predictions.len(),
            data.len()
        );
    }
    let frame = Frame::around(data);
    let size = PLOT + 2.0 * MARGIN;
    let mut svg = String::with_capacity(1 << 20);
    svg.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{size}\" height=\"{size}\" viewBox=\"0 0 {size} {size}\">\n"
    ));
    svg.push_str(&format!(
        "<rect x=\"0\" y=\"0\" width=\"{size}\" height=\"{size}\" fill=\"#ffffff\"/>\n"
    ));

    // Region shading, one run-length-merged band per grid row.
    let grid = decision_grid(data, classify)?;
    let cell = PLOT / GRID as f64;
    for iy in 0..GRID {
        let row = &grid[iy * GRID..(iy + 1) * GRID];
        let y_px = MARGIN + (GRID - 1 - iy) as f64 * cell;
        let mut start = 0usize;
        while start < GRID {
            let label = row[start];
            let mut end = start + 1;
            while end < GRID && row[end] == label {
                end += 1;
            }
            let x_px = MARGIN + start as f64 * cell;
            let w = (end - start) as f64 * cell;
            svg.push_str(&format!(
                "<rect x=\"{x_px:.2}\" y=\"{y_px:.2}\" width=\"{w:.2}\" height=\"{cell:.2}\" fill=\"{}\" fill-opacity=\"0.18\"/>\n",
                class_color(label)
            ));
            start = end;
        }
    }

    // Data points: color = truth, shape = prediction.
    for ((pattern, &truth), &pred) in data.patterns().iter().zip(data.labels()).zip(predictions) {
        let (px, py) = frame.to_px(pattern.coords()[0], pattern.coords()[1]);
        svg.push_str(&marker(pred, px, py, class_color(truth)));
    }

    svg.push_str(&format!(
        "<rect x=\"{MARGIN}\" y=\"{MARGIN}\" width=\"{PLOT}\" height=\"{PLOT}\" fill=\"none\" stroke=\"#555555\" stroke-width=\"1\"/>\n"
    ));
    svg.push_str("</svg>\n");
    Ok(svg)
}
