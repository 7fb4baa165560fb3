//! Library half of the `blochc` binary: dataset selection, configuration,
//! model files, the benchmark harness, report formatting and SVG plots.

pub mod bench;
pub mod config;
pub mod model_io;
pub mod plot;
pub mod report_fmt;
pub mod selector;
