//! Parameter sweeps over `(ω₁, ω₂, t)`, random ensembles and peak diagnostics.

mod config;
mod ensemble;
mod peaks;
mod run;
mod table;

pub use config::{
    parse_config, read_config, write_config, Engine, GridRange, SweepConfig, TimeSpec,
};
pub use ensemble::{
    ensemble_csv, evaluate_draw, run_ensemble, sample_draw, Draw, EnsembleRecord, EnsembleSpec,
    ENSEMBLE_COLUMNS,
};
pub use peaks::{detect_peaks, ExtremalMatch, PeakLocation, PeakReport, FLAT_TOLERANCE};
pub use run::{evaluate, grid_points, run_sweep};
pub use table::{format_float, write_csv, SweepRow, SweepTable, COLUMNS};
