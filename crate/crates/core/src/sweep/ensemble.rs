//! Random-Hamiltonian ensembles and the diagonal-ridge statistic.

use std::fmt::Write as _;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::config::{Engine, GridRange, SweepConfig, TimeSpec};
use super::peaks::detect_peaks;
use super::run::run_sweep;
use super::table::format_float;
use crate::error::{Error, Result};
use crate::model::HamiltonianModel;
use crate::random::unit_vector;

/// Coupling, control axes and time of one ensemble member.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Draw {
    pub c: [f64; 3],
    pub n: [f64; 3],
    pub m: [f64; 3],
    pub t: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleSpec {
    pub count: usize,
    pub seed: u64,
    /// `t` is drawn uniformly from `[t_min, t_max)`.
    pub t_window: (f64, f64),
    pub grid_steps: usize,
    pub omega_max: f64,
    /// Evaluated before the random draws.
    pub forced: Vec<Draw>,
}

impl Default for EnsembleSpec {
    fn default() -> Self {
        Self {
            count: 10,
            seed: 0,
            t_window: (0.0, 2.0 * std::f64::consts::PI),
            grid_steps: 21,
            omega_max: 3.0,
            forced: Vec::new(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnsembleRecord {
    pub index: usize,
    pub forced: bool,
    pub draw: Draw,
    /// Mean `h` on `ω₁ = ω₂` minus mean `h` elsewhere.
    pub ridge: f64,
    pub diagonal_mean: f64,
    pub off_diagonal_mean: f64,
    pub max_h: f64,
    pub max_omega1: f64,
    pub max_omega2: f64,
}

/// `c` uniform in `[-1, 1]³`, `n⃗` and `m⃗` uniform on the sphere, `t` uniform
/// in the window.
pub fn sample_draw<R: Rng + ?Sized>(rng: &mut R, t_window: (f64, f64)) -> Draw {
    let c = [0, 1, 2].map(|_| rng.random_range(-1.0..=1.0));
    let n = unit_vector(rng);
    let m = unit_vector(rng);
    let (lo, hi) = t_window;
    let t = if hi > lo { rng.random_range(lo..hi) } else { lo };
    Draw { c, n, m, t }
}

/// Ridge statistic of one draw on a `grid_steps²` grid.
pub fn evaluate_draw(draw: &Draw, spec: &EnsembleSpec) -> Result<(f64, f64, f64, f64, f64, f64)> {
    let model = HamiltonianModel::new(0.0, 0.0, draw.n, draw.m, draw.c)?;
    let range = GridRange::new(0.0, spec.omega_max, spec.grid_steps)?;
    let mut config = SweepConfig::new(model, range, range, TimeSpec::Single(draw.t))?;
    config.engine = Engine::Generic;
    let table = run_sweep(&config)?;
    let report = detect_peaks(&table)?;
    let diag = report.diagonal_mean.unwrap_or(0.0);
    let off = report.off_diagonal_mean.unwrap_or(0.0);
    Ok((
        diag - off,
        diag,
        off,
        report.global_max.h,
        report.global_max.omega1,
        report.global_max.omega2,
    ))
}

pub fn run_ensemble(spec: &EnsembleSpec) -> Result<Vec<EnsembleRecord>> {
    if spec.count + spec.forced.len() == 0 {
        return Err(Error::ConfigInvalid("ensemble needs at least one draw".into()));
    }
    if spec.grid_steps < 2 || !(spec.omega_max > 0.0) {
        return Err(Error::ConfigInvalid(
            "ensemble grid needs at least 2 steps and a positive range".into(),
        ));
    }
    let (lo, hi) = spec.t_window;
    if !lo.is_finite() || !hi.is_finite() || hi < lo {
        return Err(Error::ConfigInvalid("invalid time window".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let draws: Vec<(bool, Draw)> = spec
        .forced
        .iter()
        .map(|d| (true, *d))
        .chain((0..spec.count).map(|_| (false, sample_draw(&mut rng, spec.t_window))))
        .collect();
    draws
        .into_iter()
        .enumerate()
        .map(|(index, (forced, draw))| {
            let (ridge, diagonal_mean, off_diagonal_mean, max_h, max_omega1, max_omega2) =
                evaluate_draw(&draw, spec)?;
            Ok(EnsembleRecord {
                index,
                forced,
                draw,
                ridge,
                diagonal_mean,
                off_diagonal_mean,
                max_h,
                max_omega1,
                max_omega2,
            })
        })
        .collect()
}

pub const ENSEMBLE_COLUMNS: [&str; 18] = [
    "index", "forced", "c_x", "c_y", "c_z", "n_x", "n_y", "n_z", "m_x", "m_y", "m_z", "t",
    "ridge", "diagonal_mean", "off_diagonal_mean", "max_h", "max_omega1", "max_omega2",
];

pub fn ensemble_csv(spec: &EnsembleSpec, records: &[EnsembleRecord]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "# qkak {}", crate::VERSION);
    let _ = writeln!(
        out,
        "# ensemble count = {}, seed = {}, t_window = {}, {}, grid = {}, omega_max = {}",
        spec.count, spec.seed, spec.t_window.0, spec.t_window.1, spec.grid_steps, spec.omega_max
    );
    let _ = writeln!(out, "{}", ENSEMBLE_COLUMNS.join(","));
    for r in records {
        let d = &r.draw;
        let mut cells = vec![r.index.to_string(), u8::from(r.forced).to_string()];
        let values = d
            .c
            .iter()
            .chain(&d.n)
            .chain(&d.m)
            .copied()
            .chain([
                d.t,
                r.ridge,
                r.diagonal_mean,
                r.off_diagonal_mean,
                r.max_h,
                r.max_omega1,
                r.max_omega2,
            ]);
        cells.extend(values.map(format_float));
        let _ = writeln!(out, "{}", cells.join(","));
    }
    out
}
