//! Peak diagnostics for sweep tables.

use super::table::SweepTable;
use crate::entangle::{extremal_times, ChiBranch, ExtremalTime};
use crate::error::{Error, Result};

/// Spread of `h` below which a table counts as flat.
pub const FLAT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PeakLocation {
    pub omega1: f64,
    pub omega2: f64,
    pub t: f64,
    pub h: f64,
}

/// An extremal time that coincides with a time present in the table.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExtremalMatch {
    pub extremal: ExtremalTime,
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PeakReport {
    /// First row, in table order, attaining the largest `h`.
    pub global_max: PeakLocation,
    pub min_h: f64,
    /// `|ω₁ - ω₂|` at the maximum is within one grid step.
    pub max_on_diagonal: bool,
    pub grid_step: f64,
    /// Mean `h` over rows with `ω₁ = ω₂`.
    pub diagonal_mean: Option<f64>,
    pub off_diagonal_mean: Option<f64>,
    /// `h` is constant over the table.
    pub degenerate: bool,
    pub extremal_matches: Vec<ExtremalMatch>,
}

impl PeakReport {
    /// Diagonal mean minus off-diagonal mean.
    pub fn ridge(&self) -> Option<f64> {
        Some(self.diagonal_mean? - self.off_diagonal_mean?)
    }
}

fn mean(sum: f64, count: usize) -> Option<f64> {
    (count > 0).then(|| sum / count as f64)
}

pub fn detect_peaks(table: &SweepTable) -> Result<PeakReport> {
    let first = table.rows.first().ok_or(Error::EmptyTable)?;
    let mut best = first.sample;
    let mut min_h = f64::INFINITY;
    let (mut diag, mut n_diag, mut off, mut n_off) = (0.0, 0, 0.0, 0);
    for row in &table.rows {
        let s = &row.sample;
        if s.h > best.h {
            best = *s;
        }
        min_h = min_h.min(s.h);
        let scale = s.omega1.abs().max(s.omega2.abs()).max(1.0);
        if (s.omega1 - s.omega2).abs() <= 1e-12 * scale {
            diag += s.h;
            n_diag += 1;
        } else {
            off += s.h;
            n_off += 1;
        }
    }
    let cfg = &table.config;
    let grid_step = cfg.omega1.step().max(cfg.omega2.step());
    let t_grid = cfg.t.grid();
    let t_tol = (0.5 * t_grid.step()).max(1e-9);
    let mut extremal_matches = Vec::new();
    for branch in [ChiBranch::One, ChiBranch::Two] {
        let [cx, cy, _] = cfg.model.c();
        let denom = match branch {
            ChiBranch::One => cx + cy,
            ChiBranch::Two => cx - cy,
        };
        if denom.abs() <= crate::tol::PARAMETER_ZERO {
            continue;
        }
        let unit = std::f64::consts::PI / (2.0 * denom.abs());
        let k_max = ((t_grid.max.abs().max(t_grid.min.abs()) + t_tol) / unit).floor() as u32;
        for ext in extremal_times(&cfg.model, branch, k_max)? {
            let deviation = t_grid
                .values()
                .map(|t| (t - ext.t).abs())
                .fold(f64::INFINITY, f64::min);
            if deviation <= t_tol {
                extremal_matches.push(ExtremalMatch {
                    extremal: ext,
                    deviation,
                });
            }
        }
    }
    Ok(PeakReport {
        global_max: PeakLocation {
            omega1: best.omega1,
            omega2: best.omega2,
            t: best.t,
            h: best.h,
        },
        min_h,
        max_on_diagonal: (best.omega1 - best.omega2).abs() <= grid_step + 1e-12,
        grid_step,
        diagonal_mean: mean(diag, n_diag),
        off_diagonal_mean: mean(off, n_off),
        degenerate: best.h - min_h <= FLAT_TOLERANCE,
        extremal_matches,
    })
}
