//! Grid evaluation of the capability.

use rayon::prelude::*;

use super::config::{Engine, SweepConfig};
use super::table::{SweepRow, SweepTable};
use crate::entangle::{capability, capability_closed_form_full, CapabilitySample};
use crate::error::Result;
use crate::model::HamiltonianModel;
use crate::propagator::generic_propagator;

/// `(ω₁, ω₂, t)` in output order.
pub fn grid_points(config: &SweepConfig) -> Vec<(f64, f64, f64)> {
    let times: Vec<f64> = config.t.grid().values().collect();
    let mut points = Vec::with_capacity(config.len());
    for w1 in config.omega1.values() {
        for w2 in config.omega2.values() {
            for &t in &times {
                points.push((w1, w2, t));
            }
        }
    }
    points
}

/// Evaluates one grid point with the given engine.
pub fn evaluate(model: &HamiltonianModel, t: f64, engine: Engine) -> Result<SweepRow> {
    let row = match engine {
        Engine::Generic => SweepRow {
            sample: CapabilitySample::new(model, t, capability(&generic_propagator(model, t))?),
            closed_h: None,
            deviation: None,
        },
        Engine::ClosedForm => SweepRow {
            sample: CapabilitySample::new(model, t, capability_closed_form_full(model, t)?),
            closed_h: None,
            deviation: None,
        },
        Engine::Both => {
            let closed = capability_closed_form_full(model, t)?;
            let generic = capability(&generic_propagator(model, t))?;
            SweepRow {
                sample: CapabilitySample::new(model, t, generic),
                closed_h: Some(closed.h),
                deviation: Some((generic.h - closed.h).abs()),
            }
        }
    };
    Ok(row)
}

/// Evaluates every grid point in parallel; rows keep the row-major order of
/// [`grid_points`].
pub fn run_sweep(config: &SweepConfig) -> Result<SweepTable> {
    config.validate()?;
    if config.engine != Engine::Generic {
        config.model.with_omegas(1.0, 1.0)?.require_z_aligned()?;
    }
    let rows = grid_points(config)
        .into_par_iter()
        .map(|(w1, w2, t)| evaluate(&config.model.with_omegas(w1, w2)?, t, config.engine))
        .collect::<Result<Vec<_>>>()?;
    let timestamp = config.timestamp.then(|| {
        std::time::SystemTime::now()
            .duration_since(std::time::UNIX_EPOCH)
            .map(|d| d.as_secs())
            .unwrap_or(0)
    });
    Ok(SweepTable {
        config: config.clone(),
        version: crate::VERSION.to_string(),
        timestamp,
        rows,
    })
}
