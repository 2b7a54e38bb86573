//! Sweep results and their CSV form.

use std::fmt::Write as _;
use std::io::Write;
use std::path::Path;

use super::config::{Engine, SweepConfig};
use crate::entangle::CapabilitySample;
use crate::error::Result;

/// One grid point. `closed_h` and `deviation` are filled for `engine = both`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SweepRow {
    pub sample: CapabilitySample,
    pub closed_h: Option<f64>,
    pub deviation: Option<f64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepTable {
    pub config: SweepConfig,
    pub version: String,
    /// Seconds since the Unix epoch, present when the config asks for it.
    pub timestamp: Option<u64>,
    /// Row-major: `ω₁` outer, then `ω₂`, then `t`.
    pub rows: Vec<SweepRow>,
}

pub const COLUMNS: [&str; 11] = [
    "omega1", "omega2", "t", "h", "theta_x", "theta_y", "theta_z", "lambda_1", "lambda_2",
    "lambda_3", "lambda_4",
];

/// 17 significant digits in scientific notation with a signed two-digit
/// exponent, e.g. `1.5707963267948966e+00`. Parses back to the same bits.
pub fn format_float(x: f64) -> String {
    let s = format!("{x:.16e}");
    let (mantissa, exp) = s.split_once('e').expect("scientific format");
    let exp: i32 = exp.parse().expect("integer exponent");
    let sign = if exp < 0 { '-' } else { '+' };
    format!("{mantissa}e{sign}{:02}", exp.abs())
}

impl SweepTable {
    pub fn header(&self) -> Vec<&'static str> {
        let mut cols = COLUMNS.to_vec();
        if self.config.engine == Engine::Both {
            cols.extend(["h_closed", "abs_dev"]);
        }
        cols
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# qkak {}", self.version);
        if let Some(ts) = self.timestamp {
            let _ = writeln!(out, "# timestamp {ts}");
        }
        for line in self.config.to_ini().lines() {
            if line.is_empty() {
                let _ = writeln!(out, "#");
            } else {
                let _ = writeln!(out, "# {line}");
            }
        }
        let _ = writeln!(out, "{}", self.header().join(","));
        for row in &self.rows {
            let s = &row.sample;
            let mut values = vec![s.omega1, s.omega2, s.t, s.h];
            values.extend(s.theta);
            values.extend(s.lambda);
            values.extend(row.closed_h);
            values.extend(row.deviation);
            let cells: Vec<String> = values.into_iter().map(format_float).collect();
            let _ = writeln!(out, "{}", cells.join(","));
        }
        out
    }

    pub fn write_csv_to(&self, mut w: impl Write) -> Result<()> {
        w.write_all(self.to_csv().as_bytes())?;
        Ok(())
    }
}

pub fn write_csv(table: &SweepTable, path: impl AsRef<Path>) -> Result<()> {
    let file = std::fs::File::create(path)?;
    let mut w = std::io::BufWriter::new(file);
    table.write_csv_to(&mut w)?;
    w.flush()?;
    Ok(())
}
