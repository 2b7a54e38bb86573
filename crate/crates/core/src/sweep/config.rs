//! INI-style sweep configuration.
//!
//! ```text
//! [model]
//! n = 0, 0, 1
//! m = 0, 0, 1
//! c = 1, 0, 0
//!
//! [grid]
//! omega1 = 0, 5, 101
//! omega2 = 0, 5, 101
//! t = 4.71238898038469
//!
//! [output]
//! path = fig1.csv
//! engine = generic
//! seed = 0
//! ```
//!
//! `t_range = min, max, steps` replaces `t` for time scans.

use std::fmt::{self, Write as _};
use std::path::Path;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::model::{HamiltonianModel, Z_AXIS};

/// `steps` points from `min` to `max` inclusive.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GridRange {
    pub min: f64,
    pub max: f64,
    pub steps: usize,
}

impl GridRange {
    /// A single point needs `min == max`; otherwise `steps ≥ 2` and `min < max`.
    pub fn new(min: f64, max: f64, steps: usize) -> Result<Self> {
        let r = Self { min, max, steps };
        r.validate("range")?;
        Ok(r)
    }

    pub fn single(value: f64) -> Self {
        Self {
            min: value,
            max: value,
            steps: 1,
        }
    }

    fn validate(&self, name: &str) -> Result<()> {
        if !self.min.is_finite() || !self.max.is_finite() {
            return Err(Error::ConfigInvalid(format!("{name}: bounds must be finite")));
        }
        match self.steps {
            0 => Err(Error::ConfigInvalid(format!("{name}: empty grid"))),
            1 if self.min != self.max => Err(Error::ConfigInvalid(format!(
                "{name}: a single step needs min = max"
            ))),
            1 => Ok(()),
            _ if self.min >= self.max => {
                Err(Error::ConfigInvalid(format!("{name}: min must be below max")))
            }
            _ => Ok(()),
        }
    }

    pub fn value(&self, i: usize) -> f64 {
        if self.steps == 1 || i == 0 {
            self.min
        } else if i + 1 == self.steps {
            self.max
        } else {
            self.min + (self.max - self.min) * i as f64 / (self.steps - 1) as f64
        }
    }

    pub fn values(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.steps).map(|i| self.value(i))
    }

    /// Spacing between neighbours, zero for a single point.
    pub fn step(&self) -> f64 {
        if self.steps < 2 {
            0.0
        } else {
            (self.max - self.min) / (self.steps - 1) as f64
        }
    }
}

impl fmt::Display for GridRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.min, self.max, self.steps)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum TimeSpec {
    Single(f64),
    Range(GridRange),
}

impl TimeSpec {
    pub fn grid(&self) -> GridRange {
        match *self {
            TimeSpec::Single(t) => GridRange::single(t),
            TimeSpec::Range(r) => r,
        }
    }
}

/// Which propagator and capability path evaluates a grid point.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Engine {
    ClosedForm,
    #[default]
    Generic,
    Both,
}

impl Engine {
    pub fn as_str(self) -> &'static str {
        match self {
            Engine::ClosedForm => "closed_form",
            Engine::Generic => "generic",
            Engine::Both => "both",
        }
    }
}

impl FromStr for Engine {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "closed_form" | "closed-form" => Ok(Engine::ClosedForm),
            "generic" => Ok(Engine::Generic),
            "both" => Ok(Engine::Both),
            _ => Err(Error::ConfigInvalid(format!(
                "unknown engine {s:?} (expected closed_form, generic or both)"
            ))),
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A full sweep description. The model's own energies are ignored; the grid
/// supplies `ω₁`, `ω₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub model: HamiltonianModel,
    pub omega1: GridRange,
    pub omega2: GridRange,
    pub t: TimeSpec,
    pub seed: u64,
    pub output_path: Option<String>,
    pub engine: Engine,
    /// Adds a wall-clock header line to the CSV.
    pub timestamp: bool,
}

impl SweepConfig {
    pub fn new(model: HamiltonianModel, omega1: GridRange, omega2: GridRange, t: TimeSpec) -> Result<Self> {
        let cfg = Self {
            model,
            omega1,
            omega2,
            t,
            seed: 0,
            output_path: None,
            engine: Engine::default(),
            timestamp: false,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        self.omega1.validate("omega1")?;
        self.omega2.validate("omega2")?;
        if self.omega1.min < 0.0 || self.omega2.min < 0.0 {
            return Err(Error::ConfigInvalid("energies must be non-negative".into()));
        }
        match self.t {
            TimeSpec::Single(t) if !t.is_finite() => {
                Err(Error::ConfigInvalid("t must be finite".into()))
            }
            TimeSpec::Single(_) => Ok(()),
            TimeSpec::Range(r) => r.validate("t_range"),
        }
    }

    /// Number of grid points.
    pub fn len(&self) -> usize {
        self.omega1.steps * self.omega2.steps * self.t.grid().steps
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// The INI text that [`parse_config`] reads back to `self`.
    pub fn to_ini(&self) -> String {
        let triple = |v: [f64; 3]| format!("{}, {}, {}", v[0], v[1], v[2]);
        let mut s = String::new();
        let _ = writeln!(s, "[model]");
        let _ = writeln!(s, "n = {}", triple(self.model.n()));
        let _ = writeln!(s, "m = {}", triple(self.model.m()));
        let _ = writeln!(s, "c = {}", triple(self.model.c()));
        let _ = writeln!(s);
        let _ = writeln!(s, "[grid]");
        let _ = writeln!(s, "omega1 = {}", self.omega1);
        let _ = writeln!(s, "omega2 = {}", self.omega2);
        match self.t {
            TimeSpec::Single(t) => {
                let _ = writeln!(s, "t = {t}");
            }
            TimeSpec::Range(r) => {
                let _ = writeln!(s, "t_range = {r}");
            }
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "[output]");
        if let Some(path) = &self.output_path {
            let _ = writeln!(s, "path = {path}");
        }
        let _ = writeln!(s, "engine = {}", self.engine);
        let _ = writeln!(s, "seed = {}", self.seed);
        if self.timestamp {
            let _ = writeln!(s, "timestamp = true");
        }
        s
    }
}

pub fn read_config(path: impl AsRef<Path>) -> Result<SweepConfig> {
    parse_config(&std::fs::read_to_string(path)?)
}

pub fn write_config(config: &SweepConfig, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, config.to_ini())?;
    Ok(())
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A value with its 1-based position in the source.
struct Field<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl Field<'_> {
    fn err(&self, message: impl Into<String>) -> Error {
        parse_err(self.line, self.column, message)
    }

    /// Comma-separated components with their columns.
    fn parts(&self) -> Vec<Field<'_>> {
        let mut out = Vec::new();
        let mut offset = 0;
        for piece in self.text.split(',') {
            let lead = piece.len() - piece.trim_start().len();
            out.push(Field {
                text: piece.trim(),
                line: self.line,
                column: self.column + offset + lead,
            });
            offset += piece.len() + 1;
        }
        out
    }

    fn number<T: FromStr>(&self, what: &str) -> Result<T> {
        self.text
            .parse()
            .map_err(|_| self.err(format!("expected {what}, found {:?}", self.text)))
    }

    fn float(&self) -> Result<f64> {
        let x: f64 = self.number("a number")?;
        if x.is_finite() {
            Ok(x)
        } else {
            Err(self.err("value must be finite"))
        }
    }

    fn triple(&self) -> Result<[f64; 3]> {
        let parts = self.parts();
        if parts.len() != 3 {
            return Err(self.err(format!("expected 3 components, found {}", parts.len())));
        }
        Ok([parts[0].float()?, parts[1].float()?, parts[2].float()?])
    }

    fn range(&self) -> Result<GridRange> {
        let parts = self.parts();
        if parts.len() != 3 {
            return Err(self.err("expected min, max, steps"));
        }
        let r = GridRange {
            min: parts[0].float()?,
            max: parts[1].float()?,
            steps: parts[2].number("an integer step count")?,
        };
        r.validate("range").map_err(|e| match e {
            Error::ConfigInvalid(m) => self.err(m),
            other => other,
        })?;
        Ok(r)
    }
}

#[derive(Default)]
struct Raw<'a> {
    n: Option<Field<'a>>,
    m: Option<Field<'a>>,
    c: Option<Field<'a>>,
    omega1: Option<Field<'a>>,
    omega2: Option<Field<'a>>,
    t: Option<Field<'a>>,
    t_range: Option<Field<'a>>,
    path: Option<Field<'a>>,
    engine: Option<Field<'a>>,
    seed: Option<Field<'a>>,
    timestamp: Option<Field<'a>>,
}

/// Parses the INI text. Blank lines and lines starting with `#` or `;` are
/// skipped; unknown sections, unknown keys and duplicates are errors.
pub fn parse_config(text: &str) -> Result<SweepConfig> {
    let mut raw = Raw::default();
    let mut section: Option<&str> = None;
    for (idx, line) in text.lines().enumerate() {
        let lineno = idx + 1;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with(';') {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        if let Some(rest) = trimmed.strip_prefix('[') {
            let name = rest
                .strip_suffix(']')
                .ok_or_else(|| parse_err(lineno, indent + trimmed.len(), "missing ']'"))?
                .trim();
            if !matches!(name, "model" | "grid" | "output") {
                return Err(parse_err(lineno, indent + 2, format!("unknown section [{name}]")));
            }
            section = Some(name);
            continue;
        }
        let eq = line
            .find('=')
            .ok_or_else(|| parse_err(lineno, indent + 1, "expected key = value"))?;
        let key = line[..eq].trim();
        let value_raw = &line[eq + 1..];
        let lead = value_raw.len() - value_raw.trim_start().len();
        let field = Field {
            text: value_raw.trim(),
            line: lineno,
            column: eq + 2 + lead,
        };
        let Some(sec) = section else {
            return Err(parse_err(lineno, indent + 1, "key outside of a section"));
        };
        let slot = match (sec, key) {
            ("model", "n") => &mut raw.n,
            ("model", "m") => &mut raw.m,
            ("model", "c") => &mut raw.c,
            ("grid", "omega1") => &mut raw.omega1,
            ("grid", "omega2") => &mut raw.omega2,
            ("grid", "t") => &mut raw.t,
            ("grid", "t_range") => &mut raw.t_range,
            ("output", "path") => &mut raw.path,
            ("output", "engine") => &mut raw.engine,
            ("output", "seed") => &mut raw.seed,
            ("output", "timestamp") => &mut raw.timestamp,
            _ => {
                return Err(parse_err(
                    lineno,
                    indent + 1,
                    format!("unknown key {key:?} in [{sec}]"),
                ))
            }
        };
        if slot.is_some() {
            return Err(parse_err(lineno, indent + 1, format!("duplicate key {key:?}")));
        }
        *slot = Some(field);
    }

    let eof = text.lines().count().max(1);
    let missing = |what: &str| parse_err(eof, 1, format!("missing {what}"));

    let vector = |f: &Option<Field>| f.as_ref().map(Field::triple).transpose();
    let n = vector(&raw.n)?.unwrap_or(Z_AXIS);
    let m = vector(&raw.m)?.unwrap_or(Z_AXIS);
    let c_field = raw.c.as_ref().ok_or_else(|| missing("[model] c"))?;
    let c = c_field.triple()?;
    let model = HamiltonianModel::new(0.0, 0.0, n, m, c).map_err(|e| {
        let at = raw.n.as_ref().or(raw.m.as_ref()).unwrap_or(c_field);
        at.err(e.to_string())
    })?;

    let omega1 = raw.omega1.as_ref().ok_or_else(|| missing("[grid] omega1"))?;
    let omega2 = raw.omega2.as_ref().ok_or_else(|| missing("[grid] omega2"))?;
    let (omega1_range, omega2_range) = (omega1.range()?, omega2.range()?);
    for (f, r) in [(omega1, omega1_range), (omega2, omega2_range)] {
        if r.min < 0.0 {
            return Err(f.err("energies must be non-negative"));
        }
    }
    let t = match (&raw.t, &raw.t_range) {
        (Some(_), Some(r)) => return Err(r.err("give either t or t_range, not both")),
        (Some(t), None) => TimeSpec::Single(t.float()?),
        (None, Some(r)) => TimeSpec::Range(r.range()?),
        (None, None) => return Err(missing("[grid] t or t_range")),
    };

    let engine = match &raw.engine {
        Some(f) => f.text.parse().map_err(|e: Error| f.err(e.to_string()))?,
        None => Engine::default(),
    };
    let seed = match &raw.seed {
        Some(f) => f.number("a non-negative integer seed")?,
        None => 0,
    };
    let timestamp = match &raw.timestamp {
        Some(f) => f.number("true or false")?,
        None => false,
    };
    let output_path = match &raw.path {
        Some(f) if f.text.is_empty() => return Err(f.err("empty path")),
        Some(f) => Some(f.text.to_string()),
        None => None,
    };

    let cfg = SweepConfig {
        model,
        omega1: omega1_range,
        omega2: omega2_range,
        t,
        seed,
        output_path,
        engine,
        timestamp,
    };
    cfg.validate()?;
    Ok(cfg)
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIG1: &str = "[model]\nc = 1, 0, 0\n\n[grid]\nomega1 = 0, 5, 101\nomega2 = 0, 5, 101\nt = 4.71238898038469\n";

    #[test]
    fn parses_minimal_config() {
        let cfg = parse_config(FIG1).unwrap();
        assert_eq!(cfg.model.c(), [1.0, 0.0, 0.0]);
        assert_eq!(cfg.model.n(), Z_AXIS);
        assert_eq!(cfg.omega1, GridRange::new(0.0, 5.0, 101).unwrap());
        assert_eq!(cfg.t, TimeSpec::Single(4.71238898038469));
        assert_eq!(cfg.engine, Engine::Generic);
        assert_eq!(cfg.len(), 101 * 101);
    }

    #[test]
    fn round_trips_through_text() {
        let mut cfg = parse_config(FIG1).unwrap();
        cfg.engine = Engine::Both;
        cfg.seed = 17;
        cfg.output_path = Some("out/run 1.csv".into());
        cfg.t = TimeSpec::Range(GridRange::new(0.0, 10.0, 11).unwrap());
        assert_eq!(parse_config(&cfg.to_ini()).unwrap(), cfg);
    }

    #[test]
    fn grid_values_hit_both_ends() {
        let r = GridRange::new(0.0, 5.0, 101).unwrap();
        let v: Vec<f64> = r.values().collect();
        assert_eq!(v[0], 0.0);
        assert_eq!(v[100], 5.0);
        assert_eq!(v[50], 2.5);
        assert_eq!(r.step(), 0.05);
        assert_eq!(GridRange::single(0.3).values().collect::<Vec<_>>(), [0.3]);
    }

    #[test]
    fn rejects_empty_and_inverted_grids() {
        assert!(GridRange::new(0.0, 1.0, 0).is_err());
        assert!(GridRange::new(0.0, 1.0, 1).is_err());
        assert!(GridRange::new(1.0, 0.0, 5).is_err());
        assert!(GridRange::new(1.0, 1.0, 1).is_ok());
        let text = FIG1.replace("omega1 = 0, 5, 101", "omega1 = 0, 5, 0");
        assert!(matches!(parse_config(&text), Err(Error::Parse { line: 5, .. })));
    }

    #[test]
    fn reports_line_and_column() {
        let text = FIG1.replace("c = 1, 0, 0", "c = 1, x, 0");
        match parse_config(&text) {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 8)),
            other => panic!("{other:?}"),
        }
        let text = FIG1.replace("[grid]", "[grd]");
        assert!(matches!(parse_config(&text), Err(Error::Parse { line: 4, column: 2, .. })));
        let text = format!("{FIG1}bogus = 1\n");
        assert!(matches!(parse_config(&text), Err(Error::Parse { line: 8, column: 1, .. })));
        let text = FIG1.replace("t = 4.71238898038469", "");
        assert!(matches!(parse_config(&text), Err(Error::Parse { .. })));
    }

    #[test]
    fn rejects_negative_energies_and_bad_vectors() {
        let text = FIG1.replace("omega2 = 0, 5, 101", "omega2 = -1, 5, 101");
        assert!(matches!(parse_config(&text), Err(Error::Parse { line: 6, .. })));
        let text = FIG1.replace("c = 1, 0, 0", "n = 0, 0, 2\nc = 1, 0, 0");
        assert!(matches!(parse_config(&text), Err(Error::Parse { line: 2, .. })));
    }
}
