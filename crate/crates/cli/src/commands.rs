//! Subcommand bodies.

use std::fmt::Write as _;
use std::io::Write as _;
use std::path::Path;

use qkak::entangle::{
    capability_closed_form_full, extremal_times as extremal, optimal_input, Capability, ChiBranch,
    EnergyCondition,
};
use qkak::propagator::{generic_propagator, propagator};
use qkak::sweep::{
    detect_peaks, ensemble_csv, format_float, read_config, run_ensemble, run_sweep, Draw,
    EnsembleSpec, PeakReport,
};
use qkak::{capability as capability_of, concurrence, kak_decompose, Error, Result};

use crate::input;
use crate::{
    CapabilityArgs, DecomposeArgs, EngineArg, EnsembleArgs, ExtremalArgs, Format,
    OptimalStateArgs, OutputArgs, SweepArgs,
};

fn emit(text: &str, path: Option<&Path>) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => with_path(p, std::fs::write(p, text).map_err(Error::from))?,
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

/// Adds the file name to I/O errors.
fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Io(io) => Error::Io(std::io::Error::new(io.kind(), format!("{}: {io}", path.display()))),
        other => other,
    })
}

fn csv_only(format: Format, what: &str) -> Result<()> {
    match format {
        Format::Csv => Ok(()),
        Format::Text => Err(Error::ConfigInvalid(format!("{what} output is CSV only"))),
    }
}

/// `key,key,...` header and one row of floats, or `key: value` lines.
fn record(format: Format, fields: &[(&str, f64)]) -> String {
    let mut s = String::new();
    match format {
        Format::Csv => {
            let keys: Vec<&str> = fields.iter().map(|(k, _)| *k).collect();
            let vals: Vec<String> = fields.iter().map(|(_, v)| format_float(*v)).collect();
            let _ = writeln!(s, "{}", keys.join(","));
            let _ = writeln!(s, "{}", vals.join(","));
        }
        Format::Text => {
            let width = fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in fields {
                let _ = writeln!(s, "{k:<width$}  {v}");
            }
        }
    }
    s
}

fn capability_fields(cap: &Capability) -> Vec<(&'static str, f64)> {
    vec![
        ("h", cap.h),
        ("theta_x", cap.theta[0]),
        ("theta_y", cap.theta[1]),
        ("theta_z", cap.theta[2]),
        ("lambda_1", cap.lambda[0]),
        ("lambda_2", cap.lambda[1]),
        ("lambda_3", cap.lambda[2]),
        ("lambda_4", cap.lambda[3]),
    ]
}

pub fn decompose(a: DecomposeArgs) -> Result<()> {
    let u = match (&a.unitary, &a.c, a.t) {
        (Some(path), _, _) => with_path(path, input::read_unitary(path))?,
        (None, Some(c), Some(t)) => {
            let model = input::model(&crate::ModelArgs {
                c: c.clone(),
                omega1: a.omega1,
                omega2: a.omega2,
                n: a.n.clone(),
                m: a.m.clone(),
            })?;
            propagator(&model, t)
        }
        _ => {
            return Err(Error::ConfigInvalid(
                "decompose needs --unitary FILE or both --c and --t".into(),
            ))
        }
    };
    let d = kak_decompose(&u)?;
    let mut fields = capability_fields(&d.coords.into());
    fields.push(("global_phase", d.global_phase));
    let OutputArgs { format, output } = a.out;
    emit(&record(format, &fields), output.as_deref())
}

pub fn capability(a: CapabilityArgs) -> Result<()> {
    let model = input::model(&a.model)?;
    let fields = match a.engine {
        EngineArg::Generic => capability_fields(&capability_of(&generic_propagator(&model, a.t))?),
        EngineArg::ClosedForm => capability_fields(&capability_closed_form_full(&model, a.t)?),
        EngineArg::Both => {
            let generic = capability_of(&generic_propagator(&model, a.t))?;
            let closed = capability_closed_form_full(&model, a.t)?;
            let mut f = capability_fields(&generic);
            f.push(("h_closed", closed.h));
            f.push(("abs_dev", (generic.h - closed.h).abs()));
            f
        }
    };
    emit(&record(a.out.format, &fields), a.out.output.as_deref())
}

fn peak_summary(r: &PeakReport) -> String {
    let mut s = String::new();
    let g = &r.global_max;
    let _ = writeln!(
        s,
        "max h = {} at omega1 = {}, omega2 = {}, t = {} ({} diagonal)",
        g.h,
        g.omega1,
        g.omega2,
        g.t,
        if r.max_on_diagonal { "on" } else { "off" }
    );
    let show = |x: Option<f64>| x.map_or("n/a".to_string(), |v| v.to_string());
    let _ = writeln!(
        s,
        "diagonal mean = {}, off-diagonal mean = {}",
        show(r.diagonal_mean),
        show(r.off_diagonal_mean)
    );
    if r.degenerate {
        let _ = writeln!(s, "flat table: h is constant over the grid");
    }
    for m in &r.extremal_matches {
        let _ = writeln!(
            s,
            "t = {} matches extremal time k = {} of branch {:?}",
            m.extremal.t, m.extremal.k, m.extremal.branch
        );
    }
    s
}

pub fn sweep(a: SweepArgs) -> Result<()> {
    csv_only(a.format, "sweep")?;
    let mut config = with_path(&a.config, read_config(&a.config))?;
    if let Some(e) = a.engine {
        config.engine = e.into();
    }
    if let Some(seed) = a.seed {
        config.seed = seed;
    }
    if let Some(out) = &a.output {
        config.output_path = Some(out.clone());
    }
    let table = run_sweep(&config)?;
    if a.peaks {
        eprint!("{}", peak_summary(&detect_peaks(&table)?));
    }
    emit(&table.to_csv(), config.output_path.as_deref().map(Path::new))
}

fn parse_draw(text: &str) -> Result<Draw> {
    let parts: Vec<&str> = text.split(';').collect();
    if parts.len() != 4 {
        return Err(Error::ConfigInvalid(format!(
            "--force expects CX,CY,CZ;NX,NY,NZ;MX,MY,MZ;T, got {text:?}"
        )));
    }
    let t = parts[3]
        .trim()
        .parse::<f64>()
        .map_err(|_| Error::ConfigInvalid(format!("--force: bad time {:?}", parts[3])))?;
    let unit = |v: [f64; 3]| {
        let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 0.0 {
            Ok(v.map(|x| x / n))
        } else {
            Err(Error::ConfigInvalid("--force: zero axis".into()))
        }
    };
    Ok(Draw {
        c: input::triple("force", parts[0])?,
        n: unit(input::triple("force", parts[1])?)?,
        m: unit(input::triple("force", parts[2])?)?,
        t,
    })
}

pub fn ensemble(a: EnsembleArgs) -> Result<()> {
    csv_only(a.format, "ensemble")?;
    let spec = EnsembleSpec {
        count: a.count,
        seed: a.seed,
        t_window: (a.t_min, a.t_max),
        grid_steps: a.grid_steps,
        omega_max: a.omega_max,
        forced: a.force.iter().map(|s| parse_draw(s)).collect::<Result<_>>()?,
    };
    let records = run_ensemble(&spec)?;
    emit(&ensemble_csv(&spec, &records), a.output.as_deref())
}

pub fn optimal_state(a: OptimalStateArgs) -> Result<()> {
    let model = input::model(&a.model)?;
    let u = propagator(&model, a.t);
    let psi = optimal_input(&u, a.bell)?;
    let out = concurrence(&psi.evolve(&u));
    let names = ["00", "01", "10", "11"];
    let mut keys: Vec<String> = Vec::new();
    let mut values = Vec::new();
    for (name, z) in names.iter().zip(psi.amplitudes()) {
        keys.push(format!("re_{name}"));
        values.push(z.re);
        keys.push(format!("im_{name}"));
        values.push(z.im);
    }
    keys.push("input_concurrence".into());
    values.push(concurrence(&psi));
    keys.push("output_concurrence".into());
    values.push(out);
    let fields: Vec<(&str, f64)> = keys.iter().map(String::as_str).zip(values).collect();
    emit(&record(a.out.format, &fields), a.out.output.as_deref())
}

pub fn extremal_times(a: ExtremalArgs) -> Result<()> {
    let model = input::model(&a.model)?;
    let branch = ChiBranch::try_from(a.branch)?;
    let times = extremal(&model, branch, a.k_max)?;
    let mut s = String::new();
    let condition = |c: EnergyCondition| match c {
        EnergyCondition::EqualEnergies => "omega1 = omega2",
        EnergyCondition::OppositeEnergies => "omega1 = -omega2",
    };
    match a.out.format {
        Format::Csv => {
            let _ = writeln!(s, "k,t,branch,condition");
            for e in &times {
                let _ = writeln!(s, "{},{},{},{}", e.k, format_float(e.t), a.branch, condition(e.condition));
            }
        }
        Format::Text => {
            for e in &times {
                let _ = writeln!(s, "k = {:<3} t = {:<22} {}", e.k, e.t, condition(e.condition));
            }
        }
    }
    emit(&s, a.out.output.as_deref())
}
