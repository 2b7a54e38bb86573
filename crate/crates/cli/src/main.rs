//! `qkak`: Cartan coordinates and entanglement capability of two-qubit
//! evolutions from the command line.

mod commands;
mod input;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qkak::sweep::Engine;
use qkak::Error;

#[derive(Parser, Debug)]
#[command(name = "qkak", version, about = "Two-qubit KAK decomposition and entanglement capability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Canonical coordinates of one unitary, read from a file or generated by a model.
    Decompose(DecomposeArgs),
    /// Entanglement capability h = θx + θy of a model at time t.
    Capability(CapabilityArgs),
    /// Grid sweep over (ω₁, ω₂, t) driven by a config file.
    Sweep(SweepArgs),
    /// Random-Hamiltonian ensemble with the diagonal-ridge statistic.
    Ensemble(EnsembleArgs),
    /// Input state that the evolution maps to a maximally entangled state.
    OptimalState(OptimalStateArgs),
    /// Times t = kπ / (2(c_x ± c_y)) of the extremal χ values.
    ExtremalTimes(ExtremalArgs),
}

#[derive(Args, Debug, Clone)]
struct ModelArgs {
    /// Coupling (c_x, c_y, c_z).
    #[arg(long, value_name = "CX,CY,CZ", allow_hyphen_values = true)]
    c: String,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    omega1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    omega2: f64,
    /// Axis of the first qubit's local field.
    #[arg(long, value_name = "X,Y,Z", default_value = "0,0,1", allow_hyphen_values = true)]
    n: String,
    /// Axis of the second qubit's local field.
    #[arg(long, value_name = "X,Y,Z", default_value = "0,0,1", allow_hyphen_values = true)]
    m: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum EngineArg {
    ClosedForm,
    Generic,
    Both,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::ClosedForm => Engine::ClosedForm,
            EngineArg::Generic => Engine::Generic,
            EngineArg::Both => Engine::Both,
        }
    }
}

#[derive(Args, Debug)]
struct DecomposeArgs {
    /// File with four rows of eight numbers (re, im pairs).
    #[arg(long, conflicts_with_all = ["c", "t"])]
    unitary: Option<std::path::PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    omega1: f64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    omega2: f64,
    #[arg(long, default_value = "0,0,1", allow_hyphen_values = true)]
    n: String,
    #[arg(long, default_value = "0,0,1", allow_hyphen_values = true)]
    m: String,
    #[arg(long, allow_hyphen_values = true)]
    t: Option<f64>,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    output: Option<std::path::PathBuf>,
}

#[derive(Args, Debug)]
struct CapabilityArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    #[arg(long, value_enum, default_value_t = EngineArg::Generic)]
    engine: EngineArg,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct SweepArgs {
    /// INI config with [model], [grid] and [output] sections.
    config: std::path::PathBuf,
    #[arg(long, value_enum)]
    engine: Option<EngineArg>,
    #[arg(long)]
    seed: Option<u64>,
    /// Overrides the config's output path; `-` writes to stdout.
    #[arg(long)]
    output: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Print peak diagnostics to stderr.
    #[arg(long)]
    peaks: bool,
}

#[derive(Args, Debug)]
struct EnsembleArgs {
    #[arg(long, default_value_t = 10)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.0, allow_hyphen_values = true)]
    t_min: f64,
    #[arg(long, default_value_t = 2.0 * std::f64::consts::PI)]
    t_max: f64,
    #[arg(long, default_value_t = 21)]
    grid_steps: usize,
    #[arg(long, default_value_t = 3.0)]
    omega_max: f64,
    /// Extra draw evaluated first: `CX,CY,CZ;NX,NY,NZ;MX,MY,MZ;T`.
    #[arg(long, allow_hyphen_values = true)]
    force: Vec<String>,
    #[arg(long)]
    output: Option<std::path::PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args, Debug)]
struct OptimalStateArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    t: f64,
    /// Magic-basis state index.
    #[arg(long, default_value_t = 1)]
    bell: usize,
    #[command(flatten)]
    out: OutputArgs,
}

#[derive(Args, Debug)]
struct ExtremalArgs {
    #[command(flatten)]
    model: ModelArgs,
    #[arg(long, default_value_t = 1)]
    branch: u8,
    #[arg(long, default_value_t = 5)]
    k_max: u32,
    #[command(flatten)]
    out: OutputArgs,
}

/// Exit status for each error class.
fn exit_code(err: &Error) -> u8 {
    match err {
        Error::ConfigInvalid(_) | Error::Parse { .. } => 3,
        Error::Io(_) => 4,
        Error::InvalidModel(_)
        | Error::NonHermitianInput(_)
        | Error::NotSymmetric(_)
        | Error::NotUnitary(_)
        | Error::NotNormalized(_) => 5,
        Error::WrongModelClass => 6,
        Error::DegenerateCoupling => 7,
        Error::ReconstructionFailure(_) | Error::InconsistentLambdas(_) => 8,
        Error::EmptyTable => 9,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Decompose(a) => commands::decompose(a),
        Command::Capability(a) => commands::capability(a),
        Command::Sweep(a) => commands::sweep(a),
        Command::Ensemble(a) => commands::ensemble(a),
        Command::OptimalState(a) => commands::optimal_state(a),
        Command::ExtremalTimes(a) => commands::extremal_times(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let msg = e.to_string().replace('\n', " ");
            eprintln!("qkak: error: {msg}");
            ExitCode::from(exit_code(&e))
        }
    }
}
