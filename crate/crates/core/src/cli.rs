//! Command-line surface: argument parsing and the four subcommands.
//!
//! Exit codes: 0 success, 1 consistency violation (`check`), 2 usage or
//! output error.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use thiserror::Error;

use crate::engine::{
    check_picture_consistency, EvolutionTrace, LabeledGate, Picture, QubitFrame, CONSISTENCY_TOL,
};
use crate::halting::{contradiction_at, run_consistent_scenario, run_contradiction_sweep};
use crate::output::{format_sig, round_sig};
use crate::pauli::{rotation, Axis, BlochVector};
use crate::random::Sampler;

pub const EXIT_OK: u8 = 0;
pub const EXIT_VIOLATION: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

pub const SWEEP_COLUMNS: [&str; 10] = [
    "alpha",
    "sx",
    "sy",
    "sz",
    "hx",
    "hy",
    "hz",
    "divergence",
    "halted_s",
    "halted_h",
];

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] crate::error::Error),
    #[error("cannot write output: {0}")]
    Io(#[from] io::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    Csv,
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Rotate,
    Sweep,
    Check,
    HaltingDemo,
}

/// Fully resolved settings for one invocation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub command: Command,
    pub axis: Axis,
    /// Radians.
    pub angle: f64,
    pub steps: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub output_format: OutputFormat,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub output_path: Option<PathBuf>,
    pub vector: BlochVector,
    pub basis: BlochVector,
    pub picture: Picture,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        Self {
            command,
            axis: Axis::Y,
            angle: 0.0,
            steps: 1,
            seed: 0,
            tolerance: CONSISTENCY_TOL,
            output_format: match command {
                Command::Sweep => OutputFormat::Csv,
                _ => OutputFormat::Text,
            },
            output_path: None,
            vector: BlochVector::NORTH,
            basis: BlochVector::NORTH,
            picture: Picture::Schrodinger,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "bloch-pictures",
    version,
    about = "Single-qubit dynamics in the Schrödinger and Heisenberg pictures"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: CliCommand,
}

#[derive(Debug, Subcommand)]
pub enum CliCommand {
    /// Apply one axis rotation to a (state, basis) pair in a chosen picture
    Rotate(RotateArgs),
    /// Sweep α over [0, 2π) and compare the basis-input outputs of both pictures
    Sweep(SweepArgs),
    /// Seeded random picture-consistency trials
    Check(CheckArgs),
    /// Run the halting machine at one angle with state and basis inputs
    HaltingDemo(DemoArgs),
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,
    /// Write to this file instead of stdout
    #[arg(long, short)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct RotateArgs {
    /// Rotation axis: x, y or z
    #[arg(long, default_value = "y")]
    pub axis: Axis,
    /// Rotation angle in radians
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub angle: f64,
    /// Unit state vector as x,y,z
    #[arg(long, allow_hyphen_values = true, value_parser = parse_unit_vector, default_value = "0,0,1")]
    pub vector: BlochVector,
    /// Unit basis (observable) vector as x,y,z
    #[arg(long, allow_hyphen_values = true, value_parser = parse_unit_vector, default_value = "0,0,1")]
    pub basis: BlochVector,
    /// Which picture carries the evolution
    #[arg(long, default_value = "schrodinger")]
    pub picture: Picture,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Number of evenly spaced grid points on [0, 2π)
    #[arg(long, default_value_t = 360, value_parser = clap::value_parser!(u64).range(1..))]
    pub steps: u64,
    /// Divergence threshold used by the text summary
    #[arg(long, default_value_t = CONSISTENCY_TOL, value_parser = parse_tolerance)]
    pub tolerance: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Number of random (frame, gate) trials
    #[arg(long, default_value_t = 1000)]
    pub steps: u64,
    /// Seed for the ChaCha8 trial generator
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    /// Largest allowed |Schrödinger − Heisenberg| expectation difference
    #[arg(long, default_value_t = CONSISTENCY_TOL, value_parser = parse_tolerance)]
    pub tolerance: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

#[derive(Debug, Args)]
pub struct DemoArgs {
    /// Rotation angle α in radians
    #[arg(long, allow_hyphen_values = true, value_parser = parse_angle)]
    pub angle: f64,
    /// Divergence above which the basis-input run is flagged
    #[arg(long, default_value_t = CONSISTENCY_TOL, value_parser = parse_tolerance)]
    pub tolerance: f64,
    #[command(flatten)]
    pub out: OutputArgs,
}

impl From<CliCommand> for RunConfig {
    fn from(cmd: CliCommand) -> Self {
        let (mut config, out) = match cmd {
            CliCommand::Rotate(a) => {
                let mut c = RunConfig::new(Command::Rotate);
                c.axis = a.axis;
                c.angle = a.angle;
                c.vector = a.vector;
                c.basis = a.basis;
                c.picture = a.picture;
                (c, a.out)
            }
            CliCommand::Sweep(a) => {
                let mut c = RunConfig::new(Command::Sweep);
                c.steps = a.steps;
                c.tolerance = a.tolerance;
                (c, a.out)
            }
            CliCommand::Check(a) => {
                let mut c = RunConfig::new(Command::Check);
                c.steps = a.steps;
                c.seed = a.seed;
                c.tolerance = a.tolerance;
                (c, a.out)
            }
            CliCommand::HaltingDemo(a) => {
                let mut c = RunConfig::new(Command::HaltingDemo);
                c.angle = a.angle;
                c.tolerance = a.tolerance;
                (c, a.out)
            }
        };
        if let Some(f) = out.format {
            config.output_format = f;
        }
        config.output_path = out.output;
        config
    }
}

pub fn parse_angle(s: &str) -> Result<f64, String> {
    let a: f64 = s
        .trim()
        .parse()
        .map_err(|e| format!("invalid angle `{s}`: {e}"))?;
    if a.is_finite() {
        Ok(a)
    } else {
        Err(format!("angle must be finite, got {s}"))
    }
}

pub fn parse_tolerance(s: &str) -> Result<f64, String> {
    let t: f64 = s
        .trim()
        .parse()
        .map_err(|e| format!("invalid tolerance `{s}`: {e}"))?;
    if t > 0.0 && t.is_finite() {
        Ok(t)
    } else {
        Err(format!("tolerance must be positive, got {s}"))
    }
}

/// Parses `x,y,z` into a unit Bloch vector.
pub fn parse_unit_vector(s: &str) -> Result<BlochVector, String> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    if parts.len() != 3 {
        return Err(format!(
            "expected three comma-separated components x,y,z, got {} in `{s}`",
            parts.len()
        ));
    }
    let mut xyz = [0.0; 3];
    for (slot, p) in xyz.iter_mut().zip(&parts) {
        *slot = p
            .parse::<f64>()
            .map_err(|e| format!("invalid component `{p}`: {e}"))?;
    }
    BlochVector::from_array(xyz)
        .ensure_unit()
        .map_err(|e| e.to_string())
}

/// Runs `config`, writing to its output path or stdout, and returns the exit code.
pub fn execute(config: &RunConfig) -> u8 {
    let mut buf = Vec::new();
    let code = match run(config, &mut buf) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let written = match &config.output_path {
        Some(path) => File::create(path).and_then(|mut f| f.write_all(&buf)),
        None => io::stdout().lock().write_all(&buf),
    };
    if let Err(e) = written {
        match &config.output_path {
            Some(p) => eprintln!("error: cannot write {}: {e}", p.display()),
            None => eprintln!("error: cannot write output: {e}"),
        }
        return EXIT_USAGE;
    }
    code
}

/// Runs `config` into `out` and returns the exit code.
pub fn run(config: &RunConfig, out: &mut impl Write) -> Result<u8, CliError> {
    match config.command {
        Command::Rotate => cmd_rotate(config, out),
        Command::Sweep => cmd_sweep(config, out),
        Command::Check => cmd_check(config, out),
        Command::HaltingDemo => cmd_halting_demo(config, out),
    }
}

#[derive(Serialize)]
struct Report<'a, R: Serialize> {
    config: &'a RunConfig,
    records: &'a [R],
}

fn write_json<R: Serialize>(
    config: &RunConfig,
    records: &[R],
    out: &mut impl Write,
) -> Result<(), CliError> {
    serde_json::to_writer_pretty(&mut *out, &Report { config, records })?;
    writeln!(out)?;
    Ok(())
}

fn write_csv(
    header: &[&str],
    rows: impl IntoIterator<Item = Vec<String>>,
    out: &mut impl Write,
) -> Result<(), CliError> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    w.flush()?;
    Ok(())
}

fn fmt_vec(v: &BlochVector) -> String {
    format!(
        "({}, {}, {})",
        format_sig(v.x),
        format_sig(v.y),
        format_sig(v.z)
    )
}

fn rounded(v: BlochVector) -> BlochVector {
    BlochVector::new(round_sig(v.x), round_sig(v.y), round_sig(v.z))
}

#[derive(Clone, Debug, Serialize)]
struct RotateRow {
    picture: Picture,
    axis: Axis,
    angle: f64,
    vx: f64,
    vy: f64,
    vz: f64,
    ex: f64,
    ey: f64,
    ez: f64,
    expectation: f64,
}

pub fn cmd_rotate(config: &RunConfig, out: &mut impl Write) -> Result<u8, CliError> {
    let frame = QubitFrame::new(config.vector, config.basis)?;
    let gate = LabeledGate::new(
        format!("r{}({})", config.axis, format_sig(config.angle)),
        rotation(config.axis, config.angle)?,
    );
    let trace = EvolutionTrace::run(&frame, std::slice::from_ref(&gate), config.picture);
    let after = trace.final_frame();
    let (state, basis) = (rounded(after.state()), rounded(after.basis()));
    let row = RotateRow {
        picture: config.picture,
        axis: config.axis,
        angle: round_sig(config.angle),
        vx: state.x,
        vy: state.y,
        vz: state.z,
        ex: basis.x,
        ey: basis.y,
        ez: basis.z,
        expectation: round_sig(trace.final_expectation()),
    };

    match config.output_format {
        OutputFormat::Csv => write_csv(
            &[
                "picture",
                "axis",
                "angle",
                "vx",
                "vy",
                "vz",
                "ex",
                "ey",
                "ez",
                "expectation",
            ],
            [vec![
                row.picture.to_string(),
                row.axis.to_string(),
                format_sig(row.angle),
                format_sig(row.vx),
                format_sig(row.vy),
                format_sig(row.vz),
                format_sig(row.ex),
                format_sig(row.ey),
                format_sig(row.ez),
                format_sig(row.expectation),
            ]],
            out,
        )?,
        OutputFormat::Json => write_json(config, &[row], out)?,
        OutputFormat::Text => {
            writeln!(out, "picture      {}", config.picture)?;
            writeln!(out, "gate         {}", gate.label)?;
            writeln!(out, "state        {}", fmt_vec(&state))?;
            writeln!(out, "basis        {}", fmt_vec(&basis))?;
            writeln!(out, "expectation  {}", format_sig(row.expectation))?;
        }
    }
    Ok(EXIT_OK)
}

/// One sweep row with every number already rounded to the emitted precision.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub alpha: f64,
    pub sx: f64,
    pub sy: f64,
    pub sz: f64,
    pub hx: f64,
    pub hy: f64,
    pub hz: f64,
    pub divergence: f64,
    pub halted_s: bool,
    pub halted_h: bool,
}

impl SweepRow {
    fn csv_fields(&self) -> Vec<String> {
        let mut fields: Vec<String> = [
            self.alpha,
            self.sx,
            self.sy,
            self.sz,
            self.hx,
            self.hy,
            self.hz,
            self.divergence,
        ]
        .iter()
        .map(|&x| format_sig(x))
        .collect();
        fields.push(self.halted_s.to_string());
        fields.push(self.halted_h.to_string());
        fields
    }
}

/// `steps` evenly spaced angles `2πi/steps`, `i = 0..steps`.
pub fn sweep_grid(steps: u64) -> Vec<f64> {
    (0..steps)
        .map(|i| std::f64::consts::TAU * i as f64 / steps as f64)
        .collect()
}

pub fn sweep_rows(steps: u64) -> Result<Vec<SweepRow>, CliError> {
    let records = run_contradiction_sweep(&sweep_grid(steps))?;
    Ok(records
        .iter()
        .map(|r| {
            let (s, h) = (rounded(r.schrodinger_output), rounded(r.heisenberg_output));
            SweepRow {
                alpha: round_sig(r.alpha),
                sx: s.x,
                sy: s.y,
                sz: s.z,
                hx: h.x,
                hy: h.y,
                hz: h.z,
                divergence: round_sig(r.divergence_angle),
                halted_s: r.halted_schrodinger,
                halted_h: r.halted_heisenberg,
            }
        })
        .collect())
}

pub fn cmd_sweep(config: &RunConfig, out: &mut impl Write) -> Result<u8, CliError> {
    let rows = sweep_rows(config.steps)?;
    match config.output_format {
        OutputFormat::Csv => write_csv(&SWEEP_COLUMNS, rows.iter().map(SweepRow::csv_fields), out)?,
        OutputFormat::Json => write_json(config, &rows, out)?,
        OutputFormat::Text => {
            let mut line = String::new();
            for col in SWEEP_COLUMNS {
                let _ = write!(line, "{col:>19}");
            }
            writeln!(out, "{}", line.trim_end())?;
            for row in &rows {
                line.clear();
                for field in row.csv_fields() {
                    let _ = write!(line, "{field:>19}");
                }
                writeln!(out, "{}", line.trim_end())?;
            }
            let agree = rows
                .iter()
                .filter(|r| r.divergence <= config.tolerance)
                .count();
            writeln!(
                out,
                "{} of {} angles agree across pictures (divergence <= {})",
                agree,
                rows.len(),
                format_sig(config.tolerance)
            )?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Clone, Debug, Serialize)]
struct CheckSummary {
    trials: u64,
    seed: u64,
    tolerance: f64,
    max_deviation: f64,
    failures: u64,
    consistent: bool,
}

pub fn cmd_check(config: &RunConfig, out: &mut impl Write) -> Result<u8, CliError> {
    if config.steps == 0 {
        eprintln!("warning: zero trials requested; the check passes vacuously");
    }
    let mut sampler = Sampler::seeded(config.seed);
    let mut max_deviation = 0.0_f64;
    let mut failures = 0;
    for _ in 0..config.steps {
        let frame = QubitFrame::new(sampler.unit_vector(), sampler.unit_vector())?;
        let gate = sampler.unitary();
        let report = check_picture_consistency(&frame, &[gate], config.tolerance)?;
        max_deviation = max_deviation.max(report.deviation);
        if !report.consistent {
            failures += 1;
        }
    }
    let summary = CheckSummary {
        trials: config.steps,
        seed: config.seed,
        tolerance: config.tolerance,
        max_deviation,
        failures,
        consistent: failures == 0,
    };

    match config.output_format {
        OutputFormat::Csv => write_csv(
            &[
                "trials",
                "seed",
                "tolerance",
                "max_deviation",
                "failures",
                "consistent",
            ],
            [vec![
                summary.trials.to_string(),
                summary.seed.to_string(),
                format_sig(summary.tolerance),
                format_sig(summary.max_deviation),
                summary.failures.to_string(),
                summary.consistent.to_string(),
            ]],
            out,
        )?,
        OutputFormat::Json => write_json(config, std::slice::from_ref(&summary), out)?,
        OutputFormat::Text => {
            writeln!(out, "trials         {}", summary.trials)?;
            writeln!(out, "seed           {}", summary.seed)?;
            writeln!(out, "tolerance      {}", format_sig(summary.tolerance))?;
            writeln!(out, "max deviation  {}", format_sig(summary.max_deviation))?;
            writeln!(out, "failures       {}", summary.failures)?;
            writeln!(
                out,
                "{}",
                if summary.consistent {
                    "CONSISTENT"
                } else {
                    "INCONSISTENT"
                }
            )?;
        }
    }
    Ok(if summary.consistent {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

#[derive(Clone, Debug, Serialize)]
struct DemoRecord {
    alpha: f64,
    state_schrodinger_expectation: f64,
    state_heisenberg_expectation: f64,
    state_both_halted: bool,
    sx: f64,
    sy: f64,
    sz: f64,
    hx: f64,
    hy: f64,
    hz: f64,
    divergence: f64,
    halted_s: bool,
    halted_h: bool,
    contradiction: bool,
}

pub fn cmd_halting_demo(config: &RunConfig, out: &mut impl Write) -> Result<u8, CliError> {
    let alpha = config.angle;
    let consistent = run_consistent_scenario(alpha)?;
    let basis = contradiction_at(alpha)?;
    let contradiction = basis.divergence_angle > config.tolerance
        && basis.halted_schrodinger
        && basis.halted_heisenberg;
    let (s, h) = (
        rounded(basis.schrodinger_output),
        rounded(basis.heisenberg_output),
    );
    let rec = DemoRecord {
        alpha: round_sig(alpha),
        state_schrodinger_expectation: round_sig(consistent.schrodinger_expectation),
        state_heisenberg_expectation: round_sig(consistent.heisenberg_expectation),
        state_both_halted: consistent.both_halted,
        sx: s.x,
        sy: s.y,
        sz: s.z,
        hx: h.x,
        hy: h.y,
        hz: h.z,
        divergence: round_sig(basis.divergence_angle),
        halted_s: basis.halted_schrodinger,
        halted_h: basis.halted_heisenberg,
        contradiction,
    };

    match config.output_format {
        OutputFormat::Csv => write_csv(
            &[
                "alpha",
                "state_schrodinger_expectation",
                "state_heisenberg_expectation",
                "state_both_halted",
                "sx",
                "sy",
                "sz",
                "hx",
                "hy",
                "hz",
                "divergence",
                "halted_s",
                "halted_h",
                "contradiction",
            ],
            [vec![
                format_sig(rec.alpha),
                format_sig(rec.state_schrodinger_expectation),
                format_sig(rec.state_heisenberg_expectation),
                rec.state_both_halted.to_string(),
                format_sig(rec.sx),
                format_sig(rec.sy),
                format_sig(rec.sz),
                format_sig(rec.hx),
                format_sig(rec.hy),
                format_sig(rec.hz),
                format_sig(rec.divergence),
                rec.halted_s.to_string(),
                rec.halted_h.to_string(),
                rec.contradiction.to_string(),
            ]],
            out,
        )?,
        OutputFormat::Json => write_json(config, std::slice::from_ref(&rec), out)?,
        OutputFormat::Text => {
            let yes_no = |b: bool| if b { "yes" } else { "no" };
            writeln!(
                out,
                "halting machine: U_y({}) on the system, sigma_x on the halt qubit",
                format_sig(alpha)
            )?;
            writeln!(out)?;
            writeln!(out, "state vector as input")?;
            writeln!(
                out,
                "  schrodinger expectation  {}",
                format_sig(rec.state_schrodinger_expectation)
            )?;
            writeln!(
                out,
                "  heisenberg expectation   {}",
                format_sig(rec.state_heisenberg_expectation)
            )?;
            writeln!(
                out,
                "  halted in both pictures  {}",
                yes_no(rec.state_both_halted)
            )?;
            writeln!(out)?;
            writeln!(out, "basis vector as input")?;
            writeln!(out, "  schrodinger output       {}", fmt_vec(&s))?;
            writeln!(out, "  heisenberg output        {}", fmt_vec(&h))?;
            writeln!(
                out,
                "  divergence               {}",
                format_sig(rec.divergence)
            )?;
            writeln!(out, "  halted (schrodinger)     {}", yes_no(rec.halted_s))?;
            writeln!(out, "  halted (heisenberg)      {}", yes_no(rec.halted_h))?;
            writeln!(out)?;
            if contradiction {
                writeln!(
                    out,
                    "CONTRADICTION: both pictures halt but disagree on the output by {} rad",
                    format_sig(rec.divergence)
                )?;
            } else {
                writeln!(
                    out,
                    "no contradiction: both pictures produce the same output"
                )?;
            }
        }
    }
    Ok(EXIT_OK)
}
