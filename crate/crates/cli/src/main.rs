//! Command-line surface: scenario dispatch, wavefunction serialization,
//! verification suites, and parameter sweeps.
//!
//! Exit codes: 0 success, 1 invalid input, 2 convergence failure,
//! 3 verification failure.

mod config;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use fvo_core::numeric::linspace;
use fvo_core::specfun::SpecFunError;
use fvo_core::spectra::{
    self, coulomb_energy, free_mode, fvo_coulomb_quantization, fvo_coulomb_wavefunction,
    kgo_wavefunction, RadialSolution, ScenarioKind, SpectraError,
};
use fvo_core::verify::{render_report, run_suite_with, Suite};

use config::{ConfigError, OutputFormat, PhysicsFlags, RunConfig, SweepBlock};
use output::{
    spectrum_csv, spectrum_json, spectrum_rows, sweep_csv, wavefunction_csv, wavefunction_json,
    wavefunction_svg, SweepRow, WavefunctionTable,
};

const EXIT_INVALID_INPUT: u8 = 1;
const EXIT_CONVERGENCE: u8 = 2;
const EXIT_VERIFICATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "fvo",
    about = "Bound-state spectra and radial wavefunctions of a spin-0 Feshbach-Villars oscillator in a cosmic-dislocation background",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the discrete spectrum, one row per (n, sign)
    Spectrum(PhysicsFlags),
    /// Emit a radial wavefunction table (r, psi, phi1, phi2, charge_density)
    Wavefunction(WavefunctionArgs),
    /// Run verification suites and report pass/fail per check
    Verify(VerifyArgs),
    /// Sweep one parameter and emit a long-form table
    Sweep(SweepArgs),
}

#[derive(Args)]
struct WavefunctionArgs {
    #[command(flatten)]
    flags: PhysicsFlags,
    /// Radial level n (bound scenarios; oscillator+Coulomb starts at 1)
    #[arg(long)]
    n: Option<u32>,
    /// Energy E for the free scenario (must satisfy E^2 > m^2 + K^2)
    #[arg(long = "E")]
    energy: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite: all, metric, specfun, spectra, oracle
    #[arg(long, default_value = "all")]
    suite: String,
    /// Output path (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// JSON config file carrying oracle overrides; flags win
    #[arg(long)]
    config: Option<PathBuf>,
    /// Oracle override: finite-difference grid points
    #[arg(long = "grid-points")]
    grid_points: Option<usize>,
    /// Oracle override: fixed-point tolerance
    #[arg(long = "fixed-point-tol")]
    fixed_point_tol: Option<f64>,
    /// Oracle override: fixed-point iteration cap
    #[arg(long = "max-fixed-point-iters")]
    max_fixed_point_iters: Option<usize>,
    /// Oracle override: fixed-point damping factor
    #[arg(long)]
    damping: Option<f64>,
}

#[derive(Args)]
struct SweepArgs {
    #[command(flatten)]
    flags: PhysicsFlags,
    /// Swept parameter: alpha, chi, K, lambda, omega
    #[arg(long)]
    parameter: Option<String>,
    #[arg(long)]
    from: Option<f64>,
    #[arg(long)]
    to: Option<f64>,
    #[arg(long)]
    steps: Option<i64>,
}

struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn invalid(message: impl Into<String>) -> Self {
        CliError {
            code: EXIT_INVALID_INPUT,
            message: message.into(),
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        CliError::invalid(e.to_string())
    }
}

impl From<SpectraError> for CliError {
    fn from(e: SpectraError) -> Self {
        let code = match &e {
            SpectraError::SpecFun(SpecFunError::NotConverged { .. }) => EXIT_CONVERGENCE,
            _ => EXIT_INVALID_INPUT,
        };
        CliError {
            code,
            message: e.to_string(),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are success; parse errors are input errors.
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => EXIT_INVALID_INPUT,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Spectrum(flags) => cmd_spectrum(&flags),
        Command::Wavefunction(args) => cmd_wavefunction(&args),
        Command::Verify(args) => cmd_verify(&args),
        Command::Sweep(args) => cmd_sweep(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), CliError> {
    match out {
        Some(path) => std::fs::write(path, content)
            .map_err(|e| CliError::invalid(format!("cannot write {}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(content.as_bytes())
            .map_err(|e| CliError::invalid(format!("stdout: {e}"))),
    }
}

fn cmd_spectrum(flags: &PhysicsFlags) -> Result<(), CliError> {
    let (config, _) = flags.resolve()?;
    let spec = config.scenario_spec()?;
    let result = spectra::spectrum(&spec, config.n_max)?;
    if config.scenario == ScenarioKind::OscillatorCoulomb && result.levels.is_empty() {
        return Err(CliError {
            code: EXIT_CONVERGENCE,
            message: format!(
                "no allowed omega found for any n <= {}: {}",
                config.n_max.max(1),
                result.diagnostics.join("; ")
            ),
        });
    }
    let rows = spectrum_rows(&config, &result);
    let content = match config.format {
        OutputFormat::Csv => spectrum_csv(&rows),
        OutputFormat::Json => spectrum_json(&rows, &result.diagnostics),
        OutputFormat::Svg => {
            return Err(CliError::invalid(
                "svg output applies to wavefunctions only",
            ))
        }
    };
    write_output(&config.out, &content)
}

fn solve_wavefunction(
    config: &RunConfig,
    n: u32,
    energy: Option<f64>,
) -> Result<RadialSolution, CliError> {
    let spec = config.scenario_spec()?;
    let r_max = config.wavefunction_r_max(n);
    let grid = linspace(0.0, r_max, config.points.max(2));
    let solution = match config.scenario {
        ScenarioKind::Free => {
            let e = energy.ok_or_else(|| {
                CliError::invalid("missing --E: the free scenario needs an explicit energy")
            })?;
            free_mode(&spec, e, &grid)?
        }
        ScenarioKind::Oscillator => kgo_wavefunction(&spec, n, &grid)?,
        ScenarioKind::Coulomb => {
            let level = coulomb_energy(&spec, n)?;
            spectra::coulomb_wavefunction(&spec, level.e_bound, &grid)?
        }
        ScenarioKind::OscillatorCoulomb => {
            let quant = fvo_coulomb_quantization(&spec, n, None)?;
            let level = quant.levels.first().ok_or(CliError {
                code: EXIT_CONVERGENCE,
                message: format!(
                    "no allowed omega for n = {n}: {}",
                    quant.diagnostics.join("; ")
                ),
            })?;
            fvo_coulomb_wavefunction(&spec, level, &grid)?
        }
    };
    Ok(solution)
}

fn cmd_wavefunction(args: &WavefunctionArgs) -> Result<(), CliError> {
    let (config, _) = args.flags.resolve()?;
    let default_n = if config.scenario == ScenarioKind::OscillatorCoulomb {
        1
    } else {
        0
    };
    let n = args.n.unwrap_or(default_n);
    let solution = solve_wavefunction(&config, n, args.energy)?;
    let mode = solution
        .two_component(config.qn.n_param)
        .map_err(|e| CliError::invalid(e.to_string()))?;
    let charge = fvo_core::fv::charge_density(&mode);
    let table = WavefunctionTable {
        grid: solution.grid.clone(),
        psi: solution.profile.clone(),
        phi1: mode.phi1,
        phi2: mode.phi2,
        charge_density: charge,
        energy: solution.energy,
    };
    let content = match config.format {
        OutputFormat::Csv => wavefunction_csv(&table),
        OutputFormat::Json => wavefunction_json(&table),
        OutputFormat::Svg => wavefunction_svg(&table),
    };
    write_output(&config.out, &content)
}

fn cmd_verify(args: &VerifyArgs) -> Result<(), CliError> {
    let suite: Suite = args.suite.parse().map_err(CliError::invalid)?;
    let file = match &args.config {
        Some(path) => config::load_config_file(path)?,
        None => config::ConfigFile::default(),
    };
    let oracle = config::resolve_oracle_overrides(
        &file,
        args.grid_points,
        args.fixed_point_tol,
        args.max_fixed_point_iters,
        args.damping,
    );
    let checks = run_suite_with(suite, &oracle);
    let report = render_report(&checks);
    write_output(&args.out, &report)?;
    if checks.iter().any(|c| !c.passed) {
        return Err(CliError {
            code: EXIT_VERIFICATION,
            message: format!(
                "{} of {} checks failed",
                checks.iter().filter(|c| !c.passed).count(),
                checks.len()
            ),
        });
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let (config, sweep_block) = args.flags.resolve()?;
    let (parameter, from, to, steps) = match (&args.parameter, args.from, args.to, args.steps) {
        (Some(p), Some(f), Some(t), Some(s)) => (p.clone(), f, t, s),
        _ => match sweep_block {
            // Individual flags still win over the block.
            Some(SweepBlock {
                parameter,
                from,
                to,
                steps,
            }) => (
                args.parameter.clone().unwrap_or(parameter),
                args.from.unwrap_or(from),
                args.to.unwrap_or(to),
                args.steps.unwrap_or(steps),
            ),
            None => {
                return Err(CliError::invalid(
                    "sweep needs --parameter, --from, --to, --steps (or a config sweep block)",
                ))
            }
        },
    };
    if steps <= 0 {
        return Err(CliError::invalid(format!(
            "steps must be positive, got {steps}"
        )));
    }
    let parameter: &'static str = match parameter.as_str() {
        "alpha" => "alpha",
        "chi" => "chi",
        "K" => "K",
        "lambda" => "lambda",
        "omega" => "omega",
        other => {
            return Err(CliError::invalid(format!(
                "unknown sweep parameter `{other}` (expected alpha, chi, K, lambda, omega)"
            )))
        }
    };

    let steps = steps as usize;
    let values: Vec<f64> = if steps == 1 {
        vec![from]
    } else {
        (0..steps)
            .map(|i| from + (to - from) * i as f64 / (steps - 1) as f64)
            .collect()
    };

    let mut rows = Vec::new();
    for &value in &values {
        let mut varied = config.clone();
        match parameter {
            "alpha" => {
                varied.params = fvo_core::spacetime::SpacetimeParams::new(value, config.params.chi)
                    .map_err(|e| CliError::invalid(e.to_string()))?;
            }
            "chi" => {
                varied.params =
                    fvo_core::spacetime::SpacetimeParams::new(config.params.alpha, value)
                        .map_err(|e| CliError::invalid(e.to_string()))?;
            }
            "K" => varied.qn.k = value,
            "lambda" => varied.qn.lambda = value,
            "omega" => varied.qn.omega = value,
            _ => unreachable!(),
        }
        let spec = varied.scenario_spec()?;
        let result = spectra::spectrum(&spec, varied.n_max)?;
        for level in &result.levels {
            for e in [level.e_plus, level.e_minus] {
                rows.push(SweepRow {
                    parameter,
                    value,
                    n: level.n,
                    e,
                    omega_used: level.omega_used,
                });
            }
        }
    }
    write_output(&config.out, &sweep_csv(&rows))
}
