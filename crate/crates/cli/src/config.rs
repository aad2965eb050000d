//! Run configuration: command-line flags merged over an optional JSON
//! config file. Flags win; unknown file keys are rejected.

use std::path::PathBuf;

use clap::Args;
use serde::Deserialize;

use fvo_core::oracle::OracleConfig;
use fvo_core::spacetime::{QuantumNumbers, SpacetimeParams};
use fvo_core::spectra::{ScenarioKind, ScenarioSpec, SpectraError};
use fvo_core::EvalMode;

/// Flags shared by the physics subcommands. Every flag mirrors a config-file
/// key with hyphens replaced by underscores (`--n-max` ↔ `n_max`,
/// `--N-param` ↔ `N_param`).
#[derive(Args, Debug, Clone, Default)]
pub struct PhysicsFlags {
    /// Scenario: free, oscillator, coulomb, oscillator_coulomb
    #[arg(long)]
    pub scenario: Option<String>,
    /// Formula mode: rederived (default) or as_printed
    #[arg(long)]
    pub mode: Option<String>,
    /// Particle mass m > 0
    #[arg(long)]
    pub m: Option<f64>,
    /// Oscillator frequency ω ≥ 0
    #[arg(long)]
    pub omega: Option<f64>,
    /// Coulomb coupling strength λ
    #[arg(long)]
    pub lambda: Option<f64>,
    /// Angular parameter α ∈ (0, 1]
    #[arg(long)]
    pub alpha: Option<f64>,
    /// Dislocation distortion χ
    #[arg(long)]
    pub chi: Option<f64>,
    /// Linear momentum K along z
    #[arg(long = "K")]
    pub k: Option<f64>,
    /// Azimuthal quantum number j
    #[arg(long)]
    pub j: Option<i64>,
    /// Highest radial level n to emit
    #[arg(long = "n-max")]
    pub n_max: Option<u32>,
    /// FV splitting parameter N (defaults to m)
    #[arg(long = "N-param")]
    pub n_param: Option<f64>,
    /// Outer radius of wavefunction grids
    #[arg(long = "r-max")]
    pub r_max: Option<f64>,
    /// Number of grid points
    #[arg(long)]
    pub points: Option<usize>,
    /// Output format: csv (default), json, or svg (wavefunction only)
    #[arg(long)]
    pub format: Option<String>,
    /// Output path (stdout when omitted)
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON config file; flags override its values
    #[arg(long)]
    pub config: Option<PathBuf>,
}

/// JSON config file schema. Keys mirror the flags (hyphens → underscores);
/// anything else is rejected.
#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConfigFile {
    pub scenario: Option<String>,
    pub mode: Option<String>,
    pub m: Option<f64>,
    pub omega: Option<f64>,
    pub lambda: Option<f64>,
    pub alpha: Option<f64>,
    pub chi: Option<f64>,
    #[serde(rename = "K")]
    pub k: Option<f64>,
    pub j: Option<i64>,
    pub n_max: Option<u32>,
    #[serde(rename = "N_param")]
    pub n_param: Option<f64>,
    pub r_max: Option<f64>,
    pub points: Option<usize>,
    pub format: Option<String>,
    pub out: Option<PathBuf>,
    pub grid_points: Option<usize>,
    pub fixed_point_tol: Option<f64>,
    pub max_fixed_point_iters: Option<usize>,
    pub damping: Option<f64>,
    pub sweep: Option<SweepBlock>,
}

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepBlock {
    pub parameter: String,
    pub from: f64,
    pub to: f64,
    pub steps: i64,
}

/// Fully resolved run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub scenario: ScenarioKind,
    pub mode: EvalMode,
    pub params: SpacetimeParams,
    pub qn: QuantumNumbers,
    pub n_max: u32,
    pub r_max: Option<f64>,
    pub points: usize,
    pub format: OutputFormat,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputFormat {
    Csv,
    Json,
    Svg,
}

#[derive(Debug)]
pub enum ConfigError {
    Invalid(String),
    Io(String),
}

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            ConfigError::Invalid(msg) => write!(f, "invalid input: {msg}"),
            ConfigError::Io(msg) => write!(f, "io error: {msg}"),
        }
    }
}

impl From<SpectraError> for ConfigError {
    fn from(e: SpectraError) -> Self {
        ConfigError::Invalid(e.to_string())
    }
}

pub fn load_config_file(path: &PathBuf) -> Result<ConfigFile, ConfigError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| ConfigError::Io(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| ConfigError::Invalid(format!("config file {}: {e}", path.display())))
}

impl PhysicsFlags {
    /// Merge flags over the config file and validate into a `RunConfig`.
    pub fn resolve(&self) -> Result<(RunConfig, Option<SweepBlock>), ConfigError> {
        let file = match &self.config {
            Some(path) => load_config_file(path)?,
            None => ConfigFile::default(),
        };

        let scenario_name = self
            .scenario
            .clone()
            .or(file.scenario.clone())
            .ok_or_else(|| ConfigError::Invalid("missing --scenario".into()))?;
        let scenario: ScenarioKind = scenario_name.parse().map_err(ConfigError::Invalid)?;

        let mode: EvalMode = match self.mode.clone().or(file.mode.clone()) {
            Some(s) => s.parse().map_err(ConfigError::Invalid)?,
            None => EvalMode::Rederived,
        };

        let m = self
            .m
            .or(file.m)
            .ok_or_else(|| ConfigError::Invalid("missing --m".into()))?;
        let omega = self.omega.or(file.omega).unwrap_or(0.0);
        if matches!(
            scenario,
            ScenarioKind::Oscillator | ScenarioKind::OscillatorCoulomb
        ) && !(omega > 0.0)
        {
            return Err(ConfigError::Invalid(format!(
                "missing --omega: the {} scenario needs omega > 0",
                scenario.as_str()
            )));
        }
        let lambda = self.lambda.or(file.lambda).unwrap_or(0.0);
        let alpha = self.alpha.or(file.alpha).unwrap_or(1.0);
        let chi = self.chi.or(file.chi).unwrap_or(0.0);
        let k = self.k.or(file.k).unwrap_or(0.0);
        let j = self.j.or(file.j).unwrap_or(0);
        let n_param = self.n_param.or(file.n_param).unwrap_or(m);

        let params =
            SpacetimeParams::new(alpha, chi).map_err(|e| ConfigError::Invalid(e.to_string()))?;
        let qn = QuantumNumbers::new(j, k, 0, m, omega, lambda, n_param)
            .map_err(|e| ConfigError::Invalid(e.to_string()))?;
        // Scenario-level validation (omega/lambda requirements).
        ScenarioSpec::new(scenario, mode, params, qn)?;

        let format = match self
            .format
            .clone()
            .or(file.format.clone())
            .unwrap_or_else(|| "csv".into())
            .as_str()
        {
            "csv" => OutputFormat::Csv,
            "json" => OutputFormat::Json,
            "svg" => OutputFormat::Svg,
            other => {
                return Err(ConfigError::Invalid(format!(
                    "unknown format `{other}` (expected csv, json, svg)"
                )))
            }
        };

        let run = RunConfig {
            scenario,
            mode,
            params,
            qn,
            n_max: self.n_max.or(file.n_max).unwrap_or(0),
            r_max: self.r_max.or(file.r_max),
            points: self.points.or(file.points).unwrap_or(400),
            format,
            out: self.out.clone().or(file.out.clone()),
        };
        Ok((run, file.sweep))
    }
}

impl RunConfig {
    pub fn scenario_spec(&self) -> Result<ScenarioSpec, SpectraError> {
        ScenarioSpec::new(self.scenario, self.mode, self.params, self.qn)
    }

    /// Wavefunction grid cutoff: explicit flag, or a scenario-shaped default
    /// covering the classically allowed region plus decay length.
    pub fn wavefunction_r_max(&self, n: u32) -> f64 {
        if let Some(r) = self.r_max {
            return r;
        }
        let spec = match self.scenario_spec() {
            Ok(s) => s,
            Err(_) => return 10.0,
        };
        match self.scenario {
            ScenarioKind::Oscillator | ScenarioKind::OscillatorCoulomb => {
                let zeta = spec.zeta().abs();
                let momega = self.qn.m * self.qn.omega;
                6.0 * ((2.0 * (n as f64 + zeta) + 3.0) / momega).sqrt()
            }
            ScenarioKind::Coulomb => {
                let thr = spec.threshold();
                match fvo_core::spectra::coulomb_energy(&spec, n) {
                    Ok(level) => {
                        40.0 / (thr * thr - level.e_bound * level.e_bound).max(1e-8).sqrt()
                    }
                    Err(_) => 10.0,
                }
            }
            ScenarioKind::Free => 10.0,
        }
    }
}

/// Oracle settings for `verify`: explicit values win over the config file,
/// which wins over the defaults.
pub fn resolve_oracle_overrides(
    file: &ConfigFile,
    grid_points: Option<usize>,
    fixed_point_tol: Option<f64>,
    max_fixed_point_iters: Option<usize>,
    damping: Option<f64>,
) -> OracleConfig {
    let mut oracle = OracleConfig::default();
    if let Some(gp) = grid_points.or(file.grid_points) {
        oracle.grid_points = gp;
    }
    if let Some(t) = fixed_point_tol.or(file.fixed_point_tol) {
        oracle.fixed_point_tol = t;
    }
    if let Some(i) = max_fixed_point_iters.or(file.max_fixed_point_iters) {
        oracle.max_fixed_point_iters = i;
    }
    if let Some(d) = damping.or(file.damping) {
        oracle.damping = d;
    }
    oracle
}
