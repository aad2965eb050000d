//! Browser demo bindings: three interactive operations over the core solver,
//! each returning JSON for the static page in `www/` to plot.
//!
//! Build with `wasm-pack build crates/wasm --target web --out-dir www/pkg`
//! and serve `crates/wasm/www/`.

use serde::Serialize;
use wasm_bindgen::prelude::*;

use fvo_core::numeric::linspace;
use fvo_core::spacetime::{QuantumNumbers, SpacetimeParams};
use fvo_core::spectra::{
    self, coulomb_energy, free_mode, fvo_coulomb_quantization, fvo_coulomb_wavefunction,
    kgo_wavefunction, RadialSolution, ScenarioKind, ScenarioSpec,
};
use fvo_core::EvalMode;

#[allow(clippy::too_many_arguments)]
fn build_spec(
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
) -> Result<ScenarioSpec, String> {
    let kind: ScenarioKind = scenario.parse()?;
    let mode: EvalMode = mode.parse()?;
    let params = SpacetimeParams::new(alpha, chi).map_err(|e| e.to_string())?;
    let qn = QuantumNumbers::new(j, k, 0, m, omega, lambda, m).map_err(|e| e.to_string())?;
    ScenarioSpec::new(kind, mode, params, qn).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct LevelOut {
    n: u32,
    e_plus: f64,
    e_minus: f64,
    omega_used: f64,
}

#[derive(Serialize)]
struct SpectrumOut {
    scenario: String,
    threshold: f64,
    levels: Vec<LevelOut>,
    diagnostics: Vec<String>,
}

/// Discrete spectrum up to n_max as JSON:
/// `{scenario, threshold, levels: [{n, e_plus, e_minus, omega_used}], diagnostics}`.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn spectrum_json(
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
    n_max: u32,
) -> Result<String, JsValue> {
    spectrum_json_impl(scenario, mode, alpha, chi, k, j, m, omega, lambda, n_max)
        .map_err(|e| JsValue::from_str(&e))
}

#[allow(clippy::too_many_arguments)]
fn spectrum_json_impl(
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
    n_max: u32,
) -> Result<String, String> {
    let spec = build_spec(scenario, mode, alpha, chi, k, j, m, omega, lambda)?;
    let result = spectra::spectrum(&spec, n_max).map_err(|e| e.to_string())?;
    let out = SpectrumOut {
        scenario: result.scenario.as_str().to_string(),
        threshold: spec.threshold(),
        levels: result
            .levels
            .iter()
            .map(|l| LevelOut {
                n: l.n,
                e_plus: l.e_plus,
                e_minus: l.e_minus,
                omega_used: l.omega_used,
            })
            .collect(),
        diagnostics: result.diagnostics.clone(),
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct WavefunctionOut {
    energy: f64,
    r: Vec<f64>,
    psi: Vec<f64>,
    phi1: Vec<f64>,
    phi2: Vec<f64>,
}

fn solve_wavefunction(
    spec: &ScenarioSpec,
    n: u32,
    energy: f64,
    grid: &[f64],
) -> Result<RadialSolution, String> {
    let err = |e: spectra::SpectraError| e.to_string();
    match spec.kind {
        ScenarioKind::Free => free_mode(spec, energy, grid).map_err(err),
        ScenarioKind::Oscillator => kgo_wavefunction(spec, n, grid).map_err(err),
        ScenarioKind::Coulomb => {
            let level = coulomb_energy(spec, n).map_err(err)?;
            spectra::coulomb_wavefunction(spec, level.e_bound, grid).map_err(err)
        }
        ScenarioKind::OscillatorCoulomb => {
            let quant = fvo_coulomb_quantization(spec, n.max(1), None).map_err(err)?;
            let level = quant
                .levels
                .first()
                .ok_or_else(|| "no allowed omega for this level".to_string())?;
            fvo_coulomb_wavefunction(spec, level, grid).map_err(err)
        }
    }
}

/// Radial profile with its FV components as JSON:
/// `{energy, r: [...], psi: [...], phi1: [...], phi2: [...]}`.
/// `energy` is only read for the free scenario; bound scenarios take level n.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn wavefunction_json(
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
    n: u32,
    energy: f64,
    r_max: f64,
    points: usize,
) -> Result<String, JsValue> {
    wavefunction_json_impl(
        scenario, mode, alpha, chi, k, j, m, omega, lambda, n, energy, r_max, points,
    )
    .map_err(|e| JsValue::from_str(&e))
}

#[allow(clippy::too_many_arguments)]
fn wavefunction_json_impl(
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
    n: u32,
    energy: f64,
    r_max: f64,
    points: usize,
) -> Result<String, String> {
    let spec = build_spec(scenario, mode, alpha, chi, k, j, m, omega, lambda)?;
    let grid = linspace(0.0, r_max.max(1e-6), points.clamp(2, 5000));
    let solution = solve_wavefunction(&spec, n, energy, &grid)?;
    let two = solution
        .two_component(spec.qn.n_param)
        .map_err(|e| e.to_string())?;
    let out = WavefunctionOut {
        energy: solution.energy,
        r: solution.grid.clone(),
        psi: solution.profile.clone(),
        phi1: two.phi1,
        phi2: two.phi2,
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct SweepPoint {
    value: f64,
    e_plus: Vec<f64>,
}

#[derive(Serialize)]
struct SweepOut {
    parameter: String,
    points: Vec<SweepPoint>,
}

/// Positive-branch levels as a function of one swept parameter, as JSON:
/// `{parameter, points: [{value, e_plus: [E(n) for n up to n_max]}]}`.
#[wasm_bindgen]
#[allow(clippy::too_many_arguments)]
pub fn sweep_json(
    parameter: &str,
    from: f64,
    to: f64,
    steps: usize,
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
    n_max: u32,
) -> Result<String, JsValue> {
    sweep_json_impl(
        parameter, from, to, steps, scenario, mode, alpha, chi, k, j, m, omega, lambda, n_max,
    )
    .map_err(|e| JsValue::from_str(&e))
}

#[allow(clippy::too_many_arguments)]
fn sweep_json_impl(
    parameter: &str,
    from: f64,
    to: f64,
    steps: usize,
    scenario: &str,
    mode: &str,
    alpha: f64,
    chi: f64,
    k: f64,
    j: i64,
    m: f64,
    omega: f64,
    lambda: f64,
    n_max: u32,
) -> Result<String, String> {
    let steps = steps.clamp(2, 400);
    let values = linspace(from, to, steps);
    let mut points = Vec::with_capacity(values.len());
    for &value in &values {
        let (a, c, kk, om, la) = match parameter {
            "alpha" => (value, chi, k, omega, lambda),
            "chi" => (alpha, value, k, omega, lambda),
            "K" => (alpha, chi, value, omega, lambda),
            "omega" => (alpha, chi, k, value, lambda),
            "lambda" => (alpha, chi, k, omega, value),
            other => return Err(format!("unknown sweep parameter `{other}`")),
        };
        // Out-of-domain samples (alpha > 1, lambda = 0 for Coulomb, ...) are
        // skipped rather than aborting the whole curve.
        let Ok(spec) = build_spec(scenario, mode, a, c, kk, j, m, om, la) else {
            continue;
        };
        match spectra::spectrum(&spec, n_max) {
            Ok(result) => points.push(SweepPoint {
                value,
                e_plus: result.levels.iter().map(|l| l.e_plus).collect(),
            }),
            Err(_) => continue,
        }
    }
    let out = SweepOut {
        parameter: parameter.to_string(),
        points,
    };
    serde_json::to_string(&out).map_err(|e| e.to_string())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spectrum_json_flat_ladder() {
        let json = spectrum_json_impl(
            "oscillator",
            "rederived",
            1.0,
            0.0,
            0.0,
            0,
            1.0,
            1.0,
            0.0,
            2,
        )
        .unwrap();
        assert!(json.contains("\"levels\""));
        assert!(json.contains("2.23606797749979"));
    }

    #[test]
    fn wavefunction_json_gaussian() {
        let json = wavefunction_json_impl(
            "oscillator",
            "rederived",
            1.0,
            0.0,
            0.0,
            0,
            1.0,
            1.0,
            0.0,
            0,
            0.0,
            6.0,
            50,
        )
        .unwrap();
        assert!(json.contains("\"psi\""));
    }

    #[test]
    fn sweep_json_alpha() {
        let json = sweep_json_impl(
            "alpha",
            0.3,
            1.0,
            8,
            "oscillator",
            "rederived",
            1.0,
            0.0,
            0.0,
            1,
            1.0,
            1.0,
            0.0,
            1,
        )
        .unwrap();
        assert!(json.contains("\"points\""));
    }

    #[test]
    fn invalid_inputs_are_errors() {
        assert!(
            spectrum_json_impl("bogus", "rederived", 1.0, 0.0, 0.0, 0, 1.0, 1.0, 0.0, 1).is_err()
        );
        assert!(spectrum_json_impl(
            "oscillator",
            "rederived",
            2.0,
            0.0,
            0.0,
            0,
            1.0,
            1.0,
            0.0,
            1
        )
        .is_err());
    }
}
