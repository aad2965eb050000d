//! Independent numerical ground truth: a finite-difference radial eigenvalue
//! solver for the bound-state scenarios, including the nonlinear
//! (energy-dependent) Coulomb coupling.
//!
//! This module is analytic-formula-blind: no code path reads the closed-form
//! spectra. Its only inputs are the coefficient assembly of the selected
//! radial equation.
//!
//! Discretization: with the indicial exponent s = ζ_eff split off through
//! ψ = r^s·v, the remainder v is smooth at the axis and satisfies the
//! conservative equation (r^{2s+1} v′)′ + r^{2s+1}[W − U(r)]v = 0 with
//! U = m²ω²r² + 2λE/r. The cell-centered flux discretization of that form,
//! symmetrized by the cell masses, is a symmetric tridiagonal matrix with a
//! Dirichlet outer end; the inner face sits at r_min (default 0), where the
//! flux r^{2s+1}v′ vanishes identically. This keeps clean second-order
//! convergence for every index — including the conical ζ = 0 sector and
//! fractional ζ ∈ (0, 1), where a plain (ζ²−¼)/r² potential on a pinned grid
//! loses several digits. The eigenvalues W are those of the Liouville-normal
//! operator u″ + [W − V_eff]u, u = √r·ψ, which the returned
//! [`EffectivePotential`] also exposes directly.

use serde::Serialize;
use thiserror::Error;

use crate::spectra::{ScenarioKind, ScenarioSpec, SpectraError};

#[derive(Debug, Error)]
pub enum OracleError {
    #[error(transparent)]
    Spectra(#[from] SpectraError),
    #[error("grid must have at least 200 points, got {0}")]
    GridTooCoarse(usize),
    #[error("invalid radial domain: r_min = {r_min}, r_max = {r_max}")]
    BadDomain { r_min: f64, r_max: f64 },
    #[error("requested {requested} states but only {available} grid states available")]
    StatesUnavailable { requested: usize, available: usize },
    #[error(
        "fixed-point iteration did not converge in {iterations} steps (last delta {last_delta})"
    )]
    FixedPointDiverged { iterations: usize, last_delta: f64 },
    #[error("eigenvalue W = {w} has no real energy on this scenario (E^2 = {e_sq} < 0)")]
    NoRealEnergy { w: f64, e_sq: f64 },
}

/// Configuration of one finite-difference solve.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct OracleConfig {
    /// Outer cutoff; `None` selects a scenario-dependent default covering the
    /// classically allowed region plus decay length.
    pub r_max: Option<f64>,
    pub grid_points: usize,
    /// Inner face position (default 0; see module docs).
    pub r_min: f64,
    pub fixed_point_tol: f64,
    pub max_fixed_point_iters: usize,
    pub damping: f64,
    pub states_requested: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            r_max: None,
            grid_points: 4000,
            r_min: 0.0,
            fixed_point_tol: 1e-10,
            max_fixed_point_iters: 100,
            damping: 0.5,
            states_requested: 1,
        }
    }
}

/// Eigenvalues converted back to energies, with per-state Richardson error
/// estimates from one grid refinement.
#[derive(Clone, Debug, Serialize)]
pub struct OracleResult {
    /// Energies on the requested branch, ordered by state index.
    pub eigenvalues: Vec<f64>,
    /// Richardson error estimate per eigenvalue (on the matrix eigenvalue W,
    /// propagated to E).
    pub grid_convergence: Vec<f64>,
    /// Outer fixed-point iterations (1 for the linear scenarios).
    pub iterations: usize,
}

/// Coefficient assembly of the selected radial equation in Liouville normal
/// form: u'' + [W(E) − V_eff(r)]u = 0 with
/// V_eff = (ζ_eff² − 1/4)/r² + m²ω²r² + 2λE/r.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct EffectivePotential {
    pub zeta_eff_sq: f64,
    /// m²ω² (0 for non-oscillator scenarios).
    pub osc_coeff: f64,
    /// 2λE (0 for non-Coulomb scenarios or E_guess = 0).
    pub coul_coeff: f64,
    /// E² = W + e_sq_offset: m²+K² for free/Coulomb, m²+K²−2mω for the
    /// oscillator scenarios (their W carries the +2mω shift).
    pub e_sq_offset: f64,
}

impl EffectivePotential {
    /// V_eff(r) in the u-equation.
    pub fn eval(&self, r: f64) -> f64 {
        (self.zeta_eff_sq - 0.25) / (r * r) + self.osc_coeff * r * r + self.coul_coeff / r
    }

    /// m²ω²r² + 2λE/r — the potential left after the indicial factor r^s is
    /// split off (the centrifugal term lives in the discretization weight).
    pub fn smooth_potential(&self, r: f64) -> f64 {
        self.osc_coeff * r * r + self.coul_coeff / r
    }

    pub fn w_from_e(&self, e: f64) -> f64 {
        e * e - self.e_sq_offset
    }

    pub fn e_from_w(&self, w: f64, branch: f64) -> Result<f64, OracleError> {
        let e_sq = w + self.e_sq_offset;
        if e_sq < 0.0 {
            return Err(OracleError::NoRealEnergy { w, e_sq });
        }
        Ok(branch.signum() * e_sq.sqrt())
    }
}

/// Build the coefficient assembly for a scenario at a frozen energy guess
/// (the guess only enters through the Coulomb term 2λE/r).
pub fn effective_potential(
    spec: &ScenarioSpec,
    e_guess: f64,
) -> Result<EffectivePotential, OracleError> {
    let zeta = spec.zeta();
    let (zeta_eff_sq, coul_coeff) = match spec.kind {
        ScenarioKind::Free | ScenarioKind::Oscillator => (zeta * zeta, 0.0),
        ScenarioKind::Coulomb | ScenarioKind::OscillatorCoulomb => {
            let gamma = spec.gamma_abs()?; // rejects overcritical coupling
            (gamma * gamma, 2.0 * spec.qn.lambda * e_guess)
        }
    };
    let momega = spec.qn.m * spec.qn.omega;
    let (osc_coeff, e_sq_offset) = match spec.kind {
        ScenarioKind::Oscillator | ScenarioKind::OscillatorCoulomb => {
            (momega * momega, spec.threshold().powi(2) - 2.0 * momega)
        }
        _ => (0.0, spec.threshold().powi(2)),
    };
    Ok(EffectivePotential {
        zeta_eff_sq,
        osc_coeff,
        coul_coeff,
        e_sq_offset,
    })
}

/// Default outer cutoff: oscillator-type scenarios get six times the
/// classical turning radius of the highest requested state; pure Coulomb
/// gets 40 decay lengths of the current energy guess.
pub fn default_r_max(spec: &ScenarioSpec, e_guess: f64, states: usize) -> f64 {
    let momega = spec.qn.m * spec.qn.omega;
    match spec.kind {
        ScenarioKind::Oscillator | ScenarioKind::OscillatorCoulomb => {
            let zeta_eff = match spec.kind {
                ScenarioKind::Oscillator => spec.zeta().abs(),
                _ => spec.gamma_abs().unwrap_or_else(|_| spec.zeta().abs()),
            };
            let n_top = states as f64;
            6.0 * ((2.0 * (n_top + zeta_eff) + 3.0) / momega).sqrt()
        }
        _ => {
            let thr = spec.threshold();
            let kappa_tilde = (thr * thr - e_guess * e_guess).max(1e-4 * thr * thr).sqrt();
            40.0 / kappa_tilde
        }
    }
}

mod tridiag {
    //! Sturm-sequence bisection for symmetric tridiagonal matrices: selected
    //! lowest eigenvalues only, no full diagonalization.

    /// Number of eigenvalues strictly below x (LDLᵀ pivot count).
    pub fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
        let n = diag.len();
        let mut count = 0usize;
        let mut q = diag[0] - x;
        if q < 0.0 {
            count += 1;
        }
        let guard = 1e-300;
        for i in 1..n {
            let q_safe = if q.abs() < guard {
                if q >= 0.0 {
                    guard
                } else {
                    -guard
                }
            } else {
                q
            };
            q = (diag[i] - x) - off[i - 1] * off[i - 1] / q_safe;
            if q < 0.0 {
                count += 1;
            }
        }
        count
    }

    /// The k lowest eigenvalues by bisection inside the Gershgorin bounds.
    pub fn lowest_eigenvalues(diag: &[f64], off: &[f64], k: usize) -> Vec<f64> {
        let n = diag.len();
        let mut lo = f64::MAX;
        let mut hi = f64::MIN;
        for i in 0..n {
            let e_left = if i > 0 { off[i - 1].abs() } else { 0.0 };
            let e_right = if i < n - 1 { off[i].abs() } else { 0.0 };
            lo = lo.min(diag[i] - e_left - e_right);
            hi = hi.max(diag[i] + e_left + e_right);
        }
        lo -= 1.0;
        hi += 1.0;
        let mut out = Vec::with_capacity(k);
        for index in 0..k {
            let (mut a, mut b) = (lo, hi);
            for _ in 0..200 {
                let mid = 0.5 * (a + b);
                if (b - a) <= 4.0 * f64::EPSILON * mid.abs().max(1.0) {
                    break;
                }
                if sturm_count(diag, off, mid) <= index {
                    a = mid;
                } else {
                    b = mid;
                }
            }
            out.push(0.5 * (a + b));
        }
        out
    }
}

/// Lowest matrix eigenvalues W of the index-adapted conservative
/// discretization on `points` cells over (r_min, r_max), no refinement.
/// Exposed for convergence-order measurements.
pub fn solve_w_single_grid(
    pot: &EffectivePotential,
    r_min: f64,
    r_max: f64,
    points: usize,
    states: usize,
) -> Vec<f64> {
    let n = points;
    let h = (r_max - r_min) / n as f64;
    let s = pot.zeta_eff_sq.sqrt();
    let p = 2.0 * s + 1.0;
    let face = |i: usize| r_min + i as f64 * h; // faces 0..=n
    let center = |i: usize| r_min + (i as f64 - 0.5) * h; // cells 1..=n
    let weight = |r: f64| r.powf(p);
    // Cell mass: ∫ r^{2s+1} dr over the cell, divided by h.
    let mass = |i: usize| {
        (weight(face(i)) * face(i) - weight(face(i - 1)) * face(i - 1)) / ((p + 1.0) * h)
    };

    let mut diag = Vec::with_capacity(n - 1);
    let mut off = Vec::with_capacity(n.saturating_sub(2));
    for i in 1..n {
        let m_i = mass(i);
        diag.push(
            (weight(face(i - 1)) + weight(face(i))) / (m_i * h * h)
                + pot.smooth_potential(center(i)),
        );
        if i < n - 1 {
            off.push(-weight(face(i)) / (h * h * (m_i * mass(i + 1)).sqrt()));
        }
    }
    tridiag::lowest_eigenvalues(&diag, &off, states)
}

/// Eigen-solve the frozen-coefficient radial problem: lowest
/// `config.states_requested` states, one Richardson refinement on a doubled
/// grid, energies on the requested branch sign.
pub fn radial_eigensolve(
    spec: &ScenarioSpec,
    e_guess: f64,
    branch: f64,
    config: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    let pot = effective_potential(spec, e_guess)?;
    solve_with_potential(spec, &pot, branch, config)
}

fn solve_with_potential(
    spec: &ScenarioSpec,
    pot: &EffectivePotential,
    branch: f64,
    config: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    if config.grid_points < 200 {
        return Err(OracleError::GridTooCoarse(config.grid_points));
    }
    let e_guess = if pot.coul_coeff != 0.0 && spec.qn.lambda != 0.0 {
        pot.coul_coeff / (2.0 * spec.qn.lambda)
    } else {
        0.0
    };
    let r_max = config
        .r_max
        .unwrap_or_else(|| default_r_max(spec, e_guess, config.states_requested));
    if !(config.r_min >= 0.0 && config.r_min < r_max) {
        return Err(OracleError::BadDomain {
            r_min: config.r_min,
            r_max,
        });
    }
    let states = config.states_requested;
    if states >= config.grid_points / 4 {
        return Err(OracleError::StatesUnavailable {
            requested: states,
            available: config.grid_points / 4,
        });
    }

    let coarse = solve_w_single_grid(pot, config.r_min, r_max, config.grid_points, states);
    let fine = solve_w_single_grid(pot, config.r_min, r_max, config.grid_points * 2, states);

    let mut energies = Vec::with_capacity(states);
    let mut estimates = Vec::with_capacity(states);
    for i in 0..states {
        // Second-order scheme: Richardson extrapolation W* = W_h/2 + (W_h/2 − W_h)/3.
        let w = fine[i] + (fine[i] - coarse[i]) / 3.0;
        let w_err = ((fine[i] - coarse[i]) / 3.0).abs();
        let e = pot.e_from_w(w, branch)?;
        // dE = dW / (2|E|), guarding the E → 0 corner.
        let e_err = w_err / (2.0 * e.abs().max(1e-8));
        energies.push(e);
        estimates.push(e_err);
    }
    Ok(OracleResult {
        eigenvalues: energies,
        grid_convergence: estimates,
        iterations: 1,
    })
}

/// Fixed-point solve of the energy-dependent Coulomb problem for one state
/// index: freeze E in the potential, solve, relax, repeat. The bound branch
/// for the pure Coulomb scenario is sign(E) = −sign(λ) (the 2λE/r tail must
/// be attractive); the oscillator+Coulomb scenario is solved on the
/// requested branch since the oscillator confines either way.
pub fn nonlinear_eigensolve(
    spec: &ScenarioSpec,
    level_index: usize,
    branch: f64,
    config: &OracleConfig,
) -> Result<OracleResult, OracleError> {
    let mut config = *config;
    config.states_requested = config.states_requested.max(level_index + 1);

    if spec.qn.lambda == 0.0 {
        // Single outer iteration: identical to the linear solve.
        let res = radial_eigensolve(spec, 0.0, branch, &config)?;
        return Ok(OracleResult {
            eigenvalues: res.eigenvalues,
            grid_convergence: res.grid_convergence,
            iterations: 1,
        });
    }

    let thr = spec.threshold();
    let mut e = match spec.kind {
        ScenarioKind::OscillatorCoulomb => {
            // Seed from the λ = 0 problem on the requested branch.
            let mut seed_spec = *spec;
            seed_spec.qn.lambda = 0.0;
            let seed = radial_eigensolve(&seed_spec, 0.0, branch, &config)?;
            seed.eigenvalues[level_index]
        }
        _ => branch.signum() * thr * 0.95,
    };

    let mut damping = config.damping;
    let mut retried = false;
    let mut deltas: Vec<f64> = Vec::new();
    let mut iterations = 0usize;

    while iterations < config.max_fixed_point_iters {
        iterations += 1;
        let mut result = radial_eigensolve(spec, e, branch, &config)?;
        let e_new = result.eigenvalues[level_index];
        let delta = e_new - e;
        e += damping * delta;
        deltas.push(delta);
        if delta.abs() <= config.fixed_point_tol {
            result.iterations = iterations;
            result.eigenvalues[level_index] = e;
            return Ok(result);
        }
        // Oscillation guard: three consecutive alternations with no decay.
        let k = deltas.len();
        if !retried
            && k >= 3
            && deltas[k - 1].signum() != deltas[k - 2].signum()
            && deltas[k - 2].signum() != deltas[k - 3].signum()
            && deltas[k - 1].abs() > 0.9 * deltas[k - 3].abs()
        {
            damping *= 0.5;
            retried = true;
        }
    }
    Err(OracleError::FixedPointDiverged {
        iterations,
        last_delta: deltas.last().copied().unwrap_or(f64::NAN),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spacetime::{QuantumNumbers, SpacetimeParams};
    use crate::spectra::{coulomb_energy, kgo_energy};
    use crate::EvalMode;

    fn spec(
        kind: ScenarioKind,
        alpha: f64,
        chi: f64,
        j: i64,
        k: f64,
        omega: f64,
        lambda: f64,
    ) -> ScenarioSpec {
        ScenarioSpec::new(
            kind,
            EvalMode::Rederived,
            SpacetimeParams::new(alpha, chi).unwrap(),
            QuantumNumbers::new(j, k, 0, 1.0, omega, lambda, 1.0).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn effective_potential_reference_points() {
        // Free, ζ = 1: V_eff(r) = (1 − 1/4)/r².
        let free = spec(ScenarioKind::Free, 1.0, 0.0, 1, 0.0, 0.0, 0.0);
        let pot = effective_potential(&free, 0.0).unwrap();
        assert!((pot.eval(1.0) - 0.75).abs() < 1e-15);
        // Oscillator adds m²ω²r²: at m=ω=1, r=2 the term is +4.
        let osc = spec(ScenarioKind::Oscillator, 1.0, 0.0, 1, 0.0, 1.0, 0.0);
        let pot_osc = effective_potential(&osc, 0.0).unwrap();
        assert!((pot_osc.eval(2.0) - (0.75 / 4.0 + 4.0)).abs() < 1e-12);
        // Coulomb λ=1 at frozen E=0.8 adds 1.6/r.
        let coul = spec(ScenarioKind::Coulomb, 1.0, 0.0, 1, 0.0, 0.0, 1.0);
        let pot_c = effective_potential(&coul, 0.8).unwrap();
        assert!((pot_c.coul_coeff - 1.6).abs() < 1e-15);
        let base = effective_potential(&coul, 0.0).unwrap();
        for &r in &[0.5, 1.0, 3.0] {
            assert!((pot_c.eval(r) - base.eval(r) - 1.6 / r).abs() < 1e-12);
        }
    }

    #[test]
    fn effective_potential_overcritical() {
        let s = spec(ScenarioKind::Coulomb, 1.0, 0.0, 1, 0.0, 0.0, 2.0);
        assert!(effective_potential(&s, 0.5).is_err());
    }

    #[test]
    fn flat_oscillator_ladder() {
        // α=1, χ=0, K=0, m=ω=1, j=0: E ∈ {1, √5, 3, √13}.
        let s = spec(ScenarioKind::Oscillator, 1.0, 0.0, 0, 0.0, 1.0, 0.0);
        let config = OracleConfig {
            states_requested: 4,
            ..Default::default()
        };
        let result = radial_eigensolve(&s, 0.0, 1.0, &config).unwrap();
        let exact = [1.0, 5.0f64.sqrt(), 3.0, 13.0f64.sqrt()];
        for (i, &e) in exact.iter().enumerate() {
            let rel = (result.eigenvalues[i] - e).abs() / e;
            assert!(
                rel < 1e-6,
                "state {i}: {} vs {e} (rel {rel})",
                result.eigenvalues[i]
            );
        }
    }

    #[test]
    fn oscillator_j_sign_symmetry() {
        let plus = spec(ScenarioKind::Oscillator, 0.7, 0.0, 2, 0.0, 1.0, 0.0);
        let minus = spec(ScenarioKind::Oscillator, 0.7, 0.0, -2, 0.0, 1.0, 0.0);
        let config = OracleConfig {
            states_requested: 2,
            grid_points: 2000,
            ..Default::default()
        };
        let ep = radial_eigensolve(&plus, 0.0, 1.0, &config).unwrap();
        let em = radial_eigensolve(&minus, 0.0, 1.0, &config).unwrap();
        for i in 0..2 {
            assert!((ep.eigenvalues[i] - em.eigenvalues[i]).abs() < 1e-12);
        }
    }

    #[test]
    fn second_order_richardson_ratio() {
        // Doubling the grid shrinks the raw eigenvalue error ~4×.
        let s = spec(ScenarioKind::Oscillator, 0.8, 0.25, 1, 0.5, 1.0, 0.0);
        let (exact, _) = kgo_energy(&s, 0).unwrap();
        let pot = effective_potential(&s, 0.0).unwrap();
        let r_max = default_r_max(&s, 0.0, 2);
        let err = |n: usize| {
            let w = solve_w_single_grid(&pot, 0.0, r_max, n, 1)[0];
            (pot.e_from_w(w, 1.0).unwrap() - exact).abs()
        };
        let ratio1 = err(1000) / err(2000);
        let ratio2 = err(2000) / err(4000);
        assert!(ratio1 > 3.5 && ratio1 < 4.5, "ratio1 = {ratio1}");
        assert!(ratio2 > 3.5 && ratio2 < 4.5, "ratio2 = {ratio2}");
    }

    #[test]
    fn r_max_tail_insensitivity() {
        let s = spec(ScenarioKind::Oscillator, 1.0, 0.0, 1, 0.0, 1.0, 0.0);
        let base = OracleConfig {
            states_requested: 2,
            ..Default::default()
        };
        let wider = OracleConfig {
            r_max: Some(default_r_max(&s, 0.0, 2) * 1.5),
            ..base
        };
        let a = radial_eigensolve(&s, 0.0, 1.0, &base).unwrap();
        let b = radial_eigensolve(&s, 0.0, 1.0, &wider).unwrap();
        for i in 0..2 {
            assert!(
                (a.eigenvalues[i] - b.eigenvalues[i]).abs() < 1e-10,
                "state {i}: {} vs {}",
                a.eigenvalues[i],
                b.eigenvalues[i]
            );
        }
    }

    #[test]
    fn nonlinear_coulomb_reference() {
        // m=1, K=0, λ=1, ζ=√2, n=0: |E| = 0.83205…, bound branch E < 0.
        let alpha = 1.0 / std::f64::consts::SQRT_2;
        let s = spec(ScenarioKind::Coulomb, alpha, 0.0, 1, 0.0, 0.0, 1.0);
        let result = nonlinear_eigensolve(&s, 0, -1.0, &OracleConfig::default()).unwrap();
        let e = result.eigenvalues[0];
        assert!(
            (e + 0.8320502943378437).abs() < 1e-4,
            "oracle E = {e} vs closed form -0.8320502943378437"
        );
        assert!(
            result.iterations <= 30,
            "iterations = {}",
            result.iterations
        );
    }

    #[test]
    fn nonlinear_agrees_with_closed_form_second_level() {
        let s = spec(ScenarioKind::Coulomb, 1.0, 0.0, 1, 0.0, 0.0, 0.3);
        let closed = coulomb_energy(&s, 1).unwrap();
        let result =
            nonlinear_eigensolve(&s, 1, closed.bound_branch, &OracleConfig::default()).unwrap();
        assert!(
            (result.eigenvalues[1] - closed.e_bound).abs() < 1e-4,
            "oracle {} vs closed {}",
            result.eigenvalues[1],
            closed.e_bound
        );
    }

    #[test]
    fn nonlinear_lambda_zero_is_single_iteration() {
        let s = spec(ScenarioKind::Coulomb, 1.0, 0.0, 1, 0.0, 0.0, 1.0);
        let mut unconstrained = s;
        unconstrained.qn.lambda = 0.0;
        let result = nonlinear_eigensolve(&unconstrained, 0, 1.0, &OracleConfig::default());
        // λ = 0 pure Coulomb has no bound state below threshold on a finite
        // box it returns the box continuum; the single-iteration contract is
        // what is checked here.
        if let Ok(r) = result {
            assert_eq!(r.iterations, 1);
        }
    }

    #[test]
    fn self_consistency_of_fixed_point() {
        let s = spec(ScenarioKind::Coulomb, 1.0, 0.0, 1, 0.0, 0.0, 0.3);
        let config = OracleConfig::default();
        let result = nonlinear_eigensolve(&s, 0, -1.0, &config).unwrap();
        let e_star = result.eigenvalues[0];
        let re = radial_eigensolve(&s, e_star, -1.0, &config).unwrap();
        assert!(
            (re.eigenvalues[0] - e_star).abs() <= 10.0 * config.fixed_point_tol,
            "{} vs {}",
            re.eigenvalues[0],
            e_star
        );
    }

    #[test]
    fn config_validation() {
        let s = spec(ScenarioKind::Oscillator, 1.0, 0.0, 0, 0.0, 1.0, 0.0);
        let coarse = OracleConfig {
            grid_points: 100,
            ..Default::default()
        };
        assert!(matches!(
            radial_eigensolve(&s, 0.0, 1.0, &coarse),
            Err(OracleError::GridTooCoarse(100))
        ));
        let bad = OracleConfig {
            r_min: 50.0,
            r_max: Some(10.0),
            ..Default::default()
        };
        assert!(matches!(
            radial_eigensolve(&s, 0.0, 1.0, &bad),
            Err(OracleError::BadDomain { .. })
        ));
        let greedy = OracleConfig {
            grid_points: 400,
            states_requested: 150,
            ..Default::default()
        };
        assert!(matches!(
            radial_eigensolve(&s, 0.0, 1.0, &greedy),
            Err(OracleError::StatesUnavailable { .. })
        ));
    }

    #[test]
    fn eigenvalues_strictly_increasing() {
        let s = spec(ScenarioKind::Oscillator, 0.7, 0.25, 1, 0.5, 1.3, 0.0);
        let config = OracleConfig {
            states_requested: 5,
            grid_points: 2000,
            ..Default::default()
        };
        let result = radial_eigensolve(&s, 0.0, 1.0, &config).unwrap();
        for w in result.eigenvalues.windows(2) {
            assert!(w[1] > w[0], "not increasing: {:?}", result.eigenvalues);
        }
        assert_eq!(result.grid_convergence.len(), result.eigenvalues.len());
    }
}
