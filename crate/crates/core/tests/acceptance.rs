//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with the measured residual against its pinned tolerance.
//!
//! Run with `cargo test --test acceptance -- --nocapture` to see the lines.

use std::sync::OnceLock;
use std::time::Instant;

use fvo_core::oracle::{nonlinear_eigensolve, radial_eigensolve, OracleConfig};
use fvo_core::spacetime::{QuantumNumbers, SpacetimeParams};
use fvo_core::spectra::{kgo_energy, ScenarioKind, ScenarioSpec};
use fvo_core::verify::{render_report, run_suite, Check, Suite};
use fvo_core::EvalMode;

fn all_checks() -> &'static Vec<Check> {
    static CHECKS: OnceLock<Vec<Check>> = OnceLock::new();
    CHECKS.get_or_init(|| run_suite(Suite::All))
}

fn find(name: &str) -> &'static Check {
    all_checks()
        .iter()
        .find(|c| c.name == name)
        .unwrap_or_else(|| panic!("check `{name}` missing from the verification suites"))
}

fn report(criterion: &str, checks: &[&Check]) {
    for c in checks {
        println!(
            "{criterion}: {} — {} residual {:.3e} (tolerance {:.1e})",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.residual,
            c.tolerance
        );
        assert!(
            c.passed,
            "{criterion} failed on {}: residual {} vs tolerance {} ({})",
            c.name, c.residual, c.tolerance, c.detail
        );
    }
}

#[test]
fn criterion_01_flat_limit_oscillator() {
    // Independent timed run of the flat grid: alpha=1, chi=0, K=0, m=omega=1,
    // n <= 3, |j| <= 2, relative error <= 1e-6, runtime <= 30 s.
    let start = Instant::now();
    let mut worst = 0.0f64;
    for j in -2i64..=2 {
        let spec = ScenarioSpec::new(
            ScenarioKind::Oscillator,
            EvalMode::Rederived,
            SpacetimeParams::new(1.0, 0.0).unwrap(),
            QuantumNumbers::new(j, 0.0, 0, 1.0, 1.0, 0.0, 1.0).unwrap(),
        )
        .unwrap();
        let config = OracleConfig {
            states_requested: 4,
            ..Default::default()
        };
        let oracle = radial_eigensolve(&spec, 0.0, 1.0, &config).unwrap();
        for n in 0..4u32 {
            let (exact, _) = kgo_energy(&spec, n).unwrap();
            worst = worst.max((oracle.eigenvalues[n as usize] - exact).abs() / exact);
        }
    }
    let elapsed = start.elapsed().as_secs_f64();
    let pass = worst <= 1e-6 && elapsed <= 30.0;
    println!(
        "criterion 01 (flat-limit oscillator): {} — worst relative error {worst:.3e} \
         (tolerance 1e-6), runtime {elapsed:.1} s (limit 30 s)",
        if pass { "PASS" } else { "FAIL" }
    );
    assert!(worst <= 1e-6, "relative error {worst}");
    assert!(elapsed <= 30.0, "runtime {elapsed} s exceeded 30 s");
}

#[test]
fn criterion_02_dislocation_oscillator() {
    report(
        "criterion 02 (dislocation oscillator)",
        &[find("dislocation_oscillator_vs_closed_form")],
    );
}

#[test]
fn criterion_03_coulomb_rederived_vs_oracle() {
    let check = find("coulomb_vs_nonlinear_oracle");
    // The as-printed deviation is reported in the detail, no pass/fail attached.
    println!("criterion 03 note: {}", check.detail);
    report("criterion 03 (Coulomb vs nonlinear oracle)", &[check]);
}

#[test]
fn criterion_04_heun_truncation_theorem() {
    report(
        "criterion 04 (Heun truncation theorem)",
        &[find("heun_truncation_theorem")],
    );
}

#[test]
fn criterion_05_omega_quantization() {
    report(
        "criterion 05 (omega quantization)",
        &[
            find("omega_quantization_root"),
            find("omega_quantization_oracle_agreement"),
        ],
    );
}

#[test]
fn criterion_06_lambda_zero_reduction() {
    report(
        "criterion 06 (lambda=0 reduction)",
        &[find("lambda_zero_reduction")],
    );
}

#[test]
fn criterion_07_special_functions() {
    report(
        "criterion 07 (special functions)",
        &[
            find("kummer_exponential_identity"),
            find("kummer_transformation"),
            find("bessel_j0_first_zero"),
        ],
    );
}

#[test]
fn criterion_08_geometry() {
    report(
        "criterion 08 (geometry)",
        &[
            find("inverse_identity"),
            find("determinant_closed_vs_lu"),
            find("ricci_scalar_flatness"),
        ],
    );
}

#[test]
fn criterion_09_fv_structure() {
    report(
        "criterion 09 (FV structure)",
        &[
            find("fv_symbol_dispersion"),
            find("fv_pseudo_hermiticity"),
            find("fv_charge_density_identity"),
        ],
    );
}

#[test]
fn criterion_10_ode_residuals() {
    report(
        "criterion 10 (ODE residuals)",
        &[
            find("ode_residual_free"),
            find("ode_residual_oscillator"),
            find("ode_residual_coulomb"),
            find("ode_residual_oscillator_coulomb"),
        ],
    );
}

#[test]
fn criterion_11_reproducibility() {
    let start = Instant::now();
    let first = render_report(&run_suite(Suite::All));
    let first_elapsed = start.elapsed().as_secs_f64();
    let start = Instant::now();
    let second = render_report(&run_suite(Suite::All));
    let second_elapsed = start.elapsed().as_secs_f64();
    let identical = first == second;
    let in_time = first_elapsed <= 300.0 && second_elapsed <= 300.0;
    println!(
        "criterion 11 (reproducibility): {} — bytewise identical: {identical}, runtimes \
         {first_elapsed:.1} s / {second_elapsed:.1} s (limit 300 s)",
        if identical && in_time { "PASS" } else { "FAIL" }
    );
    assert!(identical, "verification report differs between runs");
    assert!(in_time, "suite runtime exceeded 5 minutes");
}

#[test]
fn oscillator_coulomb_oracle_cross_check() {
    // Extra guard beyond the named criteria: the nonlinear oracle agrees
    // with the quantized oscillator+Coulomb level away from the closed pair
    // used in criterion 5 (lambda = 0.3, n = 1).
    let spec = ScenarioSpec::new(
        ScenarioKind::OscillatorCoulomb,
        EvalMode::Rederived,
        SpacetimeParams::new(0.8, 0.0).unwrap(),
        QuantumNumbers::new(1, 0.0, 0, 1.0, 1.0, 0.3, 1.0).unwrap(),
    )
    .unwrap();
    let quant = fvo_core::spectra::fvo_coulomb_quantization(&spec, 1, None).unwrap();
    assert!(
        !quant.levels.is_empty(),
        "no allowed omega found: {:?}",
        quant.diagnostics
    );
    let level = &quant.levels[0];
    let mut at_root = spec;
    at_root.qn.omega = level.omega;
    let oracle = nonlinear_eigensolve(&at_root, 0, 1.0, &OracleConfig::default()).unwrap();
    let err = (oracle.eigenvalues[0] - level.e_plus).abs();
    println!(
        "oscillator+Coulomb cross-check: oracle {} vs closed {} (abs err {err:.3e})",
        oracle.eigenvalues[0], level.e_plus
    );
    assert!(err <= 1e-4, "oracle disagrees: {err}");
}
