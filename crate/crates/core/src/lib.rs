//! Spectra and radial wavefunctions of a spin-0 Feshbach–Villars oscillator
//! in a cosmic-dislocation background, with and without a Coulomb-type
//! coupling, cross-validated against an independent finite-difference
//! eigenvalue oracle.
//!
//! Module map:
//!
//! - [`spacetime`] — dislocation metric, its algebraic invariants, the
//!   generalized FV operator coefficients and the derived quantum invariants.
//! - [`specfun`] — self-contained special functions: gamma, Kummer ₁F₁,
//!   Bessel J, Whittaker M, and the biconfluent Heun series via its
//!   Frobenius recurrence.
//! - [`fv`] — the two-component Feshbach–Villars structure: Hamiltonian
//!   symbol, pseudo-hermiticity and component assembly.
//! - [`spectra`] — closed-form spectra and wavefunctions for the four
//!   scenarios (free, oscillator, Coulomb, oscillator+Coulomb).
//! - [`oracle`] — analytic-formula-blind finite-difference radial
//!   eigensolver, including the nonlinear (energy-dependent) Coulomb case.
//! - [`verify`] — deterministic verification suites used by the CLI and the
//!   acceptance tests.

pub mod fv;
pub mod numeric;
pub mod oracle;
pub mod spacetime;
pub mod specfun;
pub mod spectra;
pub mod verify;

use serde::{Deserialize, Serialize};

/// Evaluation mode for formulas that circulate in two algebraic forms: the
/// rederived (internally consistent) form and the form as commonly printed.
/// The rederived form is the one cross-checked against the numerical oracle;
/// as-printed values are reported for comparison only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, Default)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    #[default]
    Rederived,
    AsPrinted,
}

impl EvalMode {
    pub fn as_str(self) -> &'static str {
        match self {
            EvalMode::Rederived => "rederived",
            EvalMode::AsPrinted => "as_printed",
        }
    }
}

impl std::str::FromStr for EvalMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "rederived" => Ok(EvalMode::Rederived),
            "as_printed" | "as-printed" => Ok(EvalMode::AsPrinted),
            other => Err(format!(
                "unknown mode `{other}` (expected `rederived` or `as_printed`)"
            )),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::EvalMode;

    #[test]
    fn eval_mode_parsing() {
        assert_eq!(
            "rederived".parse::<EvalMode>().unwrap(),
            EvalMode::Rederived
        );
        assert_eq!(
            "as_printed".parse::<EvalMode>().unwrap(),
            EvalMode::AsPrinted
        );
        assert_eq!(
            "as-printed".parse::<EvalMode>().unwrap(),
            EvalMode::AsPrinted
        );
        assert!("other".parse::<EvalMode>().is_err());
        assert_eq!(EvalMode::default(), EvalMode::Rederived);
        assert_eq!(EvalMode::Rederived.as_str(), "rederived");
    }
}
