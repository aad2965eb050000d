//! Self-contained special functions: everything the closed-form solutions
//! live in. Gamma (Lanczos), Kummer ₁F₁, Bessel J, Whittaker M, and the
//! biconfluent Heun function through its Frobenius recurrence.
//!
//! All evaluators are pure and deterministic; series carry an accuracy
//! request/report so callers can see how a value was reached.

mod bessel;
mod gamma;
mod heun;
mod kummer;

pub use bessel::bessel_j;
pub use gamma::{gamma, ln_gamma};
pub use heun::{frobenius_coefficients, heunb_eval, FrobeniusSeries};
pub use kummer::{hyp1f1, whittaker_m};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum SpecFunError {
    #[error("series pole: second parameter b = {b} is a nonpositive integer and a = {a} does not terminate first")]
    Pole { a: f64, b: f64 },
    #[error("series did not converge within {terms} terms")]
    NotConverged { terms: usize },
    #[error("domain error: {0}")]
    Domain(&'static str),
}

/// Accuracy request and report for a series evaluation.
///
/// `tol` and `max_terms` are inputs; `terms_used`, `converged` and
/// `abs_error_estimate` are filled by the evaluator. Termination requires
/// three consecutive terms below tolerance, guarding against a premature
/// stop at an accidental zero term.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesAccuracy {
    pub tol: f64,
    pub max_terms: usize,
    pub terms_used: usize,
    pub converged: bool,
    /// Truncation estimate for asymptotic branches (None for plain series).
    pub abs_error_estimate: Option<f64>,
}

impl SeriesAccuracy {
    pub fn new(tol: f64, max_terms: usize) -> Self {
        assert!(tol > 0.0, "tolerance must be positive");
        Self {
            tol,
            max_terms,
            terms_used: 0,
            converged: false,
            abs_error_estimate: None,
        }
    }
}

impl Default for SeriesAccuracy {
    fn default() -> Self {
        Self::new(1e-15, 10_000)
    }
}

/// True if x is an integer ≤ 0 within floating-point exactness.
pub(crate) fn is_nonpositive_integer(x: f64) -> bool {
    x <= 0.0 && x == x.floor() && x.is_finite()
}
