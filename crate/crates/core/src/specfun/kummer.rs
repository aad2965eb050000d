//! Kummer's confluent hypergeometric function ₁F₁(a; b; x) and the Whittaker
//! function M_{κ,μ}(z) built on it.

use super::{is_nonpositive_integer, SeriesAccuracy, SpecFunError};

/// Confluent hypergeometric ₁F₁(a; b; x) = Σ_k (a)_k/(b)_k · x^k/k!.
///
/// Polynomial cases (a a nonpositive integer) terminate exactly. b must not
/// be a nonpositive integer unless a is one of smaller or equal magnitude.
/// Negative arguments are routed through the Kummer transformation
/// ₁F₁(a;b;x) = eˣ·₁F₁(b−a;b;−x), which keeps every term positive for the
/// parameter ranges used here.
pub fn hyp1f1(a: f64, b: f64, x: f64, acc: &mut SeriesAccuracy) -> Result<f64, SpecFunError> {
    if !a.is_finite() || !b.is_finite() || !x.is_finite() {
        return Err(SpecFunError::Domain("non-finite argument to hyp1f1"));
    }
    if is_nonpositive_integer(b) && !(is_nonpositive_integer(a) && a >= b) {
        return Err(SpecFunError::Pole { a, b });
    }
    if is_nonpositive_integer(a) {
        return Ok(polynomial(a, b, x, acc));
    }
    if x < 0.0 {
        // Stabilized path: alternating series replaced by a positive one.
        let value = x.exp() * series(b - a, b, -x, acc)?;
        return Ok(value);
    }
    series(a, b, x, acc)
}

/// Exact finite sum for a ∈ {0, −1, −2, …}: degree −a polynomial.
fn polynomial(a: f64, b: f64, x: f64, acc: &mut SeriesAccuracy) -> f64 {
    let degree = (-a) as usize;
    let mut sum = 1.0;
    let mut term = 1.0;
    for k in 1..=degree {
        let kf = k as f64;
        term *= (a + kf - 1.0) / ((b + kf - 1.0) * kf) * x;
        sum += term;
    }
    acc.terms_used = degree + 1;
    acc.converged = true;
    acc.abs_error_estimate = None;
    sum
}

fn series(a: f64, b: f64, x: f64, acc: &mut SeriesAccuracy) -> Result<f64, SpecFunError> {
    let mut sum = 1.0f64;
    let mut term = 1.0f64;
    let mut small_streak = 0;
    for k in 1..=acc.max_terms {
        let kf = k as f64;
        term *= (a + kf - 1.0) / ((b + kf - 1.0) * kf) * x;
        sum += term;
        if term.abs() <= acc.tol * sum.abs() {
            small_streak += 1;
            if small_streak >= 3 {
                acc.terms_used = k + 1;
                acc.converged = true;
                acc.abs_error_estimate = None;
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
    }
    acc.terms_used = acc.max_terms;
    acc.converged = false;
    Err(SpecFunError::NotConverged {
        terms: acc.max_terms,
    })
}

/// Whittaker M_{κ,μ}(z) = e^{−z/2} z^{μ+1/2} ₁F₁(μ−κ+1/2, 1+2μ, z) for z > 0.
/// 1+2μ at a nonpositive integer is a pole of M even when the ₁F₁ factor
/// happens to terminate.
pub fn whittaker_m(
    kw: f64,
    mu: f64,
    z: f64,
    acc: &mut SeriesAccuracy,
) -> Result<f64, SpecFunError> {
    if !(z > 0.0) {
        return Err(SpecFunError::Domain("whittaker_m requires z > 0"));
    }
    let b = 1.0 + 2.0 * mu;
    if is_nonpositive_integer(b) {
        return Err(SpecFunError::Pole {
            a: mu - kw + 0.5,
            b,
        });
    }
    let f = hyp1f1(mu - kw + 0.5, b, z, acc)?;
    Ok((-0.5 * z).exp() * z.powf(mu + 0.5) * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::SplitMix64;

    fn eval(a: f64, b: f64, x: f64) -> f64 {
        hyp1f1(a, b, x, &mut SeriesAccuracy::default()).unwrap()
    }

    /// Raw Kummer series with no transformation: the independent route used
    /// to validate the stabilized negative-argument path.
    fn raw_series(a: f64, b: f64, x: f64) -> f64 {
        let mut sum = 1.0f64;
        let mut term = 1.0f64;
        for k in 1..2000 {
            let kf = k as f64;
            term *= (a + kf - 1.0) / ((b + kf - 1.0) * kf) * x;
            sum += term;
            if term.abs() < 1e-17 * sum.abs() {
                break;
            }
        }
        sum
    }

    #[test]
    fn trivial_values() {
        assert_eq!(eval(-0.3, 2.5, 0.0), 1.0);
        assert!((eval(1.0, 1.0, 1.0) - std::f64::consts::E).abs() < 1e-14);
        assert!((eval(-1.0, 3.0, 2.0) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn exponential_identity_on_range() {
        let mut x = 0.0f64;
        while x <= 10.0 {
            let v = eval(1.0, 1.0, x);
            assert!(
                ((v - x.exp()) / x.exp()).abs() < 1e-12,
                "1F1(1,1,{x}) = {v} vs e^x = {}",
                x.exp()
            );
            x += 0.25;
        }
    }

    #[test]
    fn polynomial_cases_terminate() {
        // 1F1(-2, 1, x) = 1 - 2x + x²/2
        let x = 0.7;
        assert!((eval(-2.0, 1.0, x) - (1.0 - 2.0 * x + 0.5 * x * x)).abs() < 1e-15);
        // Polynomial with nonpositive integer b of larger magnitude is fine.
        let mut acc = SeriesAccuracy::default();
        let v = hyp1f1(-2.0, -5.0, 1.0, &mut acc).unwrap();
        assert!(v.is_finite());
        assert_eq!(acc.terms_used, 3);
    }

    #[test]
    fn non_convergence_with_tiny_budget() {
        let mut acc = SeriesAccuracy::new(1e-15, 5);
        assert!(matches!(
            hyp1f1(0.7, 1.3, 9.0, &mut acc),
            Err(SpecFunError::NotConverged { terms: 5 })
        ));
    }

    #[test]
    fn pole_rejected() {
        assert!(matches!(
            hyp1f1(0.5, 0.0, 1.0, &mut SeriesAccuracy::default()),
            Err(SpecFunError::Pole { .. })
        ));
        assert!(matches!(
            hyp1f1(-6.0, -5.0, 1.0, &mut SeriesAccuracy::default()),
            Err(SpecFunError::Pole { .. })
        ));
    }

    #[test]
    fn kummer_transformation_holds() {
        let mut rng = SplitMix64::new(0x1f1);
        for _ in 0..100 {
            let a = rng.range(0.5, 5.0);
            let b = rng.range(0.5, 5.0);
            let x = rng.range(0.0, 10.0);
            let lhs = eval(a, b, x);
            let rhs = x.exp() * eval(b - a, b, -x);
            assert!(
                ((lhs - rhs) / lhs).abs() < 1e-10,
                "Kummer identity fails at a={a} b={b} x={x}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn negative_argument_path_matches_raw_series() {
        // Independent check of the stabilized x < 0 route against the direct
        // alternating series at moderate |x| where the latter is accurate.
        let mut rng = SplitMix64::new(0xaaab);
        for _ in 0..50 {
            let a = rng.range(0.5, 4.0);
            let b = rng.range(0.6, 5.0);
            let x = -rng.range(0.0, 4.0);
            let stabilized = eval(a, b, x);
            let raw = raw_series(a, b, x);
            assert!(
                (stabilized - raw).abs() < 1e-11 * raw.abs().max(1.0),
                "a={a} b={b} x={x}: {stabilized} vs {raw}"
            );
        }
    }

    #[test]
    fn whittaker_closed_value() {
        // M_{0,1/2}(2) = 2 sinh(1)
        let mut acc = SeriesAccuracy::default();
        let v = whittaker_m(0.0, 0.5, 2.0, &mut acc).unwrap();
        assert!((v - 2.0 * 1.0f64.sinh()).abs() < 1e-13);
        assert!((v - 2.3504023872876028).abs() < 1e-12);
    }

    #[test]
    fn whittaker_small_z_prefactor() {
        // M_{κ,1/2}(z) ~ z as z → 0⁺
        for &kw in &[-0.7, 0.0, 1.3] {
            let v = whittaker_m(kw, 0.5, 1e-8, &mut SeriesAccuracy::default()).unwrap();
            assert!((v / 1e-8 - 1.0).abs() < 1e-6, "kw={kw}: {v}");
        }
    }

    #[test]
    fn whittaker_is_the_definitional_composition() {
        let mut rng = SplitMix64::new(0x3333);
        for _ in 0..100 {
            let kw = rng.range(-2.0, 2.0);
            let mu = rng.range(0.1, 3.0);
            let z = rng.range(0.01, 15.0);
            let direct = whittaker_m(kw, mu, z, &mut SeriesAccuracy::default()).unwrap();
            let composed =
                (-0.5f64 * z).exp() * z.powf(mu + 0.5) * eval(mu - kw + 0.5, 1.0 + 2.0 * mu, z);
            assert!(
                (direct - composed).abs() <= 1e-13 * composed.abs().max(1e-300),
                "kw={kw} mu={mu} z={z}"
            );
        }
    }

    #[test]
    fn whittaker_domain() {
        assert!(whittaker_m(0.0, 0.5, 0.0, &mut SeriesAccuracy::default()).is_err());
        assert!(whittaker_m(0.0, -0.5, 1.0, &mut SeriesAccuracy::default()).is_err());
    }
}
