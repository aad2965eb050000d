//! Biconfluent Heun function through its Frobenius power series about the
//! origin.
//!
//! With ζ_H = 2|γ|+1 the series O(K) = Σ a_j K^j obeys
//!
//! ```text
//! a₀ = 1,   a₁ = δ/ζ_H,
//! a_{j+2} = [δ·a_{j+1} − (Θ − 2j)·a_j] / ((j+2)(j+1+ζ_H))
//! ```
//!
//! and solves O'' + (ζ_H/K − 2K)O' + (Θ − δ/K)O = 0. The series becomes a
//! polynomial of degree n exactly when Θ = 2n and a_{n+1} = 0; all later
//! coefficients then vanish by induction.

use serde::Serialize;

use super::{SeriesAccuracy, SpecFunError};

/// Frobenius coefficients with truncation metadata.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct FrobeniusSeries {
    /// a₀ … a_{n_max}.
    pub coeffs: Vec<f64>,
    /// ζ_H = 2|γ| + 1.
    pub zeta_h: f64,
    pub theta: f64,
    pub delta: f64,
    /// Smallest n with Θ = 2n and a_{n+1} ≈ 0, when such n exists in range.
    pub truncated_at: Option<usize>,
    /// max |a_j| beyond the truncation index (0 when not truncated).
    pub tail_max: f64,
}

/// Generate a₀ … a_{n_max} from the recurrence. `n_max ≥ 2`.
pub fn frobenius_coefficients(
    gamma_abs: f64,
    theta: f64,
    delta: f64,
    n_max: usize,
) -> FrobeniusSeries {
    assert!(n_max >= 2, "n_max must be at least 2");
    assert!(gamma_abs >= 0.0, "gamma_abs must be nonnegative");
    let zeta_h = 2.0 * gamma_abs + 1.0;
    let mut coeffs = Vec::with_capacity(n_max + 1);
    coeffs.push(1.0);
    coeffs.push(delta / zeta_h);
    for j in 0..=n_max - 2 {
        let jf = j as f64;
        let denom = (jf + 2.0) * (jf + 1.0 + zeta_h);
        let next = (delta * coeffs[j + 1] - (theta - 2.0 * jf) * coeffs[j]) / denom;
        coeffs.push(next);
    }

    // Truncation detection: Θ an even nonnegative integer and the matching
    // a_{n+1} numerically zero relative to the head of the series.
    let mut truncated_at = None;
    let mut tail_max = 0.0f64;
    let half = theta / 2.0;
    let n_candidate = half.round();
    if (half - n_candidate).abs() <= 1e-9 * half.abs().max(1.0) && n_candidate >= 0.0 {
        let n = n_candidate as usize;
        if n + 1 < coeffs.len() {
            let head: f64 = coeffs[..=n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
            if coeffs[n + 1].abs() <= 1e-12 * head {
                truncated_at = Some(n);
                tail_max = coeffs[n + 1..].iter().fold(0.0f64, |m, a| m.max(a.abs()));
            }
        }
    }

    FrobeniusSeries {
        coeffs,
        zeta_h,
        theta,
        delta,
        truncated_at,
        tail_max,
    }
}

/// Evaluate the Heun series O(K) = Σ a_j K^j at kk ≥ 0, generating
/// coefficients on demand until the accuracy request is met. Polynomial
/// parameter sets terminate exactly.
pub fn heunb_eval(
    gamma_abs: f64,
    theta: f64,
    delta: f64,
    kk: f64,
    acc: &mut SeriesAccuracy,
) -> Result<f64, SpecFunError> {
    if !(kk >= 0.0) {
        return Err(SpecFunError::Domain("heunb_eval requires kk >= 0"));
    }
    let zeta_h = 2.0 * gamma_abs + 1.0;
    let mut a_prev = 1.0f64; // a_j
    let mut a_curr = delta / zeta_h; // a_{j+1}
    let mut sum = a_prev + a_curr * kk;
    let mut power = kk * kk; // kk^{j+2}
    let mut small_streak = 0;
    for j in 0..acc.max_terms {
        let jf = j as f64;
        let denom = (jf + 2.0) * (jf + 1.0 + zeta_h);
        let a_next = (delta * a_curr - (theta - 2.0 * jf) * a_prev) / denom;
        let term = a_next * power;
        sum += term;
        if term.abs() <= acc.tol * sum.abs().max(f64::MIN_POSITIVE) {
            small_streak += 1;
            if small_streak >= 3 {
                acc.terms_used = j + 3;
                acc.converged = true;
                return Ok(sum);
            }
        } else {
            small_streak = 0;
        }
        a_prev = a_curr;
        a_curr = a_next;
        power *= kk;
    }
    acc.terms_used = acc.max_terms;
    acc.converged = false;
    Err(SpecFunError::NotConverged {
        terms: acc.max_terms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::{bisect, deriv1, deriv2, residual_step, SplitMix64};

    #[test]
    fn leading_coefficients() {
        let s = frobenius_coefficients(1.0, 0.0, 2.0, 4);
        assert_eq!(s.coeffs[0], 1.0);
        assert!((s.zeta_h - 3.0).abs() < 1e-15);
        assert!((s.coeffs[1] - 2.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn hand_evaluated_a2() {
        // γ=1, δ=2, Θ=4: a₂ = δ·a₁/(2·(1+ζ_H)) − Θ/(2·(1+ζ_H)) = 1/6 − 1/2.
        let s = frobenius_coefficients(1.0, 4.0, 2.0, 4);
        assert!(
            (s.coeffs[2] - (-1.0 / 3.0)).abs() < 1e-15,
            "a2 = {}",
            s.coeffs[2]
        );
    }

    #[test]
    fn recurrence_rederivable() {
        // Every stored a_{j+2} equals the recurrence applied to (a_j, a_{j+1}).
        let mut rng = SplitMix64::new(0x8e);
        for _ in 0..20 {
            let g = rng.range(0.0, 3.0);
            let th = rng.range(-4.0, 8.0);
            let d = rng.range(-3.0, 3.0);
            let s = frobenius_coefficients(g, th, d, 30);
            for j in 0..=28 {
                let jf = j as f64;
                let denom = (jf + 2.0) * (jf + 1.0 + s.zeta_h);
                let expect = (d * s.coeffs[j + 1] - (th - 2.0 * jf) * s.coeffs[j]) / denom;
                assert!(
                    (s.coeffs[j + 2] - expect).abs() <= 1e-15 * expect.abs().max(1e-300),
                    "j={j}"
                );
            }
        }
    }

    #[test]
    fn truncation_for_tuned_delta() {
        // n = 1: a₂ = 0 at δ² = 2ζ_H; the whole tail must vanish.
        let g = 0.9797958971132712f64;
        let zeta_h = 2.0 * g + 1.0;
        let delta = (2.0 * zeta_h).sqrt();
        let s = frobenius_coefficients(g, 2.0, delta, 60);
        assert_eq!(s.truncated_at, Some(1));
        let head = s.coeffs[..=1].iter().fold(0.0f64, |m, a| m.max(a.abs()));
        assert!(s.tail_max <= 1e-12 * head, "tail_max = {}", s.tail_max);
    }

    #[test]
    fn truncation_via_root_finding() {
        // Tune δ to a root of a_{n+1} for several n and check the tail
        // theorem: beyond n all coefficients are numerically zero.
        let mut rng = SplitMix64::new(0x517);
        for _ in 0..25 {
            let g = rng.range(0.05, 3.0);
            let n = rng.range_usize(1, 5);
            let theta = 2.0 * n as f64;
            let coeff_n1 = |d: f64| frobenius_coefficients(g, theta, d, n + 1).coeffs[n + 1];
            // Scan for a bracket in δ > 0.
            let mut bracket = None;
            let mut prev = (1e-6, coeff_n1(1e-6));
            for i in 1..=400 {
                let d = 1e-6 + i as f64 * 0.05;
                let f = coeff_n1(d);
                if f.signum() != prev.1.signum() {
                    bracket = Some((prev.0, d));
                    break;
                }
                prev = (d, f);
            }
            let (lo, hi) = bracket.expect("no delta root found");
            let delta = bisect(coeff_n1, lo, hi, 1e-15).unwrap();
            let s = frobenius_coefficients(g, theta, delta, n + 51);
            let head: f64 = s.coeffs[..=n].iter().fold(0.0f64, |m, a| m.max(a.abs()));
            let tail: f64 = s.coeffs[n + 1..].iter().fold(0.0f64, |m, a| m.max(a.abs()));
            assert!(tail <= 1e-12 * head, "g={g} n={n}: tail {tail} head {head}");
        }
    }

    #[test]
    fn non_convergence_reported() {
        // Growing series with a starving term budget must error, not stall.
        let mut acc = SeriesAccuracy::new(1e-15, 8);
        let res = heunb_eval(0.5, 7.0, 1.5, 3.0, &mut acc);
        assert!(matches!(res, Err(SpecFunError::NotConverged { .. })));
        assert!(!acc.converged);
    }

    #[test]
    fn eval_at_origin_is_one() {
        for &(g, th, d) in &[(0.5, 2.0, 1.0), (2.0, -3.0, 0.3), (0.0, 0.0, 0.0)] {
            let v = heunb_eval(g, th, d, 0.0, &mut SeriesAccuracy::default()).unwrap();
            assert_eq!(v, 1.0);
        }
    }

    #[test]
    fn zero_parameters_give_constant() {
        // δ = 0 kills a₁; Θ = 0 then kills a₂ and with it the whole chain.
        for &kk in &[0.0, 0.4, 1.7, 3.0] {
            let v = heunb_eval(1.3, 0.0, 0.0, kk, &mut SeriesAccuracy::default()).unwrap();
            assert!((v - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn eval_matches_explicit_sum() {
        // γ=1, δ=2, Θ=4 at kk=0.5: 1 + (2/3)(0.5) − (1/3)(0.25) + ...
        let g = 1.0;
        let s = frobenius_coefficients(g, 4.0, 2.0, 60);
        let kk = 0.5f64;
        let explicit: f64 = s
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, a)| a * kk.powi(j as i32))
            .sum();
        let v = heunb_eval(g, 4.0, 2.0, kk, &mut SeriesAccuracy::default()).unwrap();
        assert!((v - explicit).abs() < 1e-13, "{v} vs {explicit}");
        let head = 1.0 + (2.0 / 3.0) * 0.5 - (1.0 / 3.0) * 0.25;
        assert!((v - head).abs() < 0.05); // remaining terms are small corrections
    }

    #[test]
    fn satisfies_heun_ode() {
        // O'' + (ζ_H/K − 2K)O' + (Θ − δ/K)O = 0 with series and bracket fed
        // from the same Θ. Generic (non-polynomial) parameter sets grow like
        // e^{K²}, so the residual is measured against the largest ODE term.
        let cases = [(0.7, 3.1, 1.2), (1.5, 2.0, -0.8), (0.2, 5.5, 2.3)];
        for &(g, theta, delta) in &cases {
            let zeta_h = 2.0 * g + 1.0;
            let f =
                |k: f64| heunb_eval(g, theta, delta, k, &mut SeriesAccuracy::default()).unwrap();
            let mut k = 0.1f64;
            while k <= 3.0 {
                let h = residual_step(k);
                let t1 = deriv2(f, k, h);
                let t2 = (zeta_h / k - 2.0 * k) * deriv1(f, k, h);
                let t3 = (theta - delta / k) * f(k);
                let res = t1 + t2 + t3;
                let scale = t1.abs().max(t2.abs()).max(t3.abs()).max(1.0);
                assert!(
                    res.abs() < 1e-7 * scale,
                    "g={g} theta={theta} k={k}: residual {res} against scale {scale}"
                );
                k += 0.29;
            }
        }
    }

    #[test]
    fn lambda_zero_even_series_matches_kummer() {
        // δ = 0 makes the series even in K; in Q = K² it is the Kummer
        // function 1F1(−Θ/4 + …) of the oscillator problem. Compare against
        // 1F1 with the matched parameters: a = (ζ_H/2) − Θ/4 − 1/2… reduced:
        // O(K) = 1F1(−Θ/4, (ζ_H+1)/2, K²) when Θ/2 is even-integer tuned, and
        // more generally for arbitrary Θ the even recurrence coincides with
        // the Kummer recurrence under q = K².
        let g = 1.25f64;
        let zeta_h = 2.0 * g + 1.0;
        let b = 0.5 * (zeta_h + 1.0);
        for &theta in &[4.0f64, 8.0, 5.5] {
            let a = -theta / 4.0;
            for &kk in &[0.3f64, 0.9, 1.6] {
                let o = heunb_eval(g, theta, 0.0, kk, &mut SeriesAccuracy::default()).unwrap();
                let f =
                    crate::specfun::hyp1f1(a, b, kk * kk, &mut SeriesAccuracy::default()).unwrap();
                assert!(
                    (o - f).abs() <= 1e-10 * f.abs().max(1.0),
                    "theta={theta} kk={kk}: heun {o} vs kummer {f}"
                );
            }
        }
    }
}
