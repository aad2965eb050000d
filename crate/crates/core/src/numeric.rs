//! Small numerical utilities shared across the crate: high-order central
//! difference stencils, a deterministic random-point generator for the
//! verification suites, bisection, and grid helpers.

/// Five-point (4th order) central first derivative.
pub fn deriv1<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x - 2.0 * h) - 8.0 * f(x - h) + 8.0 * f(x + h) - f(x + 2.0 * h)) / (12.0 * h)
}

/// Five-point (4th order) central second derivative.
pub fn deriv2<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (-f(x - 2.0 * h) + 16.0 * f(x - h) - 30.0 * f(x) + 16.0 * f(x + h) - f(x + 2.0 * h))
        / (12.0 * h * h)
}

/// Three-point (2nd order) central first derivative.
pub fn deriv1_o2<F: Fn(f64) -> f64>(f: F, x: f64, h: f64) -> f64 {
    (f(x + h) - f(x - h)) / (2.0 * h)
}

/// Step size for residual stencils near a singular origin: shrinks with r so
/// the stencil never crosses r = 0, capped so h⁴-truncation stays below the
/// residual tolerances everywhere on the tested ranges.
pub fn residual_step(r: f64) -> f64 {
    (0.05 * r).min(0.003)
}

/// SplitMix64: tiny deterministic generator for verification sampling.
/// Platform-independent, no external dependency.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [0, 1).
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 53) as f64
    }

    /// Uniform in [lo, hi).
    pub fn range(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.next_f64()
    }

    /// Uniform integer in [lo, hi].
    pub fn range_usize(&mut self, lo: usize, hi: usize) -> usize {
        lo + (self.next_u64() as usize) % (hi - lo + 1)
    }
}

/// Bisection on a bracketing interval [a, b] with f(a)·f(b) ≤ 0.
/// Returns the midpoint once the interval is below `rel_tol` relative width.
pub fn bisect<F: Fn(f64) -> f64>(f: F, mut a: f64, mut b: f64, rel_tol: f64) -> Option<f64> {
    let mut fa = f(a);
    let fb = f(b);
    if fa == 0.0 {
        return Some(a);
    }
    if fb == 0.0 {
        return Some(b);
    }
    if fa.signum() == fb.signum() {
        return None;
    }
    for _ in 0..200 {
        let mid = 0.5 * (a + b);
        if (b - a).abs() <= rel_tol * mid.abs().max(f64::MIN_POSITIVE) {
            return Some(mid);
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Some(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Some(0.5 * (a + b))
}

/// Uniform grid of `points` values from `lo` to `hi` inclusive.
pub fn linspace(lo: f64, hi: f64, points: usize) -> Vec<f64> {
    if points == 1 {
        return vec![lo];
    }
    let step = (hi - lo) / (points - 1) as f64;
    (0..points).map(|i| lo + step * i as f64).collect()
}

/// Trapezoid rule for ∫ f(r) dr over a (possibly nonuniform) grid.
pub fn trapezoid(grid: &[f64], values: &[f64]) -> f64 {
    assert_eq!(grid.len(), values.len());
    let mut acc = 0.0;
    for i in 1..grid.len() {
        acc += 0.5 * (values[i] + values[i - 1]) * (grid[i] - grid[i - 1]);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivatives_on_polynomials() {
        // 4th-order stencils are exact on quartics up to rounding.
        let f = |x: f64| 1.0 + x + x.powi(2) + x.powi(3) + x.powi(4);
        let df = |x: f64| 1.0 + 2.0 * x + 3.0 * x.powi(2) + 4.0 * x.powi(3);
        let d2f = |x: f64| 2.0 + 6.0 * x + 12.0 * x.powi(2);
        for &x in &[0.3, 1.0, 2.5] {
            assert!((deriv1(f, x, 0.05) - df(x)).abs() < 1e-10);
            assert!((deriv2(f, x, 0.05) - d2f(x)).abs() < 1e-8);
        }
    }

    #[test]
    fn deriv_of_exp() {
        let e = deriv2(|x: f64| x.exp(), 1.0, 0.01);
        assert!((e - 1.0f64.exp()).abs() < 1e-9);
    }

    #[test]
    fn splitmix_deterministic() {
        let mut a = SplitMix64::new(42);
        let mut b = SplitMix64::new(42);
        for _ in 0..100 {
            assert_eq!(a.next_u64(), b.next_u64());
        }
        let mut c = SplitMix64::new(7);
        let x = c.next_f64();
        assert!((0.0..1.0).contains(&x));
    }

    #[test]
    fn bisect_finds_sqrt2() {
        let root = bisect(|x| x * x - 2.0, 0.0, 2.0, 1e-14).unwrap();
        assert!((root - std::f64::consts::SQRT_2).abs() < 1e-13);
    }

    #[test]
    fn trapezoid_linear_exact() {
        let grid = linspace(0.0, 2.0, 101);
        let vals: Vec<f64> = grid.iter().map(|&r| 3.0 * r).collect();
        assert!((trapezoid(&grid, &vals) - 6.0).abs() < 1e-12);
    }
}
