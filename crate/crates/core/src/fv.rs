//! Feshbach–Villars structure: the 2×2 Hamiltonian symbol, its
//! pseudo-hermiticity under τ₃, and assembly of the two-component mode from
//! a scalar radial profile.
//!
//! The component split is φ₁ + φ₂ = ψ and φ₁ − φ₂ = (E/N)ψ for stationary
//! states, N being the arbitrary nonzero splitting parameter (N = m recovers
//! the original transformation).

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum FvError {
    #[error("mass must be positive, got m = {0}")]
    MassNotPositive(f64),
    #[error("splitting parameter N must be nonzero")]
    SplittingParameterZero,
    #[error("grid and profile lengths differ: {grid} vs {profile}")]
    GridMismatch { grid: usize, profile: usize },
}

/// Minimal complex scalar; enough for 2×2 matrix algebra without pulling in
/// a dependency.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct C64 {
    pub re: f64,
    pub im: f64,
}

impl C64 {
    pub const ZERO: C64 = C64 { re: 0.0, im: 0.0 };

    pub fn new(re: f64, im: f64) -> Self {
        Self { re, im }
    }

    pub fn real(re: f64) -> Self {
        Self { re, im: 0.0 }
    }

    pub fn i(im: f64) -> Self {
        Self { re: 0.0, im }
    }

    pub fn conj(self) -> Self {
        Self {
            re: self.re,
            im: -self.im,
        }
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn add(self, o: C64) -> Self {
        Self {
            re: self.re + o.re,
            im: self.im + o.im,
        }
    }

    pub fn sub(self, o: C64) -> Self {
        Self {
            re: self.re - o.re,
            im: self.im - o.im,
        }
    }

    pub fn mul(self, o: C64) -> Self {
        Self {
            re: self.re * o.re - self.im * o.im,
            im: self.re * o.im + self.im * o.re,
        }
    }

    pub fn scale(self, s: f64) -> Self {
        Self {
            re: self.re * s,
            im: self.im * s,
        }
    }

    /// Principal square root.
    pub fn sqrt(self) -> Self {
        let r = self.abs();
        if r == 0.0 {
            return C64::ZERO;
        }
        let re = ((r + self.re) / 2.0).sqrt();
        let im_mag = ((r - self.re) / 2.0).sqrt();
        Self {
            re,
            im: if self.im >= 0.0 { im_mag } else { -im_mag },
        }
    }
}

/// 2×2 complex matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Mat2(pub [[C64; 2]; 2]);

impl Mat2 {
    pub fn zeros() -> Self {
        Mat2([[C64::ZERO; 2]; 2])
    }

    pub fn mul(&self, o: &Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][0].mul(o.0[0][j]).add(self.0[i][1].mul(o.0[1][j]));
            }
        }
        out
    }

    pub fn add(&self, o: &Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j].add(o.0[i][j]);
            }
        }
        out
    }

    pub fn sub(&self, o: &Mat2) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[i][j].sub(o.0[i][j]);
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Mat2 {
        let mut out = *self;
        for row in out.0.iter_mut() {
            for v in row.iter_mut() {
                *v = v.mul(s);
            }
        }
        out
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Mat2 {
        let mut out = Mat2::zeros();
        for i in 0..2 {
            for j in 0..2 {
                out.0[i][j] = self.0[j][i].conj();
            }
        }
        out
    }

    pub fn max_abs(&self) -> f64 {
        self.0.iter().flatten().map(|c| c.abs()).fold(0.0, f64::max)
    }

    /// Eigenvalues from the characteristic polynomial
    /// λ² − tr(H)λ + det(H) = 0.
    pub fn eigenvalues(&self) -> [C64; 2] {
        let tr = self.0[0][0].add(self.0[1][1]);
        let det = self.0[0][0]
            .mul(self.0[1][1])
            .sub(self.0[0][1].mul(self.0[1][0]));
        let half_tr = tr.scale(0.5);
        let disc = half_tr.mul(half_tr).sub(det).sqrt();
        [half_tr.add(disc), half_tr.sub(disc)]
    }
}

/// The conventional 2×2 Pauli matrices τ₁, τ₂, τ₃.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct PauliSet {
    pub tau1: Mat2,
    pub tau2: Mat2,
    pub tau3: Mat2,
}

pub fn pauli() -> PauliSet {
    let tau1 = Mat2([[C64::ZERO, C64::real(1.0)], [C64::real(1.0), C64::ZERO]]);
    let tau2 = Mat2([[C64::ZERO, C64::i(-1.0)], [C64::i(1.0), C64::ZERO]]);
    let tau3 = Mat2([[C64::real(1.0), C64::ZERO], [C64::ZERO, C64::real(-1.0)]]);
    PauliSet { tau1, tau2, tau3 }
}

/// Free FV Hamiltonian symbol H₀(p) = (τ₃ + iτ₂)·p²/(2m) + m·τ₃.
/// Its eigenvalues are ±√(p² + m²).
pub fn fv_hamiltonian_symbol(p: f64, m: f64) -> Result<Mat2, FvError> {
    if !(m > 0.0) {
        return Err(FvError::MassNotPositive(m));
    }
    let t = pauli();
    let kinetic = t
        .tau3
        .add(&t.tau2.scale(C64::i(1.0)))
        .scale(C64::real(p * p / (2.0 * m)));
    Ok(kinetic.add(&t.tau3.scale(C64::real(m))))
}

/// ‖τ₃ H† τ₃ − H‖_max: zero exactly when H is pseudo-Hermitian under τ₃.
pub fn pseudo_hermiticity_residual(h: &Mat2) -> f64 {
    let t3 = pauli().tau3;
    t3.mul(&h.adjoint()).mul(&t3).sub(h).max_abs()
}

/// Two-component stationary mode built from a scalar radial profile.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TwoComponentMode {
    pub grid: Vec<f64>,
    pub scalar: Vec<f64>,
    pub phi1: Vec<f64>,
    pub phi2: Vec<f64>,
    pub energy: f64,
    pub n_param: f64,
}

/// φ₁ = ½(1 + E/N)ψ, φ₂ = ½(1 − E/N)ψ, matching the (1 ± E/N) column of the
/// closed-form eigenstates up to overall normalization.
pub fn assemble_two_component(
    grid: &[f64],
    scalar: &[f64],
    energy: f64,
    n_param: f64,
) -> Result<TwoComponentMode, FvError> {
    if n_param == 0.0 {
        return Err(FvError::SplittingParameterZero);
    }
    if grid.len() != scalar.len() {
        return Err(FvError::GridMismatch {
            grid: grid.len(),
            profile: scalar.len(),
        });
    }
    let ratio = energy / n_param;
    let phi1: Vec<f64> = scalar.iter().map(|&s| 0.5 * (1.0 + ratio) * s).collect();
    let phi2: Vec<f64> = scalar.iter().map(|&s| 0.5 * (1.0 - ratio) * s).collect();
    Ok(TwoComponentMode {
        grid: grid.to_vec(),
        scalar: scalar.to_vec(),
        phi1,
        phi2,
        energy,
        n_param,
    })
}

/// FV charge density |φ₁|² − |φ₂|²; equals (E/N)|ψ|² pointwise.
pub fn charge_density(mode: &TwoComponentMode) -> Vec<f64> {
    mode.phi1
        .iter()
        .zip(&mode.phi2)
        .map(|(&p1, &p2)| p1 * p1 - p2 * p2)
        .collect()
}
