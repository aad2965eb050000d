//! Dislocation space-time geometry: the metric and its inverse, the
//! generalized Feshbach–Villars operator coefficients derived from it, a
//! numerical Ricci-scalar check, and the quantum invariants (ζ, σ², κ, |γ|,
//! β², δ) that the radial equations are written in.
//!
//! Coordinates are ordered (t, r, φ, z) with signature (+,−,−,−). The line
//! element carries an angular parameter α ∈ (0,1] (deficit 2π(1−α)) and a
//! dislocation distortion χ tied to the Burgers vector b = 2πχ.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::numeric::{deriv1, deriv1_o2};
use crate::EvalMode;

#[derive(Debug, Error, PartialEq)]
pub enum SpacetimeError {
    #[error("radius must be positive, got r = {0}")]
    NonPositiveRadius(f64),
    #[error("alpha must lie in (0, 1], got {0}")]
    AlphaOutOfRange(f64),
    #[error("{0} must be finite")]
    NonFinite(&'static str),
    #[error("finite-difference step h = {h} too large for r = {r} (need r > 2h > 0)")]
    StepTooLarge { h: f64, r: f64 },
    #[error("mass must be positive, got m = {0}")]
    MassNotPositive(f64),
    #[error("oscillator frequency must be nonnegative, got omega = {0}")]
    NegativeOmega(f64),
    #[error("FV splitting parameter N must be nonzero")]
    SplittingParameterZero,
    #[error("overcritical coupling: zeta^2 = {zeta_sq} < lambda^2 = {lambda_sq}")]
    OvercriticalCoupling { zeta_sq: f64, lambda_sq: f64 },
}

/// 4×4 real matrix in coordinate order (t, r, φ, z).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Mat4(pub [[f64; 4]; 4]);

impl Mat4 {
    pub fn zeros() -> Self {
        Mat4([[0.0; 4]; 4])
    }

    pub fn identity() -> Self {
        let mut m = Self::zeros();
        for i in 0..4 {
            m.0[i][i] = 1.0;
        }
        m
    }

    pub fn mul(&self, other: &Mat4) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                let mut acc = 0.0;
                for k in 0..4 {
                    acc += self.0[i][k] * other.0[k][j];
                }
                out.0[i][j] = acc;
            }
        }
        out
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = Mat4::zeros();
        for i in 0..4 {
            for j in 0..4 {
                out.0[i][j] = self.0[j][i];
            }
        }
        out
    }

    /// Largest entrywise absolute difference.
    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        let mut worst = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                worst = worst.max((self.0[i][j] - other.0[i][j]).abs());
            }
        }
        worst
    }

    /// Determinant by LU elimination with partial pivoting. Used as the
    /// numeric cross-check of the closed-form determinant.
    pub fn det_lu(&self) -> f64 {
        let mut a = self.0;
        let mut det = 1.0;
        for col in 0..4 {
            let mut pivot = col;
            for row in col + 1..4 {
                if a[row][col].abs() > a[pivot][col].abs() {
                    pivot = row;
                }
            }
            if a[pivot][col] == 0.0 {
                return 0.0;
            }
            if pivot != col {
                a.swap(pivot, col);
                det = -det;
            }
            det *= a[col][col];
            for row in col + 1..4 {
                let factor = a[row][col] / a[col][col];
                for k in col..4 {
                    a[row][k] -= factor * a[col][k];
                }
            }
        }
        det
    }
}

/// Dislocation geometry: angular parameter α and distortion χ, with the
/// derived Burgers length and string linear mass density.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpacetimeParams {
    pub alpha: f64,
    pub chi: f64,
    /// b = 2πχ.
    pub burgers: f64,
    /// μ = (1 − α)/4.
    pub mass_density: f64,
}

impl SpacetimeParams {
    /// α ∈ (0,1]; α = 1 is the flat (no-defect) limit.
    pub fn new(alpha: f64, chi: f64) -> Result<Self, SpacetimeError> {
        if !alpha.is_finite() {
            return Err(SpacetimeError::NonFinite("alpha"));
        }
        if !(alpha > 0.0 && alpha <= 1.0) {
            return Err(SpacetimeError::AlphaOutOfRange(alpha));
        }
        if !chi.is_finite() {
            return Err(SpacetimeError::NonFinite("chi"));
        }
        Ok(Self {
            alpha,
            chi,
            burgers: 2.0 * std::f64::consts::PI * chi,
            mass_density: (1.0 - alpha) / 4.0,
        })
    }

    pub fn flat() -> Self {
        Self::new(1.0, 0.0).unwrap()
    }
}

/// Quantum numbers and particle data for one mode: azimuthal j, linear
/// momentum K along z, radial level n, mass m, oscillator frequency ω,
/// Coulomb strength λ, and the FV splitting parameter N (N = m recovers the
/// original FV transformation).
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct QuantumNumbers {
    pub j: i64,
    pub k: f64,
    pub n: u32,
    pub m: f64,
    pub omega: f64,
    pub lambda: f64,
    pub n_param: f64,
}

impl QuantumNumbers {
    pub fn new(
        j: i64,
        k: f64,
        n: u32,
        m: f64,
        omega: f64,
        lambda: f64,
        n_param: f64,
    ) -> Result<Self, SpacetimeError> {
        if !(m.is_finite() && m > 0.0) {
            return Err(SpacetimeError::MassNotPositive(m));
        }
        if !(omega.is_finite() && omega >= 0.0) {
            return Err(SpacetimeError::NegativeOmega(omega));
        }
        if !k.is_finite() || !lambda.is_finite() {
            return Err(SpacetimeError::NonFinite("K or lambda"));
        }
        if n_param == 0.0 || !n_param.is_finite() {
            return Err(SpacetimeError::SplittingParameterZero);
        }
        Ok(Self {
            j,
            k,
            n,
            m,
            omega,
            lambda,
            n_param,
        })
    }
}

/// Covariant metric g_{μν}(r) of the dislocation line element.
pub fn metric(params: &SpacetimeParams, r: f64) -> Result<Mat4, SpacetimeError> {
    if !(r > 0.0) {
        return Err(SpacetimeError::NonPositiveRadius(r));
    }
    let (a, chi) = (params.alpha, params.chi);
    let mut g = Mat4::zeros();
    g.0[0][0] = 1.0;
    g.0[1][1] = -1.0;
    g.0[2][2] = -(a * a * r * r + chi * chi);
    g.0[2][3] = chi;
    g.0[3][2] = chi;
    g.0[3][3] = -1.0;
    Ok(g)
}

/// Contravariant metric g^{μν}(r).
pub fn inverse_metric(params: &SpacetimeParams, r: f64) -> Result<Mat4, SpacetimeError> {
    if !(r > 0.0) {
        return Err(SpacetimeError::NonPositiveRadius(r));
    }
    let (a, chi) = (params.alpha, params.chi);
    let a2r2 = a * a * r * r;
    let mut g = Mat4::zeros();
    g.0[0][0] = 1.0;
    g.0[1][1] = -1.0;
    g.0[2][2] = -1.0 / a2r2;
    g.0[2][3] = -chi / a2r2;
    g.0[3][2] = -chi / a2r2;
    g.0[3][3] = -(1.0 + chi * chi / a2r2);
    Ok(g)
}

/// det g = −α²r² (the φ–z block determinant is α²r² exactly).
pub fn metric_determinant(params: &SpacetimeParams, r: f64) -> Result<f64, SpacetimeError> {
    if !(r > 0.0) {
        return Err(SpacetimeError::NonPositiveRadius(r));
    }
    Ok(-(params.alpha * params.alpha * r * r))
}

/// √(−g) = αr.
pub fn sqrt_neg_det(params: &SpacetimeParams, r: f64) -> Result<f64, SpacetimeError> {
    Ok((-metric_determinant(params, r)?).sqrt())
}

/// Pointwise values of the scalar-sector operator coefficients at radius r:
///
/// T = c₂ ∂²_r + c₁(r) ∂_r + c_φφ(r) ∂²_φ + c_zz(r) ∂²_z + c_φz(r) ∂_φ∂_z + m²
///
/// built generically from the inverse metric through G^{ij} = g^{ij} −
/// g^{0i}g^{0j}/g^{00}, F = √(g⁰⁰√−g), U^i = √−g·g^{0i}, with the first-order
/// coefficient from the divergence form (1/√−g)∂_r(√−g·G^{rr}/g⁰⁰).
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct GfvtPoint {
    pub second_deriv: f64,
    pub first_deriv: f64,
    pub phi_phi: f64,
    pub z_z: f64,
    pub cross_phi_z: f64,
    pub constant: f64,
    pub y_term: f64,
    pub f_factor: f64,
    pub u_vector: [f64; 3],
}

/// Operator coefficients of the generalized FV transformation for a given
/// geometry and mass. Coefficients are functions of r; evaluate with [`GfvtCoefficients::at`].
#[derive(Clone, Copy, Debug)]
pub struct GfvtCoefficients {
    pub params: SpacetimeParams,
    pub mass: f64,
}

pub fn gfvt_coefficients(
    params: &SpacetimeParams,
    mass: f64,
) -> Result<GfvtCoefficients, SpacetimeError> {
    if !(mass > 0.0) {
        return Err(SpacetimeError::MassNotPositive(mass));
    }
    Ok(GfvtCoefficients {
        params: *params,
        mass,
    })
}

impl GfvtCoefficients {
    /// Spatial G^{ij}/g⁰⁰ at radius r (indices 0,1,2 ↦ r,φ,z).
    fn spatial_g(&self, r: f64) -> Result<[[f64; 3]; 3], SpacetimeError> {
        let inv = inverse_metric(&self.params, r)?;
        let g00 = inv.0[0][0];
        let mut out = [[0.0; 3]; 3];
        for i in 0..3 {
            for j in 0..3 {
                let gij = inv.0[i + 1][j + 1] - inv.0[0][i + 1] * inv.0[0][j + 1] / g00;
                out[i][j] = gij / g00;
            }
        }
        Ok(out)
    }

    pub fn at(&self, r: f64) -> Result<GfvtPoint, SpacetimeError> {
        if !(r > 0.0) {
            return Err(SpacetimeError::NonPositiveRadius(r));
        }
        let inv = inverse_metric(&self.params, r)?;
        let g00 = inv.0[0][0];
        let g = self.spatial_g(r)?;
        let sg = sqrt_neg_det(&self.params, r)?;

        // Divergence-form first-derivative coefficient, differentiated
        // numerically so nothing is hand-coded for this particular metric.
        let params = self.params;
        // Keep the 5-point stencil inside r > 0.
        let h = (0.01 * r.max(1.0)).min(0.4 * r);
        let w = |rr: f64| {
            let invr = inverse_metric(&params, rr).unwrap();
            let g00r = invr.0[0][0];
            let grr = (invr.0[1][1] - invr.0[0][1] * invr.0[0][1] / g00r) / g00r;
            sqrt_neg_det(&params, rr).unwrap() * grr
        };
        let first_deriv = deriv1(w, r, h) / sg;

        // Y = ½{∂_i, √−g g^{0i}/g⁰⁰}: both the multiplier and its divergence,
        // collapsed into one magnitude (identically zero for static metrics).
        let u_vector = [sg * inv.0[0][1], sg * inv.0[0][2], sg * inv.0[0][3]];
        let y_mult: f64 = u_vector.iter().map(|u| (u / g00).abs()).sum();
        let y_div = {
            let a1 = |rr: f64| {
                let invr = inverse_metric(&params, rr).unwrap();
                sqrt_neg_det(&params, rr).unwrap() * invr.0[0][1] / invr.0[0][0]
            };
            0.5 * deriv1(a1, r, h).abs()
        };
        let y_term = y_mult + y_div;

        Ok(GfvtPoint {
            second_deriv: g[0][0],
            first_deriv,
            phi_phi: g[1][1],
            z_z: g[2][2],
            cross_phi_z: 2.0 * g[1][2],
            constant: self.mass * self.mass / g00,
            y_term,
            f_factor: (g00 * sg).sqrt(),
            u_vector,
        })
    }
}

/// Numerical Ricci scalar from finite differences of Christoffel symbols
/// built out of `metric()`. For this locally flat defect geometry the exact
/// value is 0 away from the axis; the returned number measures the
/// discretization error only. Christoffel derivatives use a 5-point central
/// stencil (plain 3-point nesting cannot reach the required tolerance near
/// the axis).
pub fn ricci_scalar_numeric(
    params: &SpacetimeParams,
    r: f64,
    h: f64,
) -> Result<f64, SpacetimeError> {
    if !(r > 0.0) {
        return Err(SpacetimeError::NonPositiveRadius(r));
    }
    if !(h > 0.0) || 2.0 * h >= r {
        return Err(SpacetimeError::StepTooLarge { h, r });
    }

    // Christoffel symbols at radius rr. Only the radial coordinate matters
    // for this metric, but the derivative loop is generic over all four.
    let christoffel = |rr: f64| -> [[[f64; 4]; 4]; 4] {
        let inv = inverse_metric(params, rr).unwrap();
        // ∂_c g_{ab}: central difference along each coordinate; the metric
        // entries are quadratic in r, so the 3-point stencil is exact.
        let mut dg = [[[0.0; 4]; 4]; 4];
        for a in 0..4 {
            for b in 0..4 {
                dg[1][a][b] = deriv1_o2(|x: f64| metric(params, x).unwrap().0[a][b], rr, h);
            }
        }
        let mut gamma = [[[0.0; 4]; 4]; 4];
        for mu in 0..4 {
            for nu in 0..4 {
                for rho in 0..4 {
                    let mut acc = 0.0;
                    for sig in 0..4 {
                        acc += inv.0[mu][sig]
                            * (dg[nu][sig][rho] + dg[rho][sig][nu] - dg[sig][nu][rho]);
                    }
                    gamma[mu][nu][rho] = 0.5 * acc;
                }
            }
        }
        gamma
    };

    // ∂_r Γ via the 5-point stencil; derivatives along t, φ, z vanish.
    let g_m2 = christoffel(r - 2.0 * h);
    let g_m1 = christoffel(r - h);
    let g_p1 = christoffel(r + h);
    let g_p2 = christoffel(r + 2.0 * h);
    let g_0 = christoffel(r);
    let dgamma_r = |mu: usize, nu: usize, rho: usize| -> f64 {
        (g_m2[mu][nu][rho] - 8.0 * g_m1[mu][nu][rho] + 8.0 * g_p1[mu][nu][rho] - g_p2[mu][nu][rho])
            / (12.0 * h)
    };
    let dgamma = |c: usize, mu: usize, nu: usize, rho: usize| -> f64 {
        if c == 1 {
            dgamma_r(mu, nu, rho)
        } else {
            0.0
        }
    };

    // R_{μν} = ∂_ρ Γ^ρ_{μν} − ∂_ν Γ^ρ_{μρ} + Γ^ρ_{ρλ}Γ^λ_{μν} − Γ^ρ_{νλ}Γ^λ_{μρ}
    let inv = inverse_metric(params, r)?;
    let mut r_scalar = 0.0;
    for mu in 0..4 {
        for nu in 0..4 {
            let mut ricci = 0.0;
            for rho in 0..4 {
                ricci += dgamma(rho, rho, mu, nu) - dgamma(nu, rho, mu, rho);
                for lam in 0..4 {
                    ricci += g_0[rho][rho][lam] * g_0[lam][mu][nu]
                        - g_0[rho][nu][lam] * g_0[lam][mu][rho];
                }
            }
            r_scalar += inv.0[mu][nu] * ricci;
        }
    }
    Ok(r_scalar)
}

/// Derived scalar invariants of one mode at energy E.
///
/// ζ = (j+χK)/α, σ² = ζ², κ = √(E²−m²−K²) (continuum radicand), |γ| =
/// √(ζ²−λ²), β² = δ_osc = E²−m²−K²+2mω, Θ = β²/(mω) − 2(|γ|+1), and the
/// scaled Coulomb strength δ in both algebraic forms (rederived 2λE/√(mω),
/// as printed 2λ√(m/ω)). ω-dependent members are `None` when ω = 0.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuantumInvariants {
    pub zeta: f64,
    pub sigma_sq: f64,
    pub kappa: Option<f64>,
    pub gamma_abs: f64,
    pub beta_sq: f64,
    pub delta_osc: f64,
    pub theta: Option<f64>,
    pub delta_coul_rederived: Option<f64>,
    pub delta_coul_printed: Option<f64>,
}

impl QuantumInvariants {
    pub fn delta_coul(&self, mode: EvalMode) -> Option<f64> {
        match mode {
            EvalMode::Rederived => self.delta_coul_rederived,
            EvalMode::AsPrinted => self.delta_coul_printed,
        }
    }
}

pub fn quantum_invariants(
    params: &SpacetimeParams,
    qn: &QuantumNumbers,
    energy: f64,
) -> Result<QuantumInvariants, SpacetimeError> {
    let zeta = (qn.j as f64 + qn.chi_k(params)) / params.alpha;
    let sigma_sq = zeta * zeta;
    let lambda_sq = qn.lambda * qn.lambda;
    if sigma_sq < lambda_sq {
        return Err(SpacetimeError::OvercriticalCoupling {
            zeta_sq: sigma_sq,
            lambda_sq,
        });
    }
    let gamma_abs = (sigma_sq - lambda_sq).sqrt();

    let continuum = energy * energy - qn.m * qn.m - qn.k * qn.k;
    let kappa = if continuum >= 0.0 {
        Some(continuum.sqrt())
    } else {
        None
    };
    let beta_sq = continuum + 2.0 * qn.m * qn.omega;

    let momega = qn.m * qn.omega;
    let (theta, delta_red, delta_printed) = if qn.omega > 0.0 {
        (
            Some(beta_sq / momega - 2.0 * (gamma_abs + 1.0)),
            Some(2.0 * qn.lambda * energy / momega.sqrt()),
            Some(2.0 * qn.lambda * (qn.m / qn.omega).sqrt()),
        )
    } else {
        (None, None, None)
    };

    Ok(QuantumInvariants {
        zeta,
        sigma_sq,
        kappa,
        gamma_abs,
        beta_sq,
        delta_osc: beta_sq,
        theta,
        delta_coul_rederived: delta_red,
        delta_coul_printed: delta_printed,
    })
}

impl QuantumNumbers {
    /// χK contribution to the effective azimuthal number.
    fn chi_k(&self, params: &SpacetimeParams) -> f64 {
        params.chi * self.k
    }
}
