//! Output rendering: CSV with pinned column names, a single stable JSON
//! object, and a minimal static SVG line chart for wavefunctions. Floats are
//! rendered with Rust's shortest round-trip formatting (≤ 17 significant
//! digits), so identical configs produce bytewise identical bytes.

use serde::Serialize;

use fvo_core::spectra::{ScenarioKind, SpectrumResult};
use fvo_core::EvalMode;

use crate::config::RunConfig;

/// One spectrum row per (n, sign), ordered by (n, omega_used, sign: + then −).
#[derive(Debug, Clone, Serialize)]
pub struct SpectrumRow {
    pub n: u32,
    #[serde(rename = "E")]
    pub e: f64,
    pub omega_used: f64,
    pub mode: EvalMode,
    pub scenario: ScenarioKind,
    pub alpha: f64,
    pub chi: f64,
    #[serde(rename = "K")]
    pub k: f64,
    pub j: i64,
    pub lambda: f64,
}

pub fn spectrum_rows(config: &RunConfig, result: &SpectrumResult) -> Vec<SpectrumRow> {
    let mut rows = Vec::with_capacity(result.levels.len() * 2);
    for level in &result.levels {
        for e in [level.e_plus, level.e_minus] {
            rows.push(SpectrumRow {
                n: level.n,
                e,
                omega_used: level.omega_used,
                mode: result.mode,
                scenario: result.scenario,
                alpha: config.params.alpha,
                chi: config.params.chi,
                k: config.qn.k,
                j: config.qn.j,
                lambda: config.qn.lambda,
            });
        }
    }
    rows
}

pub fn spectrum_csv(rows: &[SpectrumRow]) -> String {
    let mut out = String::from("n,E,omega_used,mode,scenario,alpha,chi,K,j,lambda\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{},{},{}\n",
            r.n,
            r.e,
            r.omega_used,
            r.mode.as_str(),
            r.scenario.as_str(),
            r.alpha,
            r.chi,
            r.k,
            r.j,
            r.lambda
        ));
    }
    out
}

#[derive(Serialize)]
struct SpectrumJson<'a> {
    levels: &'a [SpectrumRow],
    diagnostics: &'a [String],
}

pub fn spectrum_json(rows: &[SpectrumRow], diagnostics: &[String]) -> String {
    let doc = SpectrumJson {
        levels: rows,
        diagnostics,
    };
    serde_json::to_string_pretty(&doc).expect("spectrum serialization") + "\n"
}

/// Wavefunction table: r, psi, phi1, phi2, charge_density.
pub struct WavefunctionTable {
    pub grid: Vec<f64>,
    pub psi: Vec<f64>,
    pub phi1: Vec<f64>,
    pub phi2: Vec<f64>,
    pub charge_density: Vec<f64>,
    pub energy: f64,
}

pub fn wavefunction_csv(t: &WavefunctionTable) -> String {
    let mut out = String::from("r,psi,phi1,phi2,charge_density\n");
    for i in 0..t.grid.len() {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            t.grid[i], t.psi[i], t.phi1[i], t.phi2[i], t.charge_density[i]
        ));
    }
    out
}

#[derive(Serialize)]
struct WavefunctionJson<'a> {
    energy: f64,
    r: &'a [f64],
    psi: &'a [f64],
    phi1: &'a [f64],
    phi2: &'a [f64],
    charge_density: &'a [f64],
}

pub fn wavefunction_json(t: &WavefunctionTable) -> String {
    let doc = WavefunctionJson {
        energy: t.energy,
        r: &t.grid,
        psi: &t.psi,
        phi1: &t.phi1,
        phi2: &t.phi2,
        charge_density: &t.charge_density,
    };
    serde_json::to_string_pretty(&doc).expect("wavefunction serialization") + "\n"
}

/// Minimal static SVG line chart of ψ(r).
pub fn wavefunction_svg(t: &WavefunctionTable) -> String {
    let (width, height, pad) = (800.0, 400.0, 40.0);
    let r_max = t.grid.last().copied().unwrap_or(1.0).max(1e-12);
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for &v in &t.psi {
        lo = lo.min(v);
        hi = hi.max(v);
    }
    if !(hi > lo) {
        lo -= 1.0;
        hi += 1.0;
    }
    let x = |r: f64| pad + (width - 2.0 * pad) * r / r_max;
    let y = |v: f64| height - pad - (height - 2.0 * pad) * (v - lo) / (hi - lo);
    let mut points = String::new();
    for (i, &r) in t.grid.iter().enumerate() {
        if i > 0 {
            points.push(' ');
        }
        points.push_str(&format!("{:.3},{:.3}", x(r), y(t.psi[i])));
    }
    let zero_y = y(0.0_f64.clamp(lo, hi));
    format!(
        concat!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 {w} {h}\">\n",
            "<rect width=\"{w}\" height=\"{h}\" fill=\"white\"/>\n",
            "<line x1=\"{pad}\" y1=\"{zy:.3}\" x2=\"{xe}\" y2=\"{zy:.3}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
            "<line x1=\"{pad}\" y1=\"{pad}\" x2=\"{pad}\" y2=\"{ye}\" stroke=\"#999\" stroke-width=\"1\"/>\n",
            "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"{pts}\"/>\n",
            "<text x=\"{xe}\" y=\"{ty:.3}\" font-size=\"12\" text-anchor=\"end\">r = {rmax}</text>\n",
            "<text x=\"{pad}\" y=\"{pad2}\" font-size=\"12\">psi(r), E = {energy}</text>\n",
            "</svg>\n"
        ),
        w = width,
        h = height,
        pad = pad,
        zy = zero_y,
        xe = width - pad,
        ye = height - pad,
        pts = points,
        ty = zero_y - 6.0,
        rmax = r_max,
        pad2 = pad - 10.0,
        energy = t.energy,
    )
}

/// Long-form sweep CSV: one row per (value, n, sign).
pub struct SweepRow {
    pub parameter: &'static str,
    pub value: f64,
    pub n: u32,
    pub e: f64,
    pub omega_used: f64,
}

pub fn sweep_csv(rows: &[SweepRow]) -> String {
    let mut out = String::from("parameter,value,n,E,omega_used\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            r.parameter, r.value, r.n, r.e, r.omega_used
        ));
    }
    out
}
