use anyhow::Result;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use cuspzeros::eisenstein::{
    cpowi, fourier_e_minus_one, gk_regime_approx, gk_theta, lattice_g, Precision, UpperHalfPoint, C_ENV,
};
use cuspzeros::numerics::LogComplex;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
pub enum Method {
    Lattice,
    Fourier,
    Theta,
    Regime,
    All,
}

/// One evaluation of E_k(z) and G_k(z) = z^k (E_k(z) - 1). `error` bounds |G - value| (a
/// certified bound for lattice and Fourier, the a-priori envelope for the approximations).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalRow {
    pub method: String,
    pub k: u32,
    pub x: f64,
    pub y: f64,
    pub e_re: f64,
    pub e_im: f64,
    pub g_re: f64,
    pub g_im: f64,
    pub error: f64,
    pub regime: String,
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalOutcome {
    pub rows: Vec<EvalRow>,
    /// largest |G_a - G_b| over pairs of rows
    pub max_deviation: f64,
}

fn row(method: &str, k: u32, z: UpperHalfPoint, g: Complex64, error: f64, regime: &str) -> EvalRow {
    let e = 1.0 + g * cpowi(1.0 / z.z(), k);
    EvalRow {
        method: method.into(),
        k,
        x: z.x,
        y: z.y,
        e_re: e.re,
        e_im: e.im,
        g_re: g.re,
        g_im: g.im,
        error,
        regime: regime.into(),
    }
}

fn lattice(k: u32, z: UpperHalfPoint, eps: f64) -> Result<EvalRow> {
    let g = lattice_g(&[k], z, eps, Precision::Double)?[0];
    Ok(row("lattice", k, z, g.value, g.err, "LatticeExact"))
}

fn fourier(k: u32, z: UpperHalfPoint, eps: f64) -> Result<EvalRow> {
    // widen the window until the omitted terms are below eps (relative to |E - 1|)
    let zk = LogComplex::from_complex(z.z()).powi(k as i64);
    let mut c = 4.0;
    loop {
        let (s, ln_tail) = fourier_e_minus_one(k, z, c)?;
        let done = ln_tail <= eps.ln() + s.log_mag.max(0.0) || c >= 256.0;
        if done {
            let g = (s * zk).to_complex();
            let err = (ln_tail + zk.log_mag).exp() + 1e-15 * g.norm();
            return Ok(row("fourier", k, z, g, err, "FourierLarge"));
        }
        c *= 2.0;
    }
}

fn theta(k: u32, z: UpperHalfPoint) -> EvalRow {
    let env = C_ENV * z.y / (k as f64).powf(2.0 / 3.0);
    row("theta", k, z, gk_theta(k, z), env, "ThetaMid")
}

fn regime(k: u32, z: UpperHalfPoint) -> EvalRow {
    let a = gk_regime_approx(k, z);
    row("regime", k, z, a.value, a.error_envelope, &format!("{:?}", a.regime))
}

pub fn cmd_eval(k: u32, x: f64, y: f64, method: Method, eps: f64) -> Result<EvalOutcome> {
    let z = UpperHalfPoint::new(x, y)?;
    let rows = match method {
        Method::Lattice => vec![lattice(k, z, eps)?],
        Method::Fourier => vec![fourier(k, z, eps)?],
        Method::Theta => vec![theta(k, z)],
        Method::Regime => vec![regime(k, z)],
        Method::All => vec![lattice(k, z, eps)?, fourier(k, z, eps)?, theta(k, z)],
    };
    let mut max_deviation: f64 = 0.0;
    for (i, a) in rows.iter().enumerate() {
        for b in &rows[i + 1..] {
            let d = Complex64::new(a.g_re - b.g_re, a.g_im - b.g_im).norm();
            max_deviation = max_deviation.max(d);
        }
    }
    Ok(EvalOutcome { rows, max_deviation })
}
