use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::lattice::cpowi;
use super::theta::{jacobi_theta, ThetaArgs};
use super::UpperHalfPoint;
use crate::numerics::{ln_gamma, ln_reg_gamma_p, ln_reg_gamma_q, LogComplex, LogSum};
use crate::{Error, Result};

/// Constant used for every unspecified implied constant in the approximation envelopes.
pub const C_ENV: f64 = 10.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Regime {
    SmallY,
    ThetaMid,
    FourierLarge,
    LatticeExact,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeApprox {
    pub value: Complex64,
    pub regime: Regime,
    pub error_envelope: f64,
}

/// Which of the four side approximations of H_k(1/2 + iy) was used.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum SideBranch {
    /// y <= k^{2/5}
    Small,
    /// k^{2/5} < y <= k^{1/2}, error controlled by Phi_0
    Smallish,
    /// k^{1/2} < y <= k^{3/5} at y = y_N, error controlled by Phi_1
    Large,
    /// y > k^{3/5} at y = y_N
    Largest,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SideApprox {
    pub approx: RegimeApprox,
    pub branch: SideBranch,
}

fn theta_value(k: u32, z: UpperHalfPoint) -> Complex64 {
    jacobi_theta(ThetaArgs::eisenstein(k, z.x, z.y), 1e-17).expect("Im tau = 1/r > 0")
}

/// The theta main term after the modular transformation:
/// `r^{1/2} exp(-ikx/y + pi x^2/r) sum_n exp(-pi r (n - k/(2 pi y))^2) e(nx)`.
pub fn gk_theta_modular(k: u32, z: UpperHalfPoint) -> Complex64 {
    let kf = k as f64;
    let (x, y) = (z.x, z.y);
    let r = 2.0 * PI * y * y / kf;
    let c = kf / (2.0 * PI * y);
    let n0 = c.round();
    let mut sum = Complex64::new(0.0, 0.0);
    for dir in [1.0, -1.0] {
        let mut i = if dir > 0.0 { 0.0 } else { 1.0 };
        loop {
            let n = n0 + dir * i;
            let d = n - c;
            let mag = (-PI * r * d * d).exp();
            sum += Complex64::from_polar(mag, 2.0 * PI * (n * x).fract());
            if mag < 1e-18 * (sum.norm() + 1.0) && i > 1.0 {
                break;
            }
            i += 1.0;
        }
    }
    let pre = Complex64::new(PI * x * x / r, -kf * x / y).exp() * r.sqrt();
    pre * sum
}

// (-2 pi i z)^k / Gamma(k) sum over the window n^{k-1} e(nz), plus the log of the bound on
// the omitted terms (relative to the same prefactor in absolute value).
fn fourier_large(k: u32, z: UpperHalfPoint) -> (Complex64, f64) {
    let kf = k as f64;
    let a = 2.0 * PI * z.y;
    let half = kf.ln().powi(2) * kf.sqrt() / a;
    let nstar = kf / a;
    let t0 = (kf - 1.0) / a;
    let lo = (nstar - half).floor().max(1.0).min(t0.floor().max(1.0));
    let hi = (nstar + half).ceil().max(t0.ceil());
    let ln_pre = kf * (2.0 * PI * z.r()).ln() - ln_gamma(kf);
    let ph_pre = kf * (z.theta() - PI / 2.0);
    let mut acc = LogSum::new();
    let mut n = lo;
    while n <= hi {
        acc.add(LogComplex::new(ln_pre + (kf - 1.0) * n.ln() - a * n, ph_pre + 2.0 * PI * (n * z.x).fract()));
        n += 1.0;
    }
    // omitted terms: (2 pi |z|)^k / Gamma(k) * Gamma(k) / (2 pi y)^k * (Q + P) = (|z|/y)^k (Q + P)
    let lq = ln_reg_gamma_q(kf, a * hi).unwrap_or(0.0);
    let lp = if lo > 1.0 { ln_reg_gamma_p(kf, a * lo).unwrap_or(0.0) } else { f64::NEG_INFINITY };
    let ln_tail = kf * (z.r() / z.y).ln() + lq.max(lp) + 2f64.ln();
    (acc.value().to_complex(), ln_tail)
}

/// Small-y main terms of G_k: `1 + (z/(z-1))^k + (z/(z+1))^k`.
pub fn gk_small_y(k: u32, z: UpperHalfPoint) -> Complex64 {
    let zc = z.z();
    1.0 + cpowi(zc / (zc - 1.0), k) + cpowi(zc / (zc + 1.0), k)
}

/// Theta main term of G_k (direct theta form).
pub fn gk_theta(k: u32, z: UpperHalfPoint) -> Complex64 {
    theta_value(k, z)
}

/// Regime-wise approximation of G_k(z): small-y main terms for y <= k^{2/5}, the theta
/// term for y <= k^{2/3}, the windowed Fourier sum of the c = 1 row above.
pub fn gk_regime_approx(k: u32, z: UpperHalfPoint) -> RegimeApprox {
    let kf = k as f64;
    let y = z.y;
    if y <= kf.powf(0.4) {
        RegimeApprox { value: gk_small_y(k, z), regime: Regime::SmallY, error_envelope: C_ENV * (-kf.powf(1.0 / 6.0)).exp() }
    } else if y <= kf.powf(2.0 / 3.0) {
        RegimeApprox { value: theta_value(k, z), regime: Regime::ThetaMid, error_envelope: C_ENV * y / kf.powf(2.0 / 3.0) }
    } else {
        let (value, ln_tail) = fourier_large(k, z);
        let env = C_ENV * 3f64.powf(-kf / 2.0) * (1.0 + y / kf.sqrt()) + ln_tail.exp();
        RegimeApprox { value, regime: Regime::FourierLarge, error_envelope: env }
    }
}

/// Phi_0(r) = sum_{n != 0, -1} exp(-(pi/r)(n^2 + n))
pub fn phi0(r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidArgument(format!("phi0 needs r > 0, got {r}")));
    }
    // n and -1-n give the same term; sum n >= 1 twice
    let mut s = 0.0;
    let mut n = 1.0;
    loop {
        let t = (-(PI / r) * (n * n + n)).exp();
        s += 2.0 * t;
        if t < 1e-16 * s.max(1e-300) || t == 0.0 {
            break;
        }
        n += 1.0;
    }
    Ok(s)
}

/// Phi_1(r) = sum_{n != 0} exp(-pi r n^2)
pub fn phi1(r: f64) -> Result<f64> {
    if !(r > 0.0) {
        return Err(Error::InvalidArgument(format!("phi1 needs r > 0, got {r}")));
    }
    let mut s = 0.0;
    let mut n = 1.0;
    loop {
        let t = (-PI * r * n * n).exp();
        s += 2.0 * t;
        if t < 1e-16 * s.max(1e-300) || t == 0.0 {
            break;
        }
        n += 1.0;
    }
    Ok(s)
}

/// Approximations of H_k(1/2 + iy) by branch. The two large-y branches need the index N
/// of the nearest y_N = k/(2 pi N), checked as |2 pi N y / k - 1| <= 10/k.
pub fn hk_side_regimes(k: u32, y: f64, n: Option<u32>) -> Result<SideApprox> {
    let kf = k as f64;
    let phi = (1.0 / (2.0 * y)).atan();
    let r = 2.0 * PI * y * y / kf;
    let sgn_k = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    let small_value = 2.0 * sgn_k * (kf * phi).cos();
    if y <= kf.powf(0.4) {
        let approx = RegimeApprox {
            value: Complex64::new(small_value, 0.0),
            regime: Regime::SmallY,
            error_envelope: C_ENV * (-kf.powf(1.0 / 6.0)).exp(),
        };
        return Ok(SideApprox { approx, branch: SideBranch::Small });
    }
    if y <= kf.sqrt() {
        let approx = RegimeApprox {
            value: Complex64::new(small_value, 0.0),
            regime: Regime::ThetaMid,
            error_envelope: phi0(r)? + C_ENV * kf.powf(-1.0 / 6.0),
        };
        return Ok(SideApprox { approx, branch: SideBranch::Smallish });
    }
    let nn = match n {
        Some(nn) if nn > 0 && (2.0 * PI * nn as f64 * y / kf - 1.0).abs() <= 10.0 / kf => nn,
        _ => return Err(Error::BadN { n, y }),
    };
    let sgn = if (nn + k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    if y <= kf.powf(0.6) {
        let main = r.sqrt() * (PI / (4.0 * r)).exp();
        let approx = RegimeApprox {
            value: Complex64::new(sgn * main, 0.0),
            regime: Regime::ThetaMid,
            error_envelope: main * phi1(r)? + C_ENV * kf.powf(-1.0 / 15.0),
        };
        Ok(SideApprox { approx, branch: SideBranch::Large })
    } else {
        let approx = RegimeApprox {
            value: Complex64::new(sgn * r.sqrt(), 0.0),
            regime: Regime::FourierLarge,
            error_envelope: C_ENV * r.sqrt() * kf.powf(-0.2),
        };
        Ok(SideApprox { approx, branch: SideBranch::Largest })
    }
}
