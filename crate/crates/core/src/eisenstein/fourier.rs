use std::f64::consts::PI;

use num_complex::Complex64;

use super::lattice::check_weight;
use super::UpperHalfPoint;
use crate::numerics::{gamma_k_analytic, ln_gamma, ln_reg_gamma_p, ln_reg_gamma_q, zeta, LogComplex, LogSum};
use crate::{Error, Result};

/// ln sigma_{k-1}(n) = (k-1) ln n + ln sum_{d | n} d^{-(k-1)}
pub(crate) fn ln_sigma(k: u32, n: u64) -> f64 {
    let e = (k - 1) as f64;
    let mut s = 0.0;
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            s += (d as f64).powf(-e);
            let other = n / d;
            if other != d {
                s += (other as f64).powf(-e);
            }
        }
        d += 1;
    }
    e * (n as f64).ln() + s.ln()
}

fn ln_add(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY {
        return b;
    }
    if b == f64::NEG_INFINITY {
        return a;
    }
    let m = a.max(b);
    m + ((a - m).exp() + (b - m).exp()).ln()
}

/// Truncation window [lo, hi] for the Fourier sum and the log of the rigorous bound on
/// the omitted terms of `E_k - 1`.
pub(crate) fn window(k: u32, y: f64, window_c: f64) -> (u64, u64, f64) {
    let kf = k as f64;
    let a = 2.0 * PI * y;
    let nstar = kf / a;
    let half = window_c * kf.sqrt() / a;
    let t0 = (kf - 1.0) / a;
    let mut lo = (nstar - half).floor().max(1.0);
    let mut hi = (nstar + half).ceil().max(1.0);
    lo = lo.min(t0.floor().max(1.0));
    hi = hi.max(t0.ceil());
    let lq = ln_reg_gamma_q(kf, a * hi).unwrap_or(0.0);
    let lp = if lo > 1.0 { ln_reg_gamma_p(kf, a * lo).unwrap_or(0.0) } else { f64::NEG_INFINITY };
    let ln_tail = zeta(kf - 1.0).ln() - zeta(kf).ln() - kf * y.ln() + ln_add(lq, lp);
    (lo as u64, hi as u64, ln_tail)
}

/// `E_k(z) - 1 = gamma_k sum sigma_{k-1}(n) e(nz)` summed over the window
/// |n - k/(2 pi y)| <= window_c sqrt(k) / (2 pi y), in log space. Returns the value and
/// the log of the bound on the omitted terms.
pub fn fourier_e_minus_one(k: u32, z: UpperHalfPoint, window_c: f64) -> Result<(LogComplex, f64)> {
    check_weight(k)?;
    if z.y < 1.0 {
        return Err(Error::FourierNeedsLargeY(z.y));
    }
    if !(window_c > 0.0) {
        return Err(Error::InvalidArgument("window_c must be positive".into()));
    }
    let g = gamma_k_analytic(k);
    let (lo, hi, ln_tail) = window(k, z.y, window_c);
    let mut acc = LogSum::new();
    for n in lo..=hi {
        let nf = n as f64;
        let t = LogComplex::new(ln_sigma(k, n) - 2.0 * PI * nf * z.y, 2.0 * PI * (nf * z.x).fract());
        acc.add(t);
    }
    Ok((acc.value() * g, ln_tail))
}

/// E_k(z) from the truncated Fourier expansion (requires y >= 1).
pub fn eval_ek_fourier(k: u32, z: UpperHalfPoint, window_c: f64) -> Result<Complex64> {
    let (s, _) = fourier_e_minus_one(k, z, window_c)?;
    Ok(Complex64::new(1.0, 0.0) + s.to_complex())
}

/// ln of `(2 pi y)^k / Gamma(k) * n^{k-1} exp(-2 pi n y)`, the size of a single term of
/// the c = 1 row in its Fourier form.
pub fn fourier_single_term_ln(k: u32, y: f64, n: u64) -> f64 {
    let kf = k as f64;
    kf * (2.0 * PI * y).ln() - ln_gamma(kf) + (kf - 1.0) * (n as f64).ln() - 2.0 * PI * n as f64 * y
}
