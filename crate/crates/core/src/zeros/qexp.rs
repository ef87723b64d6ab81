use std::f64::consts::PI;

use crate::delta::WeightPair;
use crate::eisenstein::ln_sigma;
use crate::numerics::{gamma_k, ln_gamma, ln_reg_gamma_q, zeta, Certified, LogComplex, LogSum};
use crate::{Error, Result};

/// Terms kept in the dominance certificate.
pub const CERT_TERMS: usize = 50;
/// Coefficients kept for side evaluation.
pub const EVAL_TERMS: usize = 80;

/// q-expansion Delta = sum_{n >= 1} a_n q^n, coefficients in log form.
#[derive(Debug, Clone)]
pub struct DeltaQExpansion {
    w: u32,
    coeffs: Vec<LogComplex>,
    ln_err: Vec<f64>,
    // |a_n| <= B n^{w-1}
    ln_b: f64,
}

impl DeltaQExpansion {
    pub fn new(wp: WeightPair, n_max: usize) -> Result<Self> {
        let (k, l, w) = (wp.k, wp.l, wp.w());
        let (gk, gl, gw) = (gamma_k(k)?, gamma_k(l)?, gamma_k(w)?);
        let gkl = gk * gl;
        let sk: Vec<f64> = (0..=n_max as u64).map(|n| if n == 0 { 0.0 } else { ln_sigma(k, n) }).collect();
        let sl: Vec<f64> = (0..=n_max as u64).map(|n| if n == 0 { 0.0 } else { ln_sigma(l, n) }).collect();
        let mut coeffs = Vec::with_capacity(n_max);
        let mut ln_err = Vec::with_capacity(n_max);
        for n in 1..=n_max {
            let mut s = LogSum::new();
            s.add(gk.scale_log(sk[n]));
            s.add(gl.scale_log(sl[n]));
            s.add(gw.scale_log(ln_sigma(w, n as u64)) * LogComplex::new(0.0, PI));
            for i in 1..n {
                s.add(gkl.scale_log(sk[i] + sl[n - i]));
            }
            let a = s.value();
            // each term carries the rounding of exp applied to a large logarithm
            let lns = s.ln_abs_sum();
            let rel = (lns.abs() + w as f64 * ((n + 1) as f64).ln() + 50.0) * 1e-15 * n as f64;
            coeffs.push(LogComplex::new(a.log_mag, if a.phase.cos() > 0.0 { 0.0 } else { PI }));
            ln_err.push(lns + rel.ln());
        }
        let zk = zeta((k - 1) as f64);
        let zl = zeta((l - 1) as f64);
        let mut b = LogSum::new();
        b.add(LogComplex::new(gk.log_mag + zk.ln(), 0.0));
        b.add(LogComplex::new(gl.log_mag + zl.ln(), 0.0));
        b.add(LogComplex::new(gw.log_mag + zeta((w - 1) as f64).ln(), 0.0));
        b.add(LogComplex::new(gkl.log_mag + zk.ln() + zl.ln(), 0.0));
        Ok(DeltaQExpansion { w, coeffs, ln_err, ln_b: b.value().log_mag })
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// a_n as sign and log-magnitude (n >= 1).
    pub fn coefficient(&self, n: usize) -> LogComplex {
        self.coeffs[n - 1]
    }

    /// ln of a bound for sum_{n > big_n} |a_n| e^{-2 pi n y}; `None` when big_n lies before the
    /// peak of n^{w-1} e^{-2 pi n y}, where the integral comparison is not valid.
    pub fn ln_tail(&self, y: f64, big_n: usize) -> Option<f64> {
        let a = 2.0 * PI * y;
        let wf = self.w as f64;
        if (big_n as f64) < (wf - 1.0) / a {
            return None;
        }
        let lq = ln_reg_gamma_q(wf, a * big_n as f64).ok()?;
        Some(self.ln_b + ln_gamma(wf) + lq - wf * a.ln())
    }

    /// |a_1| e^{-2 pi y} > 2 (sum_{n=2}^{N} |a_n| e^{-2 pi n y} + tail), which forces Delta to be
    /// nonzero on the whole line Im z = y and, by monotonicity, above it.
    pub fn dominance_holds(&self, y: f64, terms: usize) -> bool {
        let terms = terms.min(self.coeffs.len());
        let Some(lt) = self.ln_tail(y, terms) else { return false };
        let a = 2.0 * PI * y;
        let a1 = self.coeffs[0];
        let lead_lo = ln_sub(a1.log_mag, self.ln_err[0]);
        let mut rest = LogSum::new();
        for n in 2..=terms {
            rest.add(LogComplex::new(self.coeffs[n - 1].log_mag, 0.0).scale_log(-a * (n - 1) as f64));
            rest.add(LogComplex::new(self.ln_err[n - 1] - a * (n - 1) as f64, 0.0));
        }
        rest.add(LogComplex::new(lt + a, 0.0));
        match lead_lo {
            Some(l) => l > 2f64.ln() + rest.value().log_mag,
            None => false,
        }
    }

    /// Delta(x + iy) in log form with the log of an absolute error bound; `None` where the
    /// tail bound is unavailable.
    pub fn eval_log(&self, x: f64, y: f64) -> Option<(LogComplex, f64)> {
        let big_n = self.coeffs.len();
        let lt = self.ln_tail(y, big_n)?;
        let a = 2.0 * PI * y;
        let mut s = LogSum::new();
        let mut e = LogSum::new();
        for n in 1..=big_n {
            let c = self.coeffs[n - 1];
            let ph = c.phase + 2.0 * PI * (n as f64 * x).rem_euclid(1.0);
            s.add(LogComplex::new(c.log_mag - a * n as f64, ph));
            e.add(LogComplex::new(self.ln_err[n - 1] - a * n as f64, 0.0));
        }
        e.add(LogComplex::new(lt, 0.0));
        // summation and phase rounding relative to the sum of magnitudes
        let ln_err = ln_add(e.value().log_mag, s.ln_abs_sum() + (8.0 * big_n as f64 * f64::EPSILON).ln());
        Some((s.value(), ln_err))
    }

    /// Delta(1/2 + iy) as a positive multiple of `(value, err)`; the multiple is chosen so
    /// that neither underflows.
    pub fn side_value(&self, y: f64) -> Option<Certified<f64>> {
        let (v, ln_err) = self.eval_log(0.5, y)?;
        let refl = v.log_mag.max(ln_err);
        let value = if v.is_zero() { 0.0 } else { v.phase.cos().signum() * (v.log_mag - refl).exp() };
        Some(Certified { value, err: (ln_err - refl).exp() })
    }
}

fn ln_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a > b { (a, b) } else { (b, a) };
    if hi == f64::NEG_INFINITY {
        return hi;
    }
    hi + (lo - hi).exp().ln_1p()
}

// ln(e^a - e^b), or None when b >= a
fn ln_sub(a: f64, b: f64) -> Option<f64> {
    if b >= a {
        return None;
    }
    Some(a + (-(b - a).exp()).ln_1p())
}

/// Smallest y (to relative 1e-6) from which the leading q-term of Delta dominates.
pub fn y_max_certificate(wp: WeightPair) -> Result<f64> {
    let qe = DeltaQExpansion::new(wp, CERT_TERMS)?;
    y_max_from(&qe)
}

pub(crate) fn y_max_from(qe: &DeltaQExpansion) -> Result<f64> {
    let mut hi = 1.0;
    while !qe.dominance_holds(hi, CERT_TERMS) {
        hi *= 1.25;
        if hi > 1e4 {
            return Err(Error::NoCutoff(hi));
        }
    }
    let mut lo = hi / 1.25;
    if lo < 1.0 {
        return Ok(hi);
    }
    while hi - lo > 1e-6 * hi {
        let mid = 0.5 * (lo + hi);
        if qe.dominance_holds(mid, CERT_TERMS) {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    Ok(hi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::delta::eval_delta;
    use crate::eisenstein::UpperHalfPoint;

    fn sigma(k: u32, n: u64) -> f64 {
        (1..=n).filter(|d| n % d == 0).map(|d| (d as f64).powi(k as i32 - 1)).sum()
    }

    #[test]
    fn first_coefficients_direct() {
        // small weights: direct products of q-series in f64
        let wp = WeightPair::new(16, 14).unwrap();
        let qe = DeltaQExpansion::new(wp, 4).unwrap();
        let g = |k| gamma_k(k).unwrap().to_complex().re;
        let e = |k: u32, n: u64| g(k) * sigma(k, n);
        let a1 = e(16, 1) + e(14, 1) - e(30, 1);
        let a2 = e(16, 2) + e(14, 2) + e(16, 1) * e(14, 1) - e(30, 2);
        let c1 = qe.coefficient(1).to_complex().re;
        let c2 = qe.coefficient(2).to_complex().re;
        assert!(((c1 - a1) / a1).abs() < 1e-10, "{c1} {a1}");
        assert!(((c2 - a2) / a2).abs() < 1e-10, "{c2} {a2}");
    }

    #[test]
    fn side_value_matches_lattice() {
        let wp = WeightPair::new(40, 20).unwrap();
        let qe = DeltaQExpansion::new(wp, EVAL_TERMS).unwrap();
        for &y in &[1.2, 2.0, 3.5] {
            let z = UpperHalfPoint::on_side(y);
            let d = eval_delta(wp, z, 1e-14).unwrap().value.re;
            let c = qe.side_value(y).unwrap();
            assert_eq!(c.value.signum(), d.signum(), "y={y}");
            assert!(c.err < c.value.abs());
        }
    }

    #[test]
    fn cutoff_is_above_zeros() {
        let wp = WeightPair::new(56, 22).unwrap();
        let y = y_max_certificate(wp).unwrap();
        let side = crate::zeros::count_side_zeros(wp, &Default::default()).unwrap();
        let top = side.locations.iter().map(|z| z.at).fold(0.0, f64::max);
        assert!(y > top && y < 50.0, "{y} {top}");
        let qe = DeltaQExpansion::new(wp, CERT_TERMS).unwrap();
        assert!(qe.dominance_holds(2.0 * y, CERT_TERMS));
        assert!(!qe.dominance_holds(0.9 * y, CERT_TERMS));
        // above the cutoff the lattice values keep one sign
        let s0 = eval_delta(wp, UpperHalfPoint::on_side(y), 1e-14).unwrap().value.re.signum();
        for i in 1..20 {
            let yy = y + 0.1 * i as f64;
            let c = qe.side_value(yy).unwrap();
            assert_eq!(c.value.signum(), s0);
        }
    }
}
