use std::f64::consts::PI;

use num_complex::Complex64;

use super::UpperHalfPoint;
use crate::numerics::{Certified, Dd, DdComplex, NeumaierComplex, EPS};
use crate::{Error, Result};

/// Largest admissible truncation radius |cz + d| <= R.
pub const RADIUS_CAP: f64 = 1e4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Precision {
    Double,
    DoubleDouble,
}

pub(crate) fn check_weight(k: u32) -> Result<()> {
    if k % 2 == 1 {
        return Err(Error::OddWeight(k as i64));
    }
    if k < 4 {
        return Err(Error::WeightRange { k: k as i64, lo: 4, hi: i64::MAX });
    }
    Ok(())
}

#[inline]
pub fn cpowi(z: Complex64, mut n: u32) -> Complex64 {
    let mut base = z;
    let mut acc = Complex64::new(1.0, 0.0);
    while n > 0 {
        if n & 1 == 1 {
            acc *= base;
        }
        n >>= 1;
        if n > 0 {
            base *= base;
        }
    }
    acc
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

// Each lattice point w = cz + d owns the cell w + {sz + t : |s|, |t| <= 1/2}, of area y and
// radius at most delta. Comparing the sum over |w| > R with the integral over the cells
// gives, for s = R - 2 delta and the half-lattice c >= 1,
//   sum |w|^{-k} <= (pi / y) [ s^{2-k}/(k-2) + delta s^{1-k}/(k-1) ].
fn delta_of(z: Complex64) -> f64 {
    0.5 * (z + 1.0).norm().max((z - 1.0).norm())
}

fn ln_tail_g(k: u32, z: Complex64, s: f64) -> f64 {
    let kf = k as f64;
    let d = delta_of(z);
    kf * z.norm().ln() + (PI / z.im).ln() + (2.0 - kf) * s.ln() - (kf - 2.0).ln()
        + (d * (kf - 2.0) / ((kf - 1.0) * s)).ln_1p()
}

/// Radius R such that the truncation error of `z^k (E_k - 1)` (in absolute terms) is at
/// most `eps` for weight `k`.
pub fn lattice_radius(k: u32, z: UpperHalfPoint, eps: f64) -> Result<f64> {
    check_weight(k)?;
    let zc = z.z();
    let kf = k as f64;
    let d = delta_of(zc);
    let le = eps.ln();
    let ln_s0 = (kf * zc.norm().ln() + (PI / z.y).ln() - (kf - 2.0).ln() - le) / (kf - 2.0);
    let mut s = ln_s0.exp().max(d).max(1e-3);
    let mut guard = 0;
    while ln_tail_g(k, zc, s) > le {
        s *= 1.01;
        guard += 1;
        if guard > 10_000 || s > RADIUS_CAP {
            break;
        }
    }
    let r = s + 2.0 * d;
    if r > RADIUS_CAP || !r.is_finite() {
        return Err(Error::EpsTooSmall { eps, radius: r });
    }
    Ok(r)
}

/// `G_k(z) = z^k (E_k(z) - 1) = sum_{c >= 1, (c,d) = 1} (z / (cz + d))^k` for several weights
/// in one pass. The truncation radius is set by the smallest weight so that its tail is
/// below `eps`; each returned error bound covers truncation and rounding.
pub fn lattice_g(weights: &[u32], z: UpperHalfPoint, eps: f64, prec: Precision) -> Result<Vec<Certified<Complex64>>> {
    if !(z.y > 0.0) {
        return Err(Error::NotInUpperHalfPlane(z.y));
    }
    for &k in weights {
        check_weight(k)?;
    }
    if weights.is_empty() {
        return Ok(vec![]);
    }
    let kmin = *weights.iter().min().unwrap();
    let r = lattice_radius(kmin, z, eps)?;
    let s = r - 2.0 * delta_of(z.z());
    let tails: Vec<f64> = weights.iter().map(|&k| ln_tail_g(k, z.z(), s).exp()).collect();
    let (sums, abs) = match prec {
        Precision::Double => sum_double(weights, z, r),
        Precision::DoubleDouble => sum_dd(weights, z, r),
    };
    Ok(weights
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let rel = match prec {
                Precision::Double => (3.0 * k as f64 + 2.0 * (k as f64).log2() + 8.0) * EPS,
                Precision::DoubleDouble => (3.0 * k as f64 + 64.0) * EPS * EPS * 4.0 + 4.0 * EPS * EPS,
            };
            let round = rel * abs[i] + 2.0 * EPS * sums[i].norm() * if prec == Precision::Double { 1.0 } else { EPS };
            Certified { value: sums[i], err: tails[i] + round }
        })
        .collect())
}

fn for_each_point(z: UpperHalfPoint, r: f64, mut f: impl FnMut(i64, i64)) {
    let cmax = (r / z.y).floor() as i64;
    for c in 1..=cmax {
        let cy = c as f64 * z.y;
        let h2 = r * r - cy * cy;
        if h2 < 0.0 {
            continue;
        }
        let h = h2.sqrt();
        let cx = c as f64 * z.x;
        let dlo = (-cx - h).ceil() as i64;
        let dhi = (-cx + h).floor() as i64;
        for d in dlo..=dhi {
            if gcd(c as u64, d.unsigned_abs()) != 1 {
                continue;
            }
            f(c, d);
        }
    }
}

fn sum_double(weights: &[u32], z: UpperHalfPoint, r: f64) -> (Vec<Complex64>, Vec<f64>) {
    let zc = z.z();
    let mut acc = vec![NeumaierComplex::default(); weights.len()];
    let mut abs = vec![0.0; weights.len()];
    for_each_point(z, r, |c, d| {
        let w = zc / Complex64::new(c as f64 * z.x + d as f64, c as f64 * z.y);
        for (i, &k) in weights.iter().enumerate() {
            let t = cpowi(w, k);
            acc[i].add(t);
            abs[i] += t.norm();
        }
    });
    (acc.iter().map(|a| a.value()).collect(), abs)
}

fn sum_dd(weights: &[u32], z: UpperHalfPoint, r: f64) -> (Vec<Complex64>, Vec<f64>) {
    let zd = DdComplex::from_c64(z.z());
    let mut acc = vec![DdComplex::default(); weights.len()];
    let mut abs = vec![0.0; weights.len()];
    for_each_point(z, r, |c, d| {
        let cf = Dd::new(c as f64);
        let den = DdComplex::new(cf * Dd::new(z.x) + Dd::new(d as f64), cf * Dd::new(z.y));
        let w = zd.div(den);
        for (i, &k) in weights.iter().enumerate() {
            let t = w.powi(k);
            acc[i] = acc[i] + t;
            abs[i] += t.to_c64().norm();
        }
    });
    (acc.iter().map(|a| a.to_c64()).collect(), abs)
}

/// E_k(z) from the lattice sum, with an absolute error bound (truncation plus rounding).
pub fn eval_ek_lattice(k: u32, z: UpperHalfPoint, eps: f64) -> Result<(Complex64, f64)> {
    check_weight(k)?;
    if !(eps >= 1e-15) {
        return Err(Error::InvalidArgument(format!("eps = {eps:e} below 1e-15")));
    }
    let scale = (k as f64 * z.r().ln()).exp();
    let eps_g = (eps * scale).min(1e300);
    let g = lattice_g(&[k], z, eps_g, Precision::Double)?[0];
    let zinv_k = cpowi(Complex64::new(1.0, 0.0) / z.z(), k);
    Ok((Complex64::new(1.0, 0.0) + g.value * zinv_k, g.err / scale))
}
