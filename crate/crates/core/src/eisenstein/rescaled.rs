

use num_complex::Complex64;

use super::lattice::{cpowi, lattice_g, Precision};
use super::UpperHalfPoint;
use crate::numerics::Certified;
use crate::{Error, Result};

/// Default absolute accuracy of G_k used by the rescaled evaluators.
pub const DEFAULT_EPS: f64 = 1e-14;

/// G_k(z) = z^k (E_k(z) - 1).
pub fn gk(k: u32, z: UpperHalfPoint) -> Result<Complex64> {
    Ok(lattice_g(&[k], z, DEFAULT_EPS, Precision::Double)?[0].value)
}

/// H_k(z) = |z|^k (E_k(z) - 1) = (|z|/z)^k G_k(z).
pub fn hk(k: u32, z: UpperHalfPoint) -> Result<Complex64> {
    let u = z.z().conj() / z.r();
    Ok(cpowi(u, k) * gk(k, z)?)
}

/// F_k(theta) = e^{ik theta/2} E_k(e^{i theta}) = e^{ik theta/2} + e^{-ik theta/2} G_k(e^{i theta}),
/// which is real on the unit circle.
pub fn fk_certified(k: u32, theta: f64) -> Result<Certified<f64>> {
    let g = lattice_g(&[k], UpperHalfPoint::on_arc(theta), DEFAULT_EPS, Precision::Double)?[0];
    let half = k as f64 * theta / 2.0;
    let f = Complex64::from_polar(1.0, half) + Complex64::from_polar(1.0, -half) * g.value;
    let tol = 1e-9_f64.max(10.0 * g.err);
    if f.im.abs() > tol {
        return Err(Error::NotReal { residue: f.im.abs(), at: theta });
    }
    Ok(Certified { value: f.re, err: g.err + 4.0 * f64::EPSILON * (1.0 + g.value.norm()) })
}

pub fn fk(k: u32, theta: f64) -> Result<f64> {
    Ok(fk_certified(k, theta)?.value)
}

/// `2cos(k theta/2) + (2cos(theta/2))^{-k} + (2i sin(theta/2))^{-k}`; for even k the last
/// term is `(-1)^{k/2} (2 sin(theta/2))^{-k}`.
pub fn fk_main_terms(k: u32, theta: f64) -> f64 {
    let kf = k as f64;
    let sgn = if (k / 2) % 2 == 0 { 1.0 } else { -1.0 };
    2.0 * (kf * theta / 2.0).cos() + (2.0 * (theta / 2.0).cos()).powf(-kf) + sgn * (2.0 * (theta / 2.0).sin()).powf(-kf)
}

/// Bound on |F_k - main terms| on [pi/3, pi/2].
pub fn rk_tail_bound(k: u32) -> f64 {
    let kf = k as f64;
    4.0 * 2.5f64.powf(-kf / 2.0) + 20.0 * 2f64.sqrt() / (kf - 3.0) * 4.5f64.powf((3.0 - kf) / 2.0)
}

#[allow(dead_code)]
pub(crate) fn arc_grid(n: usize, lo: f64, hi: f64) -> impl Iterator<Item = f64> {
    (0..n).map(move |i| lo + (hi - lo) * i as f64 / (n - 1) as f64)
}
