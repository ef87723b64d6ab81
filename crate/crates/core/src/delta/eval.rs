use num_complex::Complex64;

use super::WeightPair;
use crate::eisenstein::{lattice_g, Precision, UpperHalfPoint};
use crate::numerics::{Certified, EPS};
use crate::{Error, Result};

/// Accuracy of the G_k sums used by the boundary evaluators.
pub const ARC_EPS: f64 = 1e-14;

fn cpow(z: Complex64, n: i64) -> Complex64 {
    if n >= 0 {
        crate::eisenstein::cpowi(z, n as u32)
    } else {
        crate::eisenstein::cpowi(Complex64::new(1.0, 0.0) / z, (-n) as u32)
    }
}

fn triple(wp: WeightPair, z: UpperHalfPoint, eps: f64, prec: Precision) -> Result<[Certified<Complex64>; 3]> {
    let v = lattice_g(&[wp.k, wp.l, wp.w()], z, eps, prec)?;
    Ok([v[0], v[1], v[2]])
}

/// Delta_{k,l}(z) = E_k E_l - E_{k+l} with an absolute error bound. `eps` is the truncation
/// target of each G_m = z^m (E_m - 1).
pub fn eval_delta(wp: WeightPair, z: UpperHalfPoint, eps: f64) -> Result<Certified<Complex64>> {
    let [gk, gl, gw] = triple(wp, z, eps, Precision::Double)?;
    let zc = z.z();
    let r = z.r();
    let (k, l, w) = (wp.k as i64, wp.l as i64, wp.w() as i64);
    let value = gk.value * cpow(zc, -k) + gl.value * cpow(zc, -l) + (gk.value * gl.value - gw.value) * cpow(zc, -w);
    let prod_err = gk.err * gl.value.norm() + gl.err * gk.value.norm() + gk.err * gl.err + gw.err;
    let err = gk.err * r.powi(-k as i32) + gl.err * r.powi(-l as i32) + prod_err * r.powi(-w as i32)
        + 8.0 * EPS * (gk.value.norm() + gl.value.norm() + gk.value.norm() * gl.value.norm() + gw.value.norm());
    Ok(Certified { value, err })
}

/// `|z|^k H_l + |z|^l H_k + H_k H_l - H_{k+l}`, which equals |z|^{k+l} Delta.
pub fn h_combination(wp: WeightPair, z: UpperHalfPoint, eps: f64) -> Result<Complex64> {
    let [gk, gl, gw] = triple(wp, z, eps, Precision::Double)?;
    let u = z.z().conj() / z.r();
    let hk = cpow(u, wp.k as i64) * gk.value;
    let hl = cpow(u, wp.l as i64) * gl.value;
    let hw = cpow(u, wp.w() as i64) * gw.value;
    let r = z.r();
    Ok(r.powi(wp.k as i32) * hl + r.powi(wp.l as i32) * hk + hk * hl - hw)
}

/// `z^l Delta = G_l + G_k z^{l-k} + (G_k G_l - G_{k+l}) z^{-k}`: holomorphic, of size O(1) in
/// the fundamental domain, and of modulus |Delta| on the arc.
pub fn delta_scaled(wp: WeightPair, z: UpperHalfPoint, eps: f64, prec: Precision) -> Result<Certified<Complex64>> {
    let [gk, gl, gw] = triple(wp, z, eps, prec)?;
    let zc = z.z();
    let r = z.r();
    let (k, l) = (wp.k as i64, wp.l as i64);
    let value = gl.value + gk.value * cpow(zc, l - k) + (gk.value * gl.value - gw.value) * cpow(zc, -k);
    let prod_err = gk.err * gl.value.norm() + gl.err * gk.value.norm() + gk.err * gl.err + gw.err;
    let round = 8.0 * EPS;
    let err = gl.err + gk.err * r.powi((l - k) as i32) + prod_err * r.powi(-k as i32)
        + round * (gl.value.norm() + gk.value.norm() + gk.value.norm() * gl.value.norm() + gw.value.norm());
    Ok(Certified { value, err })
}

/// F_k F_l - F_{k+l} at e^{i theta}, where F_m(t) = e^{imt/2} E_m(e^{it}) is real.
pub fn arc_certified(wp: WeightPair, theta: f64, eps: f64, prec: Precision) -> Result<Certified<f64>> {
    let [gk, gl, gw] = triple(wp, UpperHalfPoint::on_arc(theta), eps, prec)?;
    let f = |m: u32, g: Complex64| {
        let h = m as f64 * theta / 2.0;
        Complex64::from_polar(1.0, h) + Complex64::from_polar(1.0, -h) * g
    };
    let fk = f(wp.k, gk.value);
    let fl = f(wp.l, gl.value);
    let fw = f(wp.w(), gw.value);
    let v = fk * fl - fw;
    let round = 8.0 * EPS;
    let err = gk.err * fl.norm() + gl.err * fk.norm() + gk.err * gl.err + gw.err
        + round * (fk.norm() * fl.norm() + fw.norm() + 1.0);
    if v.im.abs() > 1e-9_f64.max(10.0 * err) {
        return Err(Error::NotReal { residue: v.im.abs(), at: theta });
    }
    Ok(Certified { value: v.re, err })
}

pub fn arc_real(wp: WeightPair, theta: f64) -> Result<f64> {
    Ok(arc_certified(wp, theta, ARC_EPS, Precision::Double)?.value)
}

/// `|z|^l Delta(1/2 + iy) = H_l + H_k |z|^{l-k} + (H_k H_l - H_{k+l}) |z|^{-k}`, real on the side.
pub fn side_certified(wp: WeightPair, y: f64, eps: f64, prec: Precision) -> Result<Certified<f64>> {
    let z = UpperHalfPoint::on_side(y);
    let [gk, gl, gw] = triple(wp, z, eps, prec)?;
    let r = z.r();
    let u = z.z().conj() / r;
    let hk = cpow(u, wp.k as i64) * gk.value;
    let hl = cpow(u, wp.l as i64) * gl.value;
    let hw = cpow(u, wp.w() as i64) * gw.value;
    let (k, l) = (wp.k as i32, wp.l as i32);
    let v = hl + hk * r.powi(l - k) + (hk * hl - hw) * r.powi(-k);
    let prod_err = gk.err * gl.value.norm() + gl.err * gk.value.norm() + gk.err * gl.err + gw.err;
    // rounding of the phases e^{-i m theta} grows with m
    let round = (8.0 + 2.0 * wp.w() as f64) * EPS;
    let err = gl.err + gk.err * r.powi(l - k) + prod_err * r.powi(-k)
        + round * (hl.norm() + hk.norm() + hk.norm() * hl.norm() + hw.norm());
    if v.im.abs() > 1e-9_f64.max(10.0 * err) {
        return Err(Error::NotReal { residue: v.im.abs(), at: y });
    }
    Ok(Certified { value: v.re, err })
}

pub fn side_real(wp: WeightPair, y: f64) -> Result<f64> {
    Ok(side_certified(wp, y, ARC_EPS, Precision::Double)?.value)
}
