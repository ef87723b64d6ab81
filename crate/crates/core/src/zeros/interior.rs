use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::qexp::DeltaQExpansion;
use crate::delta::{delta_scaled, WeightPair, ARC_EPS};
use crate::eisenstein::{Precision, UpperHalfPoint};
use crate::numerics::{wrap_phase, LogComplex};
use crate::Result;

/// Distance between the contour and the boundary of F.
pub const CONTOUR_INSET: f64 = 1e-5;
/// Interior zeros must lie this far from the boundary.
pub const OFF_BOUNDARY: f64 = 1e-6;
/// A Newton limit counts as a zero when |f| falls this far below its neighbourhood.
pub const MIN_RATIO: f64 = 1e-8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InteriorReport {
    /// zeros of Delta inside the inset contour; `None` if the phase could not be tracked
    pub winding: Option<i64>,
    pub contour_points: usize,
    pub y_top: f64,
    pub minima_checked: usize,
    /// Newton limits off the boundary where |z^l Delta| is negligible
    pub interior_zeros: Vec<(f64, f64)>,
}

struct LogF<'a> {
    wp: WeightPair,
    qe: &'a DeltaQExpansion,
}

impl LogF<'_> {
    /// ln(z^l Delta) with the log of an error bound.
    fn eval(&self, x: f64, y: f64) -> Result<(LogComplex, f64)> {
        let z = Complex64::new(x, y);
        if y >= 1.0 {
            if let Some((v, e)) = self.qe.eval_log(x, y) {
                if e < v.log_mag - 3.0 {
                    let zl = LogComplex::from_complex(z).powi(self.wp.l as i64);
                    return Ok((v * zl, e + zl.log_mag));
                }
            }
        }
        let c = delta_scaled(self.wp, UpperHalfPoint::new(x, y)?, ARC_EPS, Precision::Double)?;
        Ok((LogComplex::from_complex(c.value), c.err.ln()))
    }
}

type LogEval<'a> = dyn Fn(f64, f64) -> Result<(LogComplex, f64)> + 'a;

struct Walker<'a> {
    f: &'a LogEval<'a>,
    points: usize,
    ok: bool,
}

impl Walker<'_> {
    fn phase_at(&mut self, p: Complex64) -> Result<(f64, f64)> {
        self.points += 1;
        let (v, e) = (self.f)(p.re, p.im)?;
        if e > v.log_mag - 2.0f64.ln() * 3.0 {
            self.ok = false;
        }
        Ok((v.phase, v.log_mag))
    }

    // accumulated change of arg f along the path between parameters a and b
    fn walk(
        &mut self,
        path: &dyn Fn(f64) -> Complex64,
        a: (f64, f64, f64),
        b: (f64, f64, f64),
        depth: u32,
    ) -> Result<f64> {
        let d = wrap_phase(b.1 - a.1);
        if (d.abs() <= PI / 4.0 && (b.2 - a.2).abs() <= 1.0) || depth >= 40 {
            if depth >= 40 && d.abs() > PI / 2.0 {
                self.ok = false;
            }
            return Ok(d);
        }
        let s = 0.5 * (a.0 + b.0);
        let (ph, lm) = self.phase_at(path(s))?;
        let m = (s, ph, lm);
        Ok(self.walk(path, a, m, depth + 1)? + self.walk(path, m, b, depth + 1)?)
    }

    fn segment(&mut self, path: &dyn Fn(f64) -> Complex64, n: usize) -> Result<f64> {
        let mut total = 0.0;
        let (p0, m0) = self.phase_at(path(0.0))?;
        let mut prev = (0.0, p0, m0);
        for i in 1..=n {
            let s = i as f64 / n as f64;
            let (ph, lm) = self.phase_at(path(s))?;
            let cur = (s, ph, lm);
            total += self.walk(path, prev, cur, 0)?;
            prev = cur;
        }
        Ok(total)
    }
}

fn winding(wp: WeightPair, qe: &DeltaQExpansion, y_top: f64) -> Result<(Option<i64>, usize)> {
    let dl = CONTOUR_INSET;
    let xr = 0.5 - dl;
    let yc = ((1.0 + dl).powi(2) - xr * xr).sqrt();
    let th_r = yc.atan2(xr);
    let th_bot = (yc / xr).atan();
    let th_top = (y_top / xr).atan();
    let n = 4 * wp.w() as usize;
    let lf = LogF { wp, qe };
    let ev = |x: f64, y: f64| lf.eval(x, y);
    let mut wk = Walker { f: &ev, points: 0, ok: true };
    let right = move |s: f64| Complex64::new(xr, xr * (th_bot + (th_top - th_bot) * s).tan());
    let top = move |s: f64| Complex64::new(xr - 2.0 * xr * s, y_top);
    let left = move |s: f64| Complex64::new(-xr, xr * (th_top + (th_bot - th_top) * s).tan());
    let arc = move |s: f64| Complex64::from_polar(1.0 + dl, (PI - th_r) + (2.0 * th_r - PI) * s);
    let mut total = wk.segment(&right, n)?;
    total += wk.segment(&top, 64)?;
    total += wk.segment(&left, n)?;
    total += wk.segment(&arc, n)?;
    let w = total / (2.0 * PI);
    let r = w.round();
    let ok = wk.ok && (w - r).abs() < 0.1;
    Ok((if ok { Some(r as i64) } else { None }, wk.points))
}

fn boundary_distance(z: Complex64) -> f64 {
    (0.5 - z.re.abs()).min(z.norm() - 1.0)
}

fn newton(f: &LogF, mut z: Complex64) -> Result<Option<Complex64>> {
    for _ in 0..40 {
        if z.im < 0.8 || z.re.abs() > 0.6 || z.norm() < 0.9 {
            return Ok(None);
        }
        let h = 1e-6 * z.im.max(1.0);
        let (a, _) = f.eval(z.re + h, z.im)?;
        let (b, _) = f.eval(z.re - h, z.im)?;
        let dlog = Complex64::new(a.log_mag - b.log_mag, wrap_phase(a.phase - b.phase)) / (2.0 * h);
        if dlog.norm() == 0.0 {
            return Ok(None);
        }
        let step = 1.0 / dlog;
        let step = if step.norm() > 0.05 { step * (0.05 / step.norm()) } else { step };
        z -= step;
        if step.norm() < 1e-13 * z.norm() {
            return Ok(Some(z));
        }
    }
    Ok(Some(z))
}

/// Searches the interior of F below `y_top` for zeros of Delta: an argument-principle count
/// on a contour inset from the boundary, and Newton polishing from grid minima of |z^l Delta|.
pub fn interior_hunt(wp: WeightPair, y_top: f64) -> Result<InteriorReport> {
    let qe = DeltaQExpansion::new(wp, super::EVAL_TERMS)?;
    let (w, contour_points) = winding(wp, &qe, y_top)?;
    let f = LogF { wp, qe: &qe };
    let (nx, ny) = (24usize, 40usize);
    let mut grid = vec![vec![0.0; ny]; nx];
    let mut pts = vec![vec![Complex64::new(0.0, 0.0); ny]; nx];
    for (i, row) in grid.iter_mut().enumerate() {
        let x = -0.5 + (i as f64 + 0.5) / nx as f64;
        let ylo = (1.0 - x * x).sqrt();
        for (j, cell) in row.iter_mut().enumerate() {
            let v = (j as f64 + 0.5) / ny as f64;
            let y = ylo * (y_top / ylo).powf(v);
            pts[i][j] = Complex64::new(x, y);
            *cell = f.eval(x, y)?.0.log_mag;
        }
    }
    let mut checked = 0;
    let mut found = vec![];
    for i in 1..nx - 1 {
        for j in 1..ny - 1 {
            let c = grid[i][j];
            let mut is_min = true;
            let mut hi = c;
            for di in [-1i64, 0, 1] {
                for dj in [-1i64, 0, 1] {
                    if di == 0 && dj == 0 {
                        continue;
                    }
                    let g = grid[(i as i64 + di) as usize][(j as i64 + dj) as usize];
                    is_min &= g > c;
                    hi = hi.max(g);
                }
            }
            if !is_min {
                continue;
            }
            checked += 1;
            if let Some(z) = newton(&f, pts[i][j])? {
                if z.re.abs() <= 0.5 && z.norm() >= 1.0 && boundary_distance(z) > OFF_BOUNDARY {
                    let lm = f.eval(z.re, z.im)?.0.log_mag;
                    if lm < hi + MIN_RATIO.ln() && !found.iter().any(|p: &(f64, f64)| (p.0 - z.re).abs() + (p.1 - z.im).abs() < 1e-6) {
                        found.push((z.re, z.im));
                    }
                }
            }
        }
    }
    Ok(InteriorReport { winding: w, contour_points, y_top, minima_checked: checked, interior_zeros: found })
}
