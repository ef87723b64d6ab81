use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::qexp::{y_max_from, DeltaQExpansion, EVAL_TERMS};
use super::samples::{arc_sample_points, side_sample_points};
use super::signs::{count_sign_changes, refine_bracket, ArcEvaluator, Boundary, SideEvaluator, ZeroLocation};
use crate::delta::{WeightPair, ARC_EPS};
use crate::{Error, Result};

/// Zeros closer than this to i or rho are attributed to the trivial orders there.
pub const ENDPOINT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ScanConfig {
    /// grid points per unit of total weight (16 by default)
    pub oversample: u32,
    pub bracket_width: f64,
    pub eps: f64,
}

impl Default for ScanConfig {
    fn default() -> Self {
        ScanConfig { oversample: 16, bracket_width: 1e-12, eps: ARC_EPS }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundaryScan {
    pub count: usize,
    pub locations: Vec<ZeroLocation>,
    /// sign changes at i or rho, which belong to the trivial orders
    pub endpoint_zeros: Vec<ZeroLocation>,
    /// grid points whose sign could not be certified
    pub uncertain: Vec<f64>,
    /// undecided points with equal signs on both sides (a possible even-order zero)
    pub unresolved: Vec<f64>,
    pub grid_points: usize,
    pub y_max: Option<f64>,
}

fn merge(mut pts: Vec<f64>, lo: f64, hi: f64) -> Vec<f64> {
    pts.retain(|t| *t > lo && *t < hi);
    pts.sort_by(|a, b| a.partial_cmp(b).unwrap());
    pts.dedup_by(|a, b| (*a - *b).abs() <= 1e-13 * b.abs().max(1.0));
    pts
}

fn unresolved(signs: &[Option<i8>], pts: &[f64]) -> Vec<f64> {
    let mut out = vec![];
    for (i, s) in signs.iter().enumerate() {
        if s.is_some() {
            continue;
        }
        let prev = signs[..i].iter().rev().find_map(|s| *s);
        let next = signs[i + 1..].iter().find_map(|s| *s);
        if prev.is_none() || next.is_none() || prev == next {
            out.push(pts[i]);
        }
    }
    out
}

fn scan_with<E: super::signs::RealEvaluator>(
    ev: &E,
    boundary: Boundary,
    pts: Vec<f64>,
    endpoints: &[f64],
    cfg: &ScanConfig,
) -> Result<BoundaryScan> {
    let s = count_sign_changes(ev, &pts)?;
    let mut locations = vec![];
    let mut endpoint_zeros = vec![];
    for &(lo, hi, sg) in &s.brackets {
        let z = refine_bracket(ev, boundary, lo, hi, sg, cfg.bracket_width)?;
        if endpoints.iter().any(|e| (z.at - e).abs() < ENDPOINT_TOL) {
            endpoint_zeros.push(z);
        } else {
            locations.push(z);
        }
    }
    Ok(BoundaryScan {
        count: locations.len(),
        locations,
        endpoint_zeros,
        unresolved: unresolved(&s.signs, &pts),
        uncertain: s.uncertain,
        grid_points: pts.len(),
        y_max: None,
    })
}

fn check(wp: WeightPair) -> Result<()> {
    if wp.l < 14 {
        return Err(Error::InvalidPair { k: wp.k, l: wp.l, reason: "scans need l >= 14" });
    }
    Ok(())
}

/// Zeros of Delta on the open arc theta in (pi/3, pi/2), found as sign changes of
/// F_k F_l - F_{k+l} on a uniform grid of oversample * (k + l) points plus the sample points.
pub fn count_arc_zeros(wp: WeightPair, cfg: &ScanConfig) -> Result<BoundaryScan> {
    check(wp)?;
    let (a, b) = (PI / 3.0, PI / 2.0);
    let n = (cfg.oversample * wp.w()).max(8);
    let mut pts: Vec<f64> = (1..n).map(|i| a + (b - a) * i as f64 / n as f64).collect();
    pts.extend(arc_sample_points(wp).iter().map(|p| p.1));
    let pts = merge(pts, a, b);
    let ev = ArcEvaluator { wp, eps: cfg.eps };
    scan_with(&ev, Boundary::Arc, pts, &[a, b], cfg)
}

/// Grid on the side y in (sqrt(3)/2, y_max): oversample * l points uniform in theta up to
/// y = k^{2/5}, 8 points between consecutive y_N = k/(2 pi N), oversample * (k + l) points
/// uniform in theta up to y_max, and the side sample points.
pub fn side_scan_grid(wp: WeightPair, y_max: f64, oversample: u32) -> Vec<f64> {
    let y0 = 3f64.sqrt() / 2.0;
    let kf = wp.k as f64;
    let th0 = PI / 3.0;
    let uniform = |n: u32, y_top: f64, out: &mut Vec<f64>| {
        let th1 = (2.0 * y_top).atan();
        if th1 <= th0 {
            return;
        }
        for i in 1..=n {
            out.push((th0 + (th1 - th0) * i as f64 / n as f64).tan() / 2.0);
        }
    };
    let mut pts = vec![];
    uniform(oversample * wp.l, kf.powf(0.4), &mut pts);
    let big_n = (kf / (2.0 * PI * kf.powf(0.4))).floor() as u32;
    for nn in 1..=big_n {
        let hi = kf / (2.0 * PI * nn as f64);
        let lo = kf / (2.0 * PI * (nn + 1) as f64);
        for i in 1..=8 {
            pts.push(lo + (hi - lo) * i as f64 / 9.0);
        }
    }
    uniform(oversample * wp.w(), y_max, &mut pts);
    pts.extend(side_sample_points(wp.l).iter().map(|p| p.1.tan() / 2.0));
    merge(pts, y0, y_max)
}

/// Zeros of Delta on the side x = 1/2, sqrt(3)/2 < y < y_max, where y_max is certified by
/// dominance of the leading q-expansion term (no zeros lie above it).
pub fn count_side_zeros(wp: WeightPair, cfg: &ScanConfig) -> Result<BoundaryScan> {
    check(wp)?;
    let qe = DeltaQExpansion::new(wp, EVAL_TERMS)?;
    let y_max = y_max_from(&qe)?;
    let pts = side_scan_grid(wp, y_max, cfg.oversample);
    let mut ev = SideEvaluator::with_expansion(wp, qe);
    ev.eps = cfg.eps;
    let mut s = scan_with(&ev, Boundary::Side, pts, &[3f64.sqrt() / 2.0], cfg)?;
    s.y_max = Some(y_max);
    Ok(s)
}
