use anyhow::Result;
use serde::{Deserialize, Serialize};

use cuspzeros::delta::WeightPair;
use cuspzeros::eisenstein::{gk, gk_small_y, gk_theta, phi0, phi1, UpperHalfPoint, C_ENV};
use cuspzeros::zeros::{count_arc_zeros, count_side_zeros, Boundary, ScanConfig};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhiRow {
    pub r: f64,
    pub phi0: f64,
    pub phi1: f64,
}

/// Phi_0 and Phi_1 on r in [0.05, 10].
pub fn phi_data(points: usize) -> Result<Vec<PhiRow>> {
    (0..points)
        .map(|i| {
            let r = 0.05 + (10.0 - 0.05) * i as f64 / (points - 1) as f64;
            Ok(PhiRow { r, phi0: phi0(r)?, phi1: phi1(r)? })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroRow {
    pub k: u32,
    pub l: u32,
    pub boundary: Boundary,
    /// theta on the arc, y on the side
    pub at: f64,
    pub lo: f64,
    pub hi: f64,
}

pub fn zeros_data(wp: WeightPair, sc: &ScanConfig) -> Result<Vec<ZeroRow>> {
    let mut rows = vec![];
    for s in [count_arc_zeros(wp, sc)?, count_side_zeros(wp, sc)?] {
        for z in s.locations {
            rows.push(ZeroRow { k: wp.k, l: wp.l, boundary: z.boundary, at: z.at, lo: z.lo, hi: z.hi });
        }
    }
    Ok(rows)
}

/// Errors of the small-y and theta main terms of G_k against the lattice sum at x + iy.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RegimeRow {
    pub k: u32,
    pub x: f64,
    pub y: f64,
    pub small_y_error: f64,
    pub theta_error: f64,
    pub small_y_envelope: f64,
    pub theta_envelope: f64,
}

pub fn regimes_data(k: u32, x: f64, points: usize) -> Result<Vec<RegimeRow>> {
    let kf = k as f64;
    let (y0, y1) = (1.0f64, kf.powf(2.0 / 3.0));
    (0..points)
        .map(|i| {
            let y = y0 * (y1 / y0).powf(i as f64 / (points - 1) as f64);
            let z = UpperHalfPoint::new(x, y)?;
            let truth = gk(k, z)?;
            Ok(RegimeRow {
                k,
                x,
                y,
                small_y_error: (gk_small_y(k, z) - truth).norm(),
                theta_error: (gk_theta(k, z) - truth).norm(),
                small_y_envelope: C_ENV * (-kf.powf(1.0 / 6.0)).exp(),
                theta_envelope: C_ENV * y / kf.powf(2.0 / 3.0),
            })
        })
        .collect()
}
