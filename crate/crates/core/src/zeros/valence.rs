use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::delta::{delta_scaled, WeightPair};
use crate::eisenstein::{Precision, UpperHalfPoint};
use crate::Result;

const CIRCLE_POINTS: usize = 64;
const RADIUS: f64 = 0.05;

/// Taylor coefficients of z^l Delta around a point, from a Cauchy integral.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderProbe {
    /// |c_n| r^n for n = 0..len
    pub scaled_coeffs: Vec<f64>,
    /// bound on the evaluation error of each scaled coefficient
    pub err: f64,
    /// first n whose coefficient is clearly nonzero
    pub order: Option<u32>,
}

/// Order of vanishing of Delta at `z0` (z^l is a unit there). `eps` is the truncation target
/// of the G sums; weight-4 pairs need eps around 1e-6.
pub fn order_at(wp: WeightPair, z0: UpperHalfPoint, max_order: u32, eps: f64) -> Result<OrderProbe> {
    let c0 = z0.z();
    let mut vals = Vec::with_capacity(CIRCLE_POINTS);
    let mut err: f64 = 0.0;
    let mut scale: f64 = 0.0;
    for j in 0..CIRCLE_POINTS {
        let t = 2.0 * PI * j as f64 / CIRCLE_POINTS as f64;
        let z = c0 + Complex64::from_polar(RADIUS, t);
        let v = delta_scaled(wp, UpperHalfPoint::new(z.re, z.im)?, eps, Precision::Double)?;
        err = err.max(v.err);
        scale = scale.max(v.value.norm());
        vals.push(v.value);
    }
    let mut scaled = vec![];
    let mut order = None;
    for n in 0..=max_order {
        let mut s = Complex64::new(0.0, 0.0);
        for (j, v) in vals.iter().enumerate() {
            let t = 2.0 * PI * (j * n as usize) as f64 / CIRCLE_POINTS as f64;
            s += v * Complex64::from_polar(1.0, -t);
        }
        let c = s.norm() / CIRCLE_POINTS as f64;
        scaled.push(c);
        if order.is_none() && c > 100.0 * err + 1e-10 * scale {
            order = Some(n);
        }
    }
    Ok(OrderProbe { scaled_coeffs: scaled, err, order })
}
