use std::f64::consts::PI;

use crate::delta::WeightPair;

/// Arc sample points theta_m = 2 m pi / (k - l) in (pi/3, pi/2], i.e. integers
/// m in (2n + j/6, 3n + j/4]. Returns (m, theta_m); empty when k = l.
pub fn arc_sample_points(wp: WeightPair) -> Vec<(u32, f64)> {
    let d = wp.k - wp.l;
    if d == 0 {
        return vec![];
    }
    (1..=d / 4)
        .filter(|&m| 6 * m > d && 4 * m <= d)
        .map(|m| (m, 2.0 * m as f64 * PI / d as f64))
        .collect()
}

/// Range of d in m = 2q + d for the side sample points of weight l.
pub fn side_d_range(l: u32) -> std::ops::RangeInclusive<u32> {
    let q = l / 6;
    match l % 6 {
        0 => 1..=q.saturating_sub(1),
        2 => 1..=q,
        _ => 2..=q + 1,
    }
}

/// Side sample points theta_m = pi m / l in (pi/3, pi/2) with m = 2q + d. Returns (d, theta).
pub fn side_sample_points(l: u32) -> Vec<(u32, f64)> {
    let q = l / 6;
    side_d_range(l).map(|d| (d, PI * (2 * q + d) as f64 / l as f64)).collect()
}
