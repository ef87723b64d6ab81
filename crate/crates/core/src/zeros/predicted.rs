use serde::{Deserialize, Serialize};

use crate::delta::WeightPair;
use crate::{Error, Result};

/// The counts predicted by the sample-point analysis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PredictedCounts {
    /// sign changes forced between arc sample points (n >= 1)
    pub n_arc: i64,
    /// lower bound for A including the corner analysis (n >= 1)
    pub n_prime: i64,
    /// sign changes forced between side sample points
    pub t_side: i64,
    /// lower bound for B once k >= sp
    pub t_prime: i64,
    /// stabilisation point sp_j(l) (a real number)
    pub sp: f64,
    pub total_nontrivial: i64,
    /// predicted A and B (n = 0 uses the special-case values)
    pub a: i64,
    pub b: i64,
}

/// Number of zeros of a weight w cusp form in the fundamental domain other than i, rho, and
/// the cusp, when the orders there are minimal.
pub fn total_nontrivial(w: u32) -> i64 {
    let base = (w / 12) as i64;
    if w % 12 == 2 {
        base - 2
    } else {
        base - 1
    }
}

/// Minimal orders (v_i, v_rho) forced by w mod 12.
pub fn trivial_orders(w: u32) -> Result<(u32, u32)> {
    if w % 2 == 1 {
        return Err(Error::OddWeight(w as i64));
    }
    Ok(match w % 12 {
        0 => (0, 0),
        2 => (1, 2),
        4 => (0, 1),
        6 => (1, 0),
        8 => (0, 2),
        _ => (1, 1),
    })
}

/// sp_j(l) for k - l = 12n + j.
pub fn stabilization_point(l: u32, j: u32) -> f64 {
    let lf = l as f64;
    match (l % 6, j % 6) {
        (0, 2) => (lf - 1.0 + (3.0 * lf * lf - 1.0).sqrt()) / 2.0,
        (4, 2) => 2.0 * lf,
        (4, 0) => (4.0 * lf - 1.0 + (12.0 * lf * lf - 12.0 * lf + 1.0).sqrt()) / 2.0,
        _ => lf,
    }
}

pub fn predicted_counts(wp: WeightPair) -> PredictedCounts {
    let (n, j) = (wp.n() as i64, wp.j());
    let q = (wp.l / 6) as i64;
    let a6 = wp.l % 6;
    let n_arc = if matches!(j, 0 | 2 | 6) { n - 1 } else { n };
    let n_prime = match (j, a6) {
        (0, 4) | (2, 0) | (2, 4) | (6, 4) => n - 1,
        (8, 2) => n + 1,
        _ => n,
    };
    let t_side = if a6 == 0 { q - 2 } else { q - 1 };
    let t_prime = if a6 == 4 { q } else { q - 1 };
    let sp = stabilization_point(wp.l, j);
    let total = total_nontrivial(wp.w());
    let a = if n == 0 {
        (j == 8) as i64
    } else {
        n_prime + ((wp.k as f64) < sp) as i64
    };
    PredictedCounts { n_arc, n_prime, t_side, t_prime, sp, total_nontrivial: total, a, b: total - a }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wp(k: u32, l: u32) -> WeightPair {
        WeightPair::new(k, l).unwrap()
    }

    #[test]
    fn stabilization_examples() {
        assert_eq!(stabilization_point(42, 2).ceil(), 57.0);
        assert!((stabilization_point(42, 2) - (41.0 + 5291f64.sqrt()) / 2.0).abs() < 1e-12);
        assert_eq!(stabilization_point(22, 0).ceil(), 81.0);
    }

    #[test]
    fn n_prime_example() {
        let p = predicted_counts(wp(58, 22));
        assert_eq!(p.n_prime, 2);
    }

    #[test]
    fn orders() {
        assert_eq!(trivial_orders(24).unwrap(), (0, 0));
        assert_eq!(trivial_orders(26).unwrap(), (1, 2));
        assert_eq!(trivial_orders(20).unwrap(), (0, 2));
        assert!(trivial_orders(21).is_err());
        for w in (16..=400).step_by(2) {
            let (vi, vr) = trivial_orders(w).unwrap();
            let t = total_nontrivial(w);
            assert_eq!(12 * t + 6 * vi as i64 + 4 * vr as i64 + 12, w as i64, "w={w}");
        }
    }

    #[test]
    fn table_sums_match_budget() {
        // N' + T' reproduces the nontrivial-zero budget whenever n >= 1
        for l in (14..=120).step_by(2) {
            for k in (l + 12..=l + 140).step_by(2) {
                let p = predicted_counts(wp(k, l));
                assert_eq!(p.n_prime + p.t_prime, p.total_nontrivial, "({k},{l})");
                assert!(p.n_arc <= p.n_prime && p.n_prime <= p.n_arc + 1);
                assert!(p.t_side <= p.t_prime);
            }
        }
    }

    #[test]
    fn stabilized_values() {
        assert_eq!(predicted_counts(wp(56, 42)).b, 5);
        assert_eq!(predicted_counts(wp(68, 42)).b, 6);
        let p = predicted_counts(wp(70, 22));
        assert_eq!((p.a, p.b), (4, 2));
        let p = predicted_counts(wp(82, 22));
        assert_eq!((p.a, p.b), (4, 3));
    }
}
