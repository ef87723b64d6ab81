use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::{m_main, p_main, WeightPair};
use crate::{Error, Result};

/// Closed-form derivatives of the main terms at the corner theta = pi/3, per congruence
/// class of (k mod 6, l mod 6). A `None` entry means no closed form is provided for it.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct CornerDerivatives {
    pub p1: Option<f64>,
    pub p2: Option<f64>,
    pub m1: Option<f64>,
    pub m2: Option<f64>,
}

pub fn corner_derivatives(wp: WeightPair) -> Result<CornerDerivatives> {
    let (k, l) = (wp.k as f64, wp.l as f64);
    let s3 = 3f64.sqrt();
    let j = wp.j();
    let mut out = CornerDerivatives::default();
    match (wp.k % 6, wp.l % 6) {
        (0, 4) => {
            out.p1 = Some(s3 * (2.0 * l - k));
            let m1 = s3 * (2.0 * l - k);
            out.m1 = Some(if j == 8 { -m1 } else { m1 });
        }
        (4, 0) => {
            out.p1 = Some(s3 * (2.0 * k - l));
        }
        (2, 0) => {
            out.p2 = Some(2.0 * (2.0 * k * k - 2.0 * k * (l - 1.0) - l * l - l));
            let m2 = -2.0 * k * k + 2.0 * k * (l - 1.0) + l * l + l;
            out.m2 = Some(if j == 8 { -m2 } else { m2 });
        }
        (4, 4) => {
            let base = -k * k + k * (4.0 * l - 1.0) - l * l - l;
            out.p2 = Some(2.0 * base);
            out.m2 = Some(if j == 6 { -base } else { base });
        }
        _ => return Err(Error::NoClosedForm),
    }
    Ok(out)
}

/// (M(pi/3), P(pi/3))
pub fn corner_values(wp: WeightPair) -> (f64, f64) {
    (m_main(wp, PI / 3.0), p_main(wp, PI / 3.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d1(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x + h) - f(x - h)) / (2.0 * h)
    }

    fn d2(f: impl Fn(f64) -> f64, x: f64, h: f64) -> f64 {
        (f(x + h) - 2.0 * f(x) + f(x - h)) / (h * h)
    }

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-4 * b.abs().max(1.0)
    }

    #[test]
    fn closed_forms_match_differences() {
        let h = 1e-4;
        let c = PI / 3.0;
        let mut covered = 0;
        for l in (14..=60).step_by(2) {
            for k in (l..=l + 48).step_by(2) {
                let wp = WeightPair::new(k, l).unwrap();
                let Ok(cd) = corner_derivatives(wp) else { continue };
                covered += 1;
                let m = |t: f64| m_main(wp, t);
                let p = |t: f64| p_main(wp, t);
                if let Some(v) = cd.p1 {
                    assert!(close(v, d1(p, c, h)), "P' {wp}");
                }
                if let Some(v) = cd.m1 {
                    assert!(close(v, d1(m, c, h)), "M' {wp}");
                }
                if let Some(v) = cd.p2 {
                    assert!(close(v, d2(p, c, h)), "P'' {wp} {v} {}", d2(p, c, h));
                }
                if let Some(v) = cd.m2 {
                    assert!(close(v, d2(m, c, h)), "M'' {wp} {v} {}", d2(m, c, h));
                }
            }
        }
        assert!(covered >= 30);
    }

    #[test]
    fn specific_cases() {
        let cd = corner_derivatives(WeightPair::new(36, 22).unwrap()).unwrap();
        assert!((cd.m1.unwrap() - 3f64.sqrt() * 8.0).abs() < 1e-12);
        // j = 8 flips the sign of M'
        let cd8 = corner_derivatives(WeightPair::new(30, 22).unwrap()).unwrap();
        assert!((cd8.m1.unwrap() + 3f64.sqrt() * 14.0).abs() < 1e-12);
        let wp = WeightPair::new(38, 24).unwrap();
        let p2 = corner_derivatives(wp).unwrap().p2.unwrap();
        assert!((p2 - d2(|t| p_main(wp, t), PI / 3.0, 1e-4)).abs() < 1e-4 * p2.abs());
        assert!(corner_derivatives(WeightPair::new(30, 20).unwrap()).is_err());
    }

    #[test]
    fn corner_main_values() {
        assert!((corner_values(WeightPair::new(60, 24).unwrap()).0 - 6.0).abs() < 1e-12);
        assert!((corner_values(WeightPair::new(30, 24).unwrap()).0 + 6.0).abs() < 1e-12);
        assert!((corner_values(WeightPair::new(34, 20).unwrap()).0 - 3.0).abs() < 1e-12);
        assert!((corner_values(WeightPair::new(28, 20).unwrap()).0 + 3.0).abs() < 1e-12);
    }
}
