use serde::{Deserialize, Serialize};

use super::qexp::{DeltaQExpansion, EVAL_TERMS};
use crate::delta::{arc_certified, side_certified, WeightPair, ARC_EPS};
use crate::eisenstein::Precision;
use crate::numerics::Certified;
use crate::{Error, Result};

/// Truncation target used on the double-double path.
pub const DD_EPS: f64 = 1e-20;

/// A real function of one variable with certified values. Only signs matter to the scans,
/// so an implementation may return any fixed positive multiple of the function, with the
/// error bound on the same scale.
pub trait RealEvaluator: Sync {
    fn eval(&self, t: f64, prec: Precision) -> Result<Certified<f64>>;
}

impl<F> RealEvaluator for F
where
    F: Fn(f64, Precision) -> Result<Certified<f64>> + Sync,
{
    fn eval(&self, t: f64, prec: Precision) -> Result<Certified<f64>> {
        self(t, prec)
    }
}

/// F_k F_l - F_{k+l} as a function of theta.
#[derive(Debug, Clone, Copy)]
pub struct ArcEvaluator {
    pub wp: WeightPair,
    pub eps: f64,
}

impl ArcEvaluator {
    pub fn new(wp: WeightPair) -> Self {
        ArcEvaluator { wp, eps: ARC_EPS }
    }
}

impl RealEvaluator for ArcEvaluator {
    fn eval(&self, t: f64, prec: Precision) -> Result<Certified<f64>> {
        match prec {
            Precision::Double => arc_certified(self.wp, t, self.eps, prec),
            Precision::DoubleDouble => arc_certified(self.wp, t, DD_EPS, prec),
        }
    }
}

/// |z|^l Delta(1/2 + iy) as a function of y. The escalated path also tries the
/// q-expansion, which keeps relative accuracy where Delta is exponentially small.
#[derive(Debug, Clone)]
pub struct SideEvaluator {
    pub wp: WeightPair,
    pub eps: f64,
    qexp: DeltaQExpansion,
}

impl SideEvaluator {
    pub fn new(wp: WeightPair) -> Result<Self> {
        Ok(SideEvaluator { wp, eps: ARC_EPS, qexp: DeltaQExpansion::new(wp, EVAL_TERMS)? })
    }

    pub fn with_expansion(wp: WeightPair, qexp: DeltaQExpansion) -> Self {
        SideEvaluator { wp, eps: ARC_EPS, qexp }
    }
}

impl RealEvaluator for SideEvaluator {
    fn eval(&self, t: f64, prec: Precision) -> Result<Certified<f64>> {
        match prec {
            Precision::Double => side_certified(self.wp, t, self.eps, prec),
            Precision::DoubleDouble => {
                if t >= 1.0 {
                    if let Some(c) = self.qexp.side_value(t) {
                        if c.sign().is_some() {
                            return Ok(c);
                        }
                    }
                }
                side_certified(self.wp, t, DD_EPS, prec)
            }
        }
    }
}

/// Certified sign at t. A double value smaller than ten times its error bound is
/// re-evaluated on the escalated path; `None` if still undecided.
pub fn certified_sign<E: RealEvaluator + ?Sized>(ev: &E, t: f64) -> Result<Option<i8>> {
    let c = ev.eval(t, Precision::Double)?;
    if c.value.abs() >= 10.0 * c.err && c.value != 0.0 {
        return Ok(Some(if c.value > 0.0 { 1 } else { -1 }));
    }
    Ok(ev.eval(t, Precision::DoubleDouble)?.sign())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Boundary {
    Arc,
    Side,
}

/// A zero isolated by a sign change: `lo < hi` carry opposite certified signs, and
/// `at` is the bracket midpoint. Coordinates are theta on the arc and y on the side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZeroLocation {
    pub boundary: Boundary,
    pub at: f64,
    pub lo: f64,
    pub hi: f64,
    pub sign_lo: i8,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SignScan {
    pub changes: usize,
    /// points whose sign stayed undecided after escalation
    pub uncertain: Vec<f64>,
    /// consecutive certified points with opposite signs
    pub brackets: Vec<(f64, f64, i8)>,
    /// per-point certified sign
    pub signs: Vec<Option<i8>>,
}

/// Counts sign changes between consecutive certified points. Undecided points are skipped
/// and listed; the count never guesses a sign.
pub fn count_sign_changes<E: RealEvaluator + ?Sized>(ev: &E, points: &[f64]) -> Result<SignScan> {
    if points.windows(2).any(|w| !(w[0] < w[1])) {
        return Err(Error::InvalidArgument("points must be strictly increasing".into()));
    }
    let mut last: Option<(f64, i8)> = None;
    let mut scan = SignScan { changes: 0, uncertain: vec![], brackets: vec![], signs: Vec::with_capacity(points.len()) };
    for &t in points {
        let sg = certified_sign(ev, t)?;
        scan.signs.push(sg);
        match sg {
            None => scan.uncertain.push(t),
            Some(s) => {
                if let Some((t0, s0)) = last {
                    if s0 != s {
                        scan.changes += 1;
                        scan.brackets.push((t0, t, s0));
                    }
                }
                last = Some((t, s));
            }
        }
    }
    Ok(scan)
}

/// As [`count_sign_changes`], but an undecided point is an error.
pub fn count_sign_changes_strict<E: RealEvaluator + ?Sized>(ev: &E, points: &[f64]) -> Result<usize> {
    let s = count_sign_changes(ev, points)?;
    if let Some(&t) = s.uncertain.first() {
        return Err(Error::SignUncertain(t));
    }
    Ok(s.changes)
}

/// Bisects a bracket with certified opposite signs down to width `width`. If the midpoint
/// sign cannot be decided, nearby splits are tried before stopping early.
pub fn refine_bracket<E: RealEvaluator + ?Sized>(
    ev: &E,
    boundary: Boundary,
    mut lo: f64,
    mut hi: f64,
    sign_lo: i8,
    width: f64,
) -> Result<ZeroLocation> {
    'outer: while hi - lo > width {
        for frac in [0.5, 0.375, 0.625, 0.25, 0.75] {
            let mid = lo + frac * (hi - lo);
            if mid <= lo || mid >= hi {
                break 'outer;
            }
            if let Some(s) = certified_sign(ev, mid)? {
                if s == sign_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
                continue 'outer;
            }
        }
        break;
    }
    Ok(ZeroLocation { boundary, at: 0.5 * (lo + hi), lo, hi, sign_lo })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeros::arc_sample_points;

    fn table(vals: Vec<f64>) -> impl Fn(f64, Precision) -> Result<Certified<f64>> + Sync {
        move |t: f64, _p: Precision| Ok(Certified { value: vals[t as usize], err: 0.01 })
    }

    #[test]
    fn trivial_counts() {
        let f = table(vec![1.0, -1.0, 1.0, -1.0]);
        assert_eq!(count_sign_changes_strict(&f, &[0.0, 1.0, 2.0, 3.0]).unwrap(), 3);
        let f = table(vec![1.0, 2.0, 3.0]);
        assert_eq!(count_sign_changes_strict(&f, &[0.0, 1.0, 2.0]).unwrap(), 0);
    }

    #[test]
    fn uncertain_is_reported() {
        let f = table(vec![1.0, 0.001, -1.0]);
        let s = count_sign_changes(&f, &[0.0, 1.0, 2.0]).unwrap();
        assert_eq!(s.changes, 1);
        assert_eq!(s.uncertain, vec![1.0]);
        assert!(matches!(count_sign_changes_strict(&f, &[0.0, 1.0, 2.0]), Err(Error::SignUncertain(_))));
        assert!(count_sign_changes(&f, &[1.0, 0.0]).is_err());
    }

    #[test]
    fn arc_samples_56_20() {
        let wp = WeightPair::new(56, 20).unwrap();
        let mut pts: Vec<f64> = arc_sample_points(wp).iter().map(|p| p.1).collect();
        let ev = ArcEvaluator::new(wp);
        assert_eq!(count_sign_changes_strict(&ev, &pts).unwrap(), 2);
        // l = 2 mod 6, j = 0: the probe point near the corner adds the third change
        pts.insert(0, std::f64::consts::PI / 3.0 + std::f64::consts::PI / (4.0 * 36.0));
        assert_eq!(count_sign_changes_strict(&ev, &pts).unwrap(), 3);
    }

    #[test]
    fn bisection_cosine() {
        let f = |t: f64, _p: Precision| Ok(Certified { value: t.cos(), err: 1e-15 });
        let z = refine_bracket(&f, Boundary::Arc, 1.0, 2.0, 1, 1e-12).unwrap();
        assert!(z.hi - z.lo <= 1e-12);
        assert!(z.lo < std::f64::consts::FRAC_PI_2 && std::f64::consts::FRAC_PI_2 < z.hi);
    }
}
