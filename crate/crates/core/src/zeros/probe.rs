use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use super::samples::{arc_sample_points, side_sample_points};
use crate::delta::{corner_derivatives, corner_values, m_main, p_main, WeightPair};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProbeMethod {
    CornerValue,
    FirstDerivative,
    SecondDerivative,
    ProbePoint,
}

/// Outcome of the corner analysis on one boundary piece. `witness` is an interval (theta on
/// the arc, y on the side) whose endpoints carry opposite main-term signs when `extra` holds.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CornerProbe {
    pub extra: bool,
    pub method: ProbeMethod,
    /// signed quantity the decision was based on (value, derivative, or probe value)
    pub quantity: f64,
    /// main term at the comparison sample point
    pub sample_value: f64,
    pub witness: (f64, f64),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbeResult {
    pub arc: Option<CornerProbe>,
    pub side: Option<CornerProbe>,
}

impl ProbeResult {
    pub fn arc_extra(&self) -> bool {
        self.arc.map_or(false, |p| p.extra)
    }

    pub fn side_extra(&self) -> bool {
        self.side.map_or(false, |p| p.extra)
    }
}

fn decide(method: ProbeMethod, quantity: f64, sample_value: f64, witness: (f64, f64)) -> CornerProbe {
    CornerProbe { extra: quantity.signum() != sample_value.signum(), method, quantity, sample_value, witness }
}

fn arc_probe(wp: WeightPair) -> Result<Option<CornerProbe>> {
    let (n, j) = (wp.n(), wp.j());
    let a = wp.l % 6;
    let corner = PI / 3.0;
    if n == 0 {
        if j != 8 {
            return Ok(None);
        }
        let top = m_main(wp, PI / 2.0);
        return Ok(Some(if a == 2 {
            decide(ProbeMethod::CornerValue, corner_values(wp).0, top, (corner, PI / 2.0))
        } else {
            let phi = corner + PI / (2.0 * wp.l as f64);
            decide(ProbeMethod::ProbePoint, m_main(wp, phi), top, (phi, PI / 2.0))
        }));
    }
    let Some(&(_, th)) = arc_sample_points(wp).first() else { return Ok(None) };
    let sv = m_main(wp, th);
    let p = match (a, j) {
        (0, 0 | 6) | (2, 2 | 8) => decide(ProbeMethod::CornerValue, corner_values(wp).0, sv, (corner, th)),
        (2, 0 | 6) => {
            let phi = corner + PI / (4.0 * (12 * n + j) as f64);
            decide(ProbeMethod::ProbePoint, m_main(wp, phi), sv, (phi, th))
        }
        (4, 2 | 8) => {
            let d = corner_derivatives(wp)?.m1.ok_or(Error::NoClosedForm)?;
            decide(ProbeMethod::FirstDerivative, d, sv, (corner, th))
        }
        (0, 2 | 8) | (4, 0 | 6) => {
            let d = corner_derivatives(wp)?.m2.ok_or(Error::NoClosedForm)?;
            decide(ProbeMethod::SecondDerivative, d, sv, (corner, th))
        }
        _ => return Ok(None),
    };
    Ok(Some(p))
}

fn side_probe(wp: WeightPair) -> Result<Option<CornerProbe>> {
    if wp.l % 6 == 2 {
        return Ok(None);
    }
    let Some(&(_, th)) = side_sample_points(wp.l).first() else { return Ok(None) };
    let sv = p_main(wp, th);
    let witness = (3f64.sqrt() / 2.0, th.tan() / 2.0);
    let p = match wp.w() % 6 {
        0 => decide(ProbeMethod::CornerValue, corner_values(wp).1, sv, witness),
        4 => {
            let d = corner_derivatives(wp)?.p1.ok_or(Error::NoClosedForm)?;
            decide(ProbeMethod::FirstDerivative, d, sv, witness)
        }
        _ => {
            let d = corner_derivatives(wp)?.p2.ok_or(Error::NoClosedForm)?;
            decide(ProbeMethod::SecondDerivative, d, sv, witness)
        }
    };
    Ok(Some(p))
}

/// Whether the main terms force a sign change between the corner rho and the nearest
/// sample point, beyond those between sample points, on the arc and on the side.
pub fn extra_zero_probe(wp: WeightPair) -> Result<ProbeResult> {
    let r = ProbeResult { arc: arc_probe(wp)?, side: side_probe(wp)? };
    if r.arc.is_none() && r.side.is_none() {
        return Err(Error::NoClosedForm);
    }
    Ok(r)
}
