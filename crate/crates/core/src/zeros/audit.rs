use serde::{Deserialize, Serialize};

use super::interior::{interior_hunt, InteriorReport};
use super::predicted::{predicted_counts, trivial_orders, PredictedCounts};
use super::scan::{count_arc_zeros, count_side_zeros, ScanConfig};
use super::signs::ZeroLocation;
use super::valence::order_at;
use crate::delta::WeightPair;
use crate::eisenstein::UpperHalfPoint;
use crate::Result;

pub const SCHEMA_VERSION: u32 = 1;

/// Below this l, statements that hold "for l large enough" are reported, not expected.
pub const L_GUARD: u32 = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum FindingKind {
    ValenceFailure,
    /// A != N' or B != T' although k >= sp and n >= 1
    StabilizedMismatch,
    /// A or B differ from the predicted counts
    PredictionMismatch,
    OrderMismatch,
    UnresolvedSign,
    EndpointZero,
    InteriorZero,
    InteriorUnresolved,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub kind: FindingKind,
    /// whether the violated statement is asserted for this pair (l >= 40)
    pub expected: bool,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroCountReport {
    pub schema_version: u32,
    pub wp: WeightPair,
    pub a: usize,
    pub b: usize,
    pub v_i: u32,
    pub v_rho: u32,
    pub v_inf: u32,
    pub observed_v_i: Option<u32>,
    pub observed_v_rho: Option<u32>,
    pub predicted: PredictedCounts,
    pub valence_ok: bool,
    pub y_max: f64,
    pub zero_locations: Vec<ZeroLocation>,
    pub interior: Option<InteriorReport>,
    pub findings: Vec<Finding>,
}

impl ZeroCountReport {
    pub fn predicted_a(&self) -> i64 {
        self.predicted.a
    }

    pub fn predicted_b(&self) -> i64 {
        self.predicted.b
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AuditConfig {
    pub scan: ScanConfig,
    pub orders: bool,
    pub interior: bool,
}

impl Default for AuditConfig {
    fn default() -> Self {
        AuditConfig { scan: ScanConfig::default(), orders: true, interior: true }
    }
}

pub fn audit(wp: WeightPair) -> Result<ZeroCountReport> {
    audit_with(wp, &AuditConfig::default())
}

pub fn audit_with(wp: WeightPair, cfg: &AuditConfig) -> Result<ZeroCountReport> {
    let arc = count_arc_zeros(wp, &cfg.scan)?;
    let side = count_side_zeros(wp, &cfg.scan)?;
    let y_max = side.y_max.unwrap_or(f64::NAN);
    let (v_i, v_rho) = trivial_orders(wp.w())?;
    let predicted = predicted_counts(wp);
    let (a, b) = (arc.count, side.count);
    let valence_ok = 12 * (a + b) as i64 + 6 * v_i as i64 + 4 * v_rho as i64 + 12 == wp.w() as i64;
    let guarded = wp.l >= L_GUARD;
    let mut findings = vec![];
    let mut push = |kind, expected, message: String| findings.push(Finding { kind, expected, message });
    if !valence_ok {
        push(FindingKind::ValenceFailure, true, format!("A + B = {} but the budget is {}", a + b, predicted.total_nontrivial));
    }
    if wp.n() >= 1 && wp.k as f64 >= predicted.sp {
        if a as i64 != predicted.n_prime || b as i64 != predicted.t_prime {
            push(
                FindingKind::StabilizedMismatch,
                guarded,
                format!("(A, B) = ({a}, {b}), (N', T') = ({}, {})", predicted.n_prime, predicted.t_prime),
            );
        }
    } else if a as i64 != predicted.a || b as i64 != predicted.b {
        push(
            FindingKind::PredictionMismatch,
            false,
            format!("(A, B) = ({a}, {b}), predicted ({}, {})", predicted.a, predicted.b),
        );
    }
    for (name, s) in [("arc", &arc), ("side", &side)] {
        if !s.unresolved.is_empty() {
            push(FindingKind::UnresolvedSign, true, format!("{name}: undecided signs at {:?}", s.unresolved));
        }
        for z in &s.endpoint_zeros {
            push(FindingKind::EndpointZero, false, format!("{name}: sign change at the endpoint {}", z.at));
        }
    }
    let (mut observed_v_i, mut observed_v_rho) = (None, None);
    if cfg.orders {
        let eps = if wp.l >= 10 { 1e-14 } else { 1e-6 };
        observed_v_i = order_at(wp, UpperHalfPoint::i(), 6, eps)?.order;
        observed_v_rho = order_at(wp, UpperHalfPoint::rho(), 6, eps)?.order;
        if observed_v_i != Some(v_i) || observed_v_rho != Some(v_rho) {
            push(
                FindingKind::OrderMismatch,
                true,
                format!("orders at (i, rho): observed ({observed_v_i:?}, {observed_v_rho:?}), forced ({v_i}, {v_rho})"),
            );
        }
    }
    let interior = if cfg.interior {
        let r = interior_hunt(wp, y_max)?;
        match r.winding {
            Some(0) => {}
            Some(w) => push(FindingKind::InteriorZero, true, format!("argument principle counts {w} interior zeros")),
            None => push(FindingKind::InteriorUnresolved, true, "contour phase could not be tracked".into()),
        }
        for &(x, y) in &r.interior_zeros {
            push(FindingKind::InteriorZero, true, format!("zero near {x} + {y}i"));
        }
        Some(r)
    } else {
        None
    };
    let mut zero_locations = arc.locations;
    zero_locations.extend(side.locations);
    Ok(ZeroCountReport {
        schema_version: SCHEMA_VERSION,
        wp,
        a,
        b,
        v_i,
        v_rho,
        v_inf: 1,
        observed_v_i,
        observed_v_rho,
        predicted,
        valence_ok,
        y_max,
        zero_locations,
        interior,
        findings,
    })
}
