use anyhow::Result;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use cuspzeros::delta::WeightPair;
use cuspzeros::zeros::{audit_with, AuditConfig, FindingKind, ZeroCountReport, SCHEMA_VERSION};

use crate::config::{RunConfig, WeightRange};

/// Default cap on k + l for scans.
pub const MAX_WEIGHT: u32 = 400;

/// A pair that could not be audited.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairError {
    pub schema_version: u32,
    pub wp: WeightPair,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PairResult {
    Report(Box<ZeroCountReport>),
    Error(PairError),
}

/// Flat per-pair summary used for CSV output.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportRow {
    pub schema_version: u32,
    pub k: u32,
    pub l: u32,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub v_i: Option<u32>,
    pub v_rho: Option<u32>,
    pub predicted_a: Option<i64>,
    pub predicted_b: Option<i64>,
    pub n_prime: Option<i64>,
    pub t_prime: Option<i64>,
    pub sp: Option<f64>,
    pub valence_ok: Option<bool>,
    pub y_max: Option<f64>,
    pub winding: Option<i64>,
    pub findings: usize,
    pub error: Option<String>,
}

impl From<&PairResult> for ReportRow {
    fn from(p: &PairResult) -> Self {
        match p {
            PairResult::Report(r) => ReportRow {
                schema_version: r.schema_version,
                k: r.wp.k,
                l: r.wp.l,
                a: Some(r.a),
                b: Some(r.b),
                v_i: Some(r.v_i),
                v_rho: Some(r.v_rho),
                predicted_a: Some(r.predicted.a),
                predicted_b: Some(r.predicted.b),
                n_prime: Some(r.predicted.n_prime),
                t_prime: Some(r.predicted.t_prime),
                sp: Some(r.predicted.sp),
                valence_ok: Some(r.valence_ok),
                y_max: Some(r.y_max),
                winding: r.interior.as_ref().and_then(|i| i.winding),
                findings: r.findings.len(),
                error: None,
            },
            PairResult::Error(e) => ReportRow {
                schema_version: e.schema_version,
                k: e.wp.k,
                l: e.wp.l,
                a: None,
                b: None,
                v_i: None,
                v_rho: None,
                predicted_a: None,
                predicted_b: None,
                n_prime: None,
                t_prime: None,
                sp: None,
                valence_ok: None,
                y_max: None,
                winding: None,
                findings: 0,
                error: Some(e.error.clone()),
            },
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanSummary {
    pub pairs: usize,
    pub errors: usize,
    pub valence_failures: usize,
    /// stabilised (A, B) != (N', T') where the statement is asserted
    pub stabilized_mismatches: usize,
    /// findings below the l guard or outside the asserted range
    pub reported_findings: usize,
    pub interior_findings: usize,
}

impl ScanSummary {
    pub fn failed(&self) -> bool {
        self.errors > 0 || self.valence_failures > 0 || self.stabilized_mismatches > 0 || self.interior_findings > 0
    }
}

pub fn summarize(results: &[PairResult]) -> ScanSummary {
    let mut s = ScanSummary { pairs: results.len(), ..Default::default() };
    for p in results {
        match p {
            PairResult::Error(_) => s.errors += 1,
            PairResult::Report(r) => {
                if !r.valence_ok {
                    s.valence_failures += 1;
                }
                for f in &r.findings {
                    match f.kind {
                        FindingKind::ValenceFailure => {}
                        FindingKind::InteriorZero | FindingKind::InteriorUnresolved => s.interior_findings += 1,
                        FindingKind::StabilizedMismatch if f.expected => s.stabilized_mismatches += 1,
                        _ => s.reported_findings += 1,
                    }
                }
            }
        }
    }
    s
}

/// Valid scan pairs: even, 14 <= l <= k, k + l <= max_weight.
pub fn scan_pairs(ls: WeightRange, ks: WeightRange, max_weight: u32) -> Vec<WeightPair> {
    let mut out = vec![];
    for l in ls.iter().filter(|l| *l >= 14) {
        for k in ks.iter().filter(|k| *k >= l && k + l <= max_weight) {
            if let Ok(wp) = WeightPair::new(k, l) {
                out.push(wp);
            }
        }
    }
    out
}

pub fn audit_one(wp: WeightPair, ac: &AuditConfig) -> PairResult {
    match audit_with(wp, ac) {
        Ok(r) => PairResult::Report(Box::new(r)),
        Err(e) => PairResult::Error(PairError { schema_version: SCHEMA_VERSION, wp, error: e.to_string() }),
    }
}

/// Audits every pair; failures are isolated per pair, and results keep the pair order.
pub fn cmd_scan(pairs: &[WeightPair], cfg: &RunConfig, interior: bool) -> Result<Vec<PairResult>> {
    let ac = AuditConfig { scan: cfg.scan_config(), orders: true, interior };
    cfg.install(|| pairs.par_iter().map(|&wp| audit_one(wp, &ac)).collect())
}
