//! Sample points, predicted counts, sign-change scans on the boundary of the fundamental
//! domain, corner probes, and the valence audit.

mod audit;
mod interior;
mod predicted;
mod probe;
mod qexp;
mod samples;
mod scan;
mod signs;
mod valence;

pub use audit::{audit, audit_with, AuditConfig, Finding, FindingKind, ZeroCountReport, L_GUARD, SCHEMA_VERSION};
pub use interior::{interior_hunt, InteriorReport};
pub use predicted::{predicted_counts, stabilization_point, total_nontrivial, trivial_orders, PredictedCounts};
pub use probe::{extra_zero_probe, ProbeMethod, ProbeResult};
pub use qexp::{y_max_certificate, DeltaQExpansion, CERT_TERMS, EVAL_TERMS};
pub use samples::{arc_sample_points, side_d_range, side_sample_points};
pub use scan::{count_arc_zeros, count_side_zeros, side_scan_grid, BoundaryScan, ScanConfig};
pub use signs::{
    certified_sign, count_sign_changes, count_sign_changes_strict, refine_bracket, ArcEvaluator, Boundary,
    RealEvaluator, SideEvaluator, SignScan, ZeroLocation,
};
pub use valence::{order_at, OrderProbe};
