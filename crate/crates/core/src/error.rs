use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("weight {0} must be even")]
    OddWeight(i64),
    #[error("weight {k} out of range (expected {lo} <= k <= {hi})")]
    WeightRange { k: i64, lo: i64, hi: i64 },
    #[error("invalid weight pair ({k}, {l}): {reason}")]
    InvalidPair { k: u32, l: u32, reason: &'static str },
    #[error("point not in the upper half plane (y = {0})")]
    NotInUpperHalfPlane(f64),
    #[error("y = {0} is below 1; use the lattice evaluator")]
    FourierNeedsLargeY(f64),
    #[error("eps = {eps:e} cannot be certified: lattice radius {radius:.3e} exceeds the cap")]
    EpsTooSmall { eps: f64, radius: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("imaginary residue {residue:e} exceeds tolerance at {at}")]
    NotReal { residue: f64, at: f64 },
    #[error("sign could not be certified at {0}")]
    SignUncertain(f64),
    #[error("no closed form for this congruence class")]
    NoClosedForm,
    #[error("no dominance certificate for y up to {0}")]
    NoCutoff(f64),
    #[error("large-y branch needs N with |2 pi N y / k - 1| <= 10/k (got N = {n:?}, y = {y})")]
    BadN { n: Option<u32>, y: f64 },
}

pub type Result<T> = std::result::Result<T, Error>;
