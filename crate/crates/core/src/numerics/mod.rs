//! Scalar building blocks shared by the evaluators.

mod bernoulli;
mod dd;
mod gamma;
mod logc;
mod zeta;

pub use bernoulli::{bernoulli, gamma_k, gamma_k_analytic, ln_abs_rational, ExactRational};
pub use dd::{neumaier_sum, Dd, DdComplex, NeumaierComplex, NeumaierSum};
pub use gamma::{ln_gamma, ln_reg_gamma_p, ln_reg_gamma_q, reg_gamma_p, reg_gamma_q, temme_envelope};
pub use logc::{wrap_phase, LogComplex, LogSum};
pub use zeta::zeta;

/// Unit roundoff for IEEE double.
pub const EPS: f64 = f64::EPSILON * 0.5;

/// A value paired with an absolute error bound.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Certified<T> {
    pub value: T,
    pub err: f64,
}

impl Certified<f64> {
    /// Sign of the value if it exceeds the error bound, else `None`.
    pub fn sign(&self) -> Option<i8> {
        if self.value > self.err {
            Some(1)
        } else if self.value < -self.err {
            Some(-1)
        } else {
            None
        }
    }
}
