//! Eisenstein series, the cusp forms `E_k E_l - E_{k+l}`, and zero counting on the
//! boundary of the standard fundamental domain.
//!
//! The crate is organised bottom-up:
//!
//! * [`numerics`]: Bernoulli numbers, incomplete gamma, zeta, log-space complex numbers,
//!   compensated sums.
//! * [`eisenstein`]: lattice / Fourier / theta evaluators and the asymptotic regimes.
//! * [`delta`]: the difference form, its real boundary restrictions and main terms.
//! * [`zeros`]: sample points, predicted counts, scans, probes and the audit report.

pub mod delta;
pub mod eisenstein;
pub mod error;
pub mod numerics;
pub mod zeros;

pub use error::{Error, Result};
pub use num_complex::Complex64;
