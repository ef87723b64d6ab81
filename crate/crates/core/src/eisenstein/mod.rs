//! Evaluators for E_k and its rescalings.
//!
//! The lattice sum is the reference everywhere in the fundamental domain; the Fourier
//! series and the theta / small-y formulas are independent cross-checks and audited
//! approximations.

mod bounds;
mod fourier;
mod lattice;
mod point;
mod regimes;
mod rescaled;
mod theta;

pub use bounds::{c_ge2_tail, d_tail, c_tail_envelope, d_tail_envelope};
pub use fourier::{eval_ek_fourier, fourier_e_minus_one, fourier_single_term_ln};
pub(crate) use fourier::ln_sigma;
pub use lattice::{cpowi, eval_ek_lattice, lattice_g, lattice_radius, Precision, RADIUS_CAP};
pub use point::UpperHalfPoint;
pub use regimes::{
    gk_regime_approx, gk_small_y, gk_theta, gk_theta_modular, hk_side_regimes, phi0, phi1, Regime, RegimeApprox, SideApprox,
    SideBranch, C_ENV,
};
pub use rescaled::{fk, fk_certified, fk_main_terms, gk, hk, rk_tail_bound, DEFAULT_EPS};
pub use theta::{jacobi_theta, ThetaArgs};
