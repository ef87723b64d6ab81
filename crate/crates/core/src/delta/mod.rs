//! The cusp form Delta_{k,l} = E_k E_l - E_{k+l}, its real restrictions to the arc and the
//! side of the fundamental domain, and the main terms M_{k,l}, P_{k,l}.

mod corner;
mod eval;
mod main_terms;
mod weights;

pub use corner::{corner_derivatives, corner_values, CornerDerivatives};
pub use eval::{
    arc_certified, arc_real, delta_scaled, eval_delta, h_combination, side_certified, side_real, ARC_EPS,
};
pub use main_terms::{m_main, m_main_at_sample, p_main, p_main_at_sample, seven_term};
pub use weights::WeightPair;
