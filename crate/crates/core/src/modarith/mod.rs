//! Dedekind sums, the eta multiplier `omega_{h,k}`, Farey arcs and
//! Kloosterman sums.

mod dedekind;
mod farey;
mod omega;
mod phase;

pub use dedekind::{dedekind_sum, dedekind_sum_direct, gcd, kronecker, sawtooth};
pub use farey::{farey_neighborhood, farey_sequence, FareyNeighborhood};
pub use omega::{
    inverse_neg_mod8, kloosterman_a, log_multiplier_ratio, multiplier_ratio_closed_form,
    multiplier_quotient, multiplier_ratio_phase, omega, omega_2h, omega_general, omega_with_inverse,
};
pub use phase::UnitPhase;
