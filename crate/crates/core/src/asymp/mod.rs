//! Asymptotic formulas: arc constants, the Bessel-sum formulas for `s_1`
//! and `s_2`, their main terms, the `L(q)` expansion and Rademacher's
//! series for `p(n)`.

mod abc;
mod coefficients;
mod lq;
mod mainterm;
mod rademacher;
mod sums;

pub use abc::{
    abc_constants, alpha_closed_form, alpha_sawtooth_sum, alpha_via_polylog, beta_closed_form,
    beta_sawtooth_sum, beta_via_fractional_parts, AbcConstants,
};
pub use coefficients::{arc_phase, coefficient_table, NShared, TermCoefficients};
pub use lq::{l_asymptotic, l_direct, LEvalContext};
pub use mainterm::{
    bracket_residual, s1_bracket, s1_mainterm, s1_prefactor, s2_bracket, s2_bracket_terms,
    s2_mainterm, s2_prefactor,
};
pub use rademacher::{default_truncation, rademacher_p, RademacherValue};
pub use sums::{
    farey_order, s1_asymptotic, s1_asymptotic_detail, s1_term, s2_asymptotic,
    s2_asymptotic_detail, s2_term, AsymptoticSum, IiEvaluation,
};
