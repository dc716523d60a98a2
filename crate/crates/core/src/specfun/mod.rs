//! Arbitrary-precision special functions on top of MPFR.

mod bernoulli;
mod bessel;
mod bessel_integral;
mod contour;
mod polylog;
pub mod quad;
mod zeta;

pub use bernoulli::{bernoulli_number, bernoulli_periodic, bernoulli_poly, BERNOULLI_CACHE_MAX};
pub use bessel::{
    bessel_i, bessel_i_order_deriv, bessel_i_quadrature, bessel_i_three_halves, bessel_k,
    bessel_k_quadrature,
};
pub use bessel_integral::{bessel_integral_ii, bessel_integral_ii_leading, bessel_integral_ii_scaled};
pub use contour::{contour_bessel_main_term, contour_quadrature_isl, ContourParams};
pub use polylog::polylog;
pub use zeta::{zeta3_apery, zeta_borwein, zeta_int, zeta_nonpositive, zeta_value};
