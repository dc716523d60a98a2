use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

use super::quad::integrate;
use crate::error::{invalid, Result};
use crate::precision::PrecisionContext;

/// `e^{-x} II(x) = int_0^pi t^2 cos(t) e^{x (cos t - 1)} dt`.
pub fn bessel_integral_ii_scaled(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    if !x.is_finite() || x.is_sign_negative() && !x.is_zero() {
        return Err(invalid(format!("II(x) needs finite x >= 0, got {x}")));
    }
    let prec = ctx.precision_bits() + 32;
    let qctx = ctx.with_extra_bits(32);
    let xw = Float::with_val(prec, x);
    let pi = Float::with_val(prec, Constant::Pi);
    let integrand = |t: &Float| {
        let p = t.prec();
        let c = Float::with_val(p, t.cos_ref());
        let decay = Float::with_val(p, &c - 1u32) * &xw;
        Float::with_val(p, t.square_ref()) * c * decay.exp()
    };
    // The mass sits within a few multiples of x^{-1/2} of the origin.
    let zero = Float::new(prec);
    let total = if xw > 4u32 {
        let split = Float::with_val(prec, 8u32) / Float::with_val(prec, xw.sqrt_ref());
        let split = if split > pi { pi.clone() } else { split };
        let head = integrate(integrand, &zero, &split, &qctx)?;
        if split < pi {
            head + integrate(integrand, &split, &pi, &qctx)?
        } else {
            head
        }
    } else {
        integrate(integrand, &zero, &pi, &qctx)?
    };
    Ok(Float::with_val(ctx.precision_bits(), total))
}

/// `II(x) = int_0^pi t^2 cos(t) e^{x cos t} dt`.
pub fn bessel_integral_ii(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let scaled = bessel_integral_ii_scaled(x, ctx)?;
    let e = Float::with_val(ctx.precision_bits() + 32, x).exp();
    Ok(Float::with_val(ctx.precision_bits(), scaled * e))
}

/// `sqrt(pi/2) e^x / x^{3/2}`, the large-`x` leading term of `II(x)`.
pub fn bessel_integral_ii_leading(x: &Float, ctx: &PrecisionContext) -> Float {
    let prec = ctx.precision_bits() + 16;
    let x = Float::with_val(prec, x);
    let half_pi = Float::with_val(prec, Constant::Pi) / 2u32;
    let v = half_pi.sqrt() * Float::with_val(prec, x.exp_ref()) / Float::with_val(prec, (&x).pow(1.5f64));
    Float::with_val(ctx.precision_bits(), v)
}
