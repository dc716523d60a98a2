use rug::float::Constant;
use rug::{Float, Rational};

use crate::error::{invalid, Result};
use crate::precision::PrecisionContext;
use crate::specfun::zeta_value;

/// `log(3n)`, `sqrt(3n)` and `pi` at the working precision.
fn basics(n: u64, prec: u32) -> (Float, Float, Float) {
    let three_n = Float::with_val(prec, n) * 3u32;
    (
        Float::with_val(prec, three_n.ln_ref()),
        three_n.sqrt(),
        Float::with_val(prec, Constant::Pi),
    )
}

/// `e^{pi sqrt(n/3)} / (3^{1/4} n^{3/4})`.
fn common_prefactor(n: u64, prec: u32) -> Float {
    let nf = Float::with_val(prec, n);
    let pi = Float::with_val(prec, Constant::Pi);
    let e = (pi * Float::with_val(prec, &nf / 3u32).sqrt()).exp();
    let three_q = Float::with_val(prec, 3u32).root(4);
    let n34 = Float::with_val(prec, nf.sqrt_ref()) * Float::with_val(prec, nf.root_ref(4));
    e / (three_q * n34)
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(invalid("main terms need n >= 1"));
    }
    Ok(())
}

/// `e^{pi sqrt(n/3)} / (16 3^{1/4} n^{3/4})`.
pub fn s1_prefactor(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let prec = ctx.precision_bits() + 32;
    Ok(Float::with_val(ctx.precision_bits(), common_prefactor(n, prec) / 16u32))
}

/// `log(3n) + (pi/6 - 9/pi) log(3n) / (8 sqrt(3n)) + (pi/4 + 6/pi) / sqrt(3n)`.
pub fn s1_bracket(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let prec = ctx.precision_bits() + 32;
    let (l, r, pi) = basics(n, prec);
    let c1 = Float::with_val(prec, &pi / 6u32) - Float::with_val(prec, 9u32) / &pi;
    let c2 = Float::with_val(prec, &pi / 4u32) + Float::with_val(prec, 6u32) / &pi;
    let mut b = l.clone();
    b += c1 * &l / (Float::with_val(prec, &r * 8u32));
    b += c2 / &r;
    Ok(Float::with_val(ctx.precision_bits(), b))
}

/// The first-moment main term: prefactor times bracket.
pub fn s1_mainterm(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    Ok(s1_prefactor(n, ctx)? * s1_bracket(n, ctx)?)
}

/// `e^{pi sqrt(n/3)} / (4 3^{1/4} n^{3/4})`.
pub fn s2_prefactor(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    check_n(n)?;
    let prec = ctx.precision_bits() + 32;
    Ok(Float::with_val(ctx.precision_bits(), common_prefactor(n, prec) / 4u32))
}

/// The five displayed terms of the second-moment bracket, in order.
pub fn s2_bracket_terms(n: u64, ctx: &PrecisionContext) -> Result<[Float; 5]> {
    check_n(n)?;
    let prec = ctx.precision_bits() + 32;
    let (l, r, pi) = basics(n, prec);
    let l2 = Float::with_val(prec, l.square_ref());
    let pi2 = Float::with_val(prec, pi.square_ref());
    let z3 = zeta_value(3, &ctx.with_extra_bits(32))?;
    let t0 = Float::with_val(prec, &l2 / 16u32);
    let t1 = pi2 / 24u32;
    let c2 = Float::with_val(prec, &pi / 6u32) - Float::with_val(prec, 9u32) / &pi;
    let t2 = c2 * &l2 / Float::with_val(prec, &r * 128u32);
    let c3 = Float::with_val(prec, &pi / 8u32) + Float::with_val(prec, 3u32) / &pi;
    let t3 = c3 * &l / Float::with_val(prec, &r * 4u32);
    let pi3 = Float::with_val(prec, &pi * &pi) * &pi;
    let c4 = pi3 / 144u32 - Float::with_val(prec, &pi * Rational::from((3, 8)))
        - Float::with_val(prec, 6u32) / &pi
        - z3 * 7u32 / &pi;
    let t4 = c4 / Float::with_val(prec, &r * 8u32);
    let p = ctx.precision_bits();
    Ok([t0, t1, t2, t3, t4].map(|t| Float::with_val(p, t)))
}

pub fn s2_bracket(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    let terms = s2_bracket_terms(n, ctx)?;
    let mut s = Float::new(ctx.precision_bits() + 32);
    for t in &terms {
        s += t;
    }
    Ok(Float::with_val(ctx.precision_bits(), s))
}

/// The second-moment main term: prefactor times bracket.
pub fn s2_mainterm(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    Ok(s2_prefactor(n, ctx)? * s2_bracket(n, ctx)?)
}

/// `R(n) = s_k(n) / prefactor - bracket` for `moment` 1 or 2, given the
/// exact value of `s_k(n)`.
pub fn bracket_residual(moment: u32, n: u64, exact: &Rational, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let (pre, bracket) = match moment {
        1 => (s1_prefactor(n, &wctx)?, s1_bracket(n, &wctx)?),
        2 => (s2_prefactor(n, &wctx)?, s2_bracket(n, &wctx)?),
        _ => return Err(invalid(format!("main terms exist for moments 1 and 2, got {moment}"))),
    };
    let v = Float::with_val(prec, exact) / pre - bracket;
    Ok(Float::with_val(ctx.precision_bits(), v))
}
