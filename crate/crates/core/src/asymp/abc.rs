use rug::float::Constant;
use rug::{Complex, Float, Integer, Rational};

use crate::error::{invalid, Result};
use crate::modarith::{log_multiplier_ratio, sawtooth, UnitPhase};
use crate::precision::PrecisionContext;
use crate::specfun::{bernoulli_poly, polylog, zeta_value};

/// The constants `a, b, c` of one arc together with the `alpha`, `beta`
/// that enter `b` and `c`.
#[derive(Debug, Clone, PartialEq)]
pub struct AbcConstants {
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub alpha: Complex,
    pub beta: Complex,
}

fn sign(l: i64) -> i64 {
    if l % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Exact `sum_{l=1}^{2k} (-1)^l ((hl/k))^2 B_2(l/2k)`.
pub fn alpha_sawtooth_sum(h: i64, k: i64) -> Rational {
    let mut s = Rational::new();
    for l in 1..=2 * k {
        let st = sawtooth(&Rational::from((h * l, k)));
        let b2 = bernoulli_poly(2, &Rational::from((l, 2 * k)));
        s += Rational::from(st.square_ref()) * b2 * sign(l);
    }
    s
}

/// Exact `sum_{l=1}^{2k} (-1)^l ((hl/k)) B_3(l/2k)`.
pub fn beta_sawtooth_sum(h: i64, k: i64) -> Rational {
    let mut s = Rational::new();
    for l in 1..=2 * k {
        let st = sawtooth(&Rational::from((h * l, k)));
        s += st * bernoulli_poly(3, &Rational::from((l, 2 * k))) * sign(l);
    }
    s
}

fn require_odd(k: i64) -> Result<()> {
    if k < 1 || k % 2 == 0 {
        return Err(invalid(format!("k = {k} must be odd and positive")));
    }
    Ok(())
}

/// `alpha_{h,k} = (3k-1) pi^2 / 48 + pi^2 k sum (-1)^l ((hl/k))^2 B_2(l/2k)`.
pub fn alpha_closed_form(h: i64, k: i64, ctx: &PrecisionContext) -> Result<Complex> {
    require_odd(k)?;
    let prec = ctx.precision_bits() + 32;
    let pi2 = Float::with_val(prec, Constant::Pi).square();
    let mut r = Rational::from((3 * k - 1, 48));
    r += alpha_sawtooth_sum(h, k) * k;
    let v = pi2 * &r;
    Ok(Complex::with_val(ctx.precision_bits(), (v, 0)))
}

/// `beta_{h,k} = (8 pi^2 i k / 3) sum (-1)^l ((hl/k)) B_3(l/2k) - 7 k zeta(3) / (2 pi)`.
pub fn beta_closed_form(h: i64, k: i64, ctx: &PrecisionContext) -> Result<Complex> {
    require_odd(k)?;
    beta_from_sum(&beta_sawtooth_sum(h, k), k, ctx)
}

fn beta_from_sum(sum: &Rational, k: i64, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let pi = Float::with_val(prec, Constant::Pi);
    let im = Float::with_val(prec, pi.square_ref()) * (sum * Rational::from((8 * k, 3)));
    let re = -zeta_value(3, &wctx)? * Rational::from((7 * k, 2)) / pi;
    Ok(Complex::with_val(ctx.precision_bits(), (re, im)))
}

/// `alpha_{h,k} = k sum_{l=1}^{2k} (-1)^l B_2(l/2k) Li_2(zeta_k^{hl})`.
pub fn alpha_via_polylog(h: i64, k: i64, ctx: &PrecisionContext) -> Result<Complex> {
    require_odd(k)?;
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let mut s = Complex::new(prec);
    for l in 1..=2 * k {
        let root = UnitPhase::new(Rational::from((2 * h * l, k))).to_complex(prec);
        let li = polylog(2, &root, &wctx)?;
        let b2 = bernoulli_poly(2, &Rational::from((l, 2 * k))) * sign(l);
        s += li * Float::with_val(prec, &b2);
    }
    Ok(Complex::with_val(ctx.precision_bits(), s * k))
}

/// `beta_{h,k}` from its definition with fractional parts `{hl/k}` in place
/// of the sawtooth.
pub fn beta_via_fractional_parts(h: i64, k: i64, ctx: &PrecisionContext) -> Result<Complex> {
    require_odd(k)?;
    let mut s = Rational::new();
    for l in 1..=2 * k {
        let (frac, _) = Rational::from((h * l, k)).fract_floor(Integer::new());
        s += frac * bernoulli_poly(3, &Rational::from((l, 2 * k))) * sign(l);
    }
    beta_from_sum(&s, k, ctx)
}

/// `a = Log(omega_{h,k} / (2 omega_{2h,k}^2))`, `b = a^2 + alpha`,
/// `c = (pi / 2k) a + beta` for odd `k`.
pub fn abc_constants(h: i64, k: i64, ctx: &PrecisionContext) -> Result<AbcConstants> {
    require_odd(k)?;
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let a = log_multiplier_ratio(h, k, prec)?;
    let alpha = alpha_closed_form(h, k, &wctx)?;
    let beta = beta_closed_form(h, k, &wctx)?;
    let b = Complex::with_val(prec, a.square_ref()) + &alpha;
    let pi = Float::with_val(prec, Constant::Pi);
    let c = Complex::with_val(prec, &a * (pi / (2 * k))) + &beta;
    let p = ctx.precision_bits();
    Ok(AbcConstants {
        a: Complex::with_val(p, a),
        b: Complex::with_val(p, b),
        c: Complex::with_val(p, c),
        alpha: Complex::with_val(p, alpha),
        beta: Complex::with_val(p, beta),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dist(a: &Complex, b: &Complex) -> f64 {
        Float::with_val(a.prec().0, Complex::with_val(a.prec().0, a - b).abs_ref()).to_f64()
    }

    #[test]
    fn constants_at_zero_one() {
        let ctx = PrecisionContext::default();
        let abc = abc_constants(0, 1, &ctx).unwrap();
        let ln2 = Float::with_val(192, Constant::Log2);
        let pi = ctx.pi();
        let b = Float::with_val(192, ln2.square_ref()) + Float::with_val(192, pi.square_ref()) / 24u32;
        assert!(dist(&abc.b, &Complex::with_val(192, (b, 0))) < 1e-50);
        let z3 = zeta_value(3, &ctx).unwrap();
        let c = -Float::with_val(192, &pi * &ln2) / 2u32 - z3 * 7u32 / (pi * 2u32);
        assert!(dist(&abc.c, &Complex::with_val(192, (c, 0))) < 1e-50);
    }

    #[test]
    fn dual_representations() {
        let ctx = PrecisionContext::default();
        for (h, k) in [(0, 1), (1, 3), (2, 3), (2, 5), (3, 7)] {
            let a1 = alpha_closed_form(h, k, &ctx).unwrap();
            let a2 = alpha_via_polylog(h, k, &ctx).unwrap();
            assert!(dist(&a1, &a2) < 1e-35, "alpha ({h},{k}): {}", dist(&a1, &a2));
            let b1 = beta_closed_form(h, k, &ctx).unwrap();
            let b2 = beta_via_fractional_parts(h, k, &ctx).unwrap();
            assert!(dist(&b1, &b2) < 1e-50, "beta ({h},{k})");
        }
    }

    #[test]
    fn even_k_rejected() {
        let ctx = PrecisionContext::default();
        assert!(abc_constants(1, 2, &ctx).is_err());
    }
}
