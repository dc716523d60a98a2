use rayon::prelude::*;
use rug::float::Constant;
use rug::{Complex, Float, Integer};

use super::coefficients::{arc_phase, coefficient_table_shared, NShared};
use crate::error::Result;
use crate::modarith::{gcd, log_multiplier_ratio};
use crate::precision::PrecisionContext;
use crate::specfun::{bessel_i, bessel_integral_ii, bessel_integral_ii_leading};

/// Guard bits for per-arc arithmetic; accumulators carry twice as many.
const GUARD: u32 = 32;

/// How the Bessel-type integral `II` is evaluated inside the second-moment
/// sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum IiEvaluation {
    /// Adaptive quadrature of the defining integral.
    #[default]
    Quadrature,
    /// The large-argument leading term `sqrt(pi/2) e^x / x^{3/2}`.
    LeadingTerm,
}

/// A sum over the odd-denominator arcs `h/k`, `k <= floor(sqrt n)`, with
/// its per-`k` contributions in ascending `k`.
#[derive(Debug, Clone)]
pub struct AsymptoticSum {
    pub n: u64,
    pub value: Complex,
    pub per_k: Vec<(i64, Complex)>,
}

impl AsymptoticSum {
    pub fn real(&self) -> Float {
        self.value.real().clone()
    }
}

/// `floor(sqrt(n))`.
pub fn farey_order(n: u64) -> i64 {
    Integer::from(n).sqrt().to_i64().expect("sqrt of u64 fits i64")
}

fn odd_denominators(n: u64) -> Vec<i64> {
    (1..=farey_order(n)).step_by(2).collect()
}

/// Bessel values at `X_k(n)` shared by every `h` of one denominator.
struct ArcBessel {
    i: [Float; 4],
    ii: Option<Float>,
}

fn arc_bessel(k: i64, shared: &NShared, ctx: &PrecisionContext, ii: Option<IiEvaluation>) -> Result<ArcBessel> {
    let wctx = ctx.with_extra_bits(GUARD);
    let x = shared.bessel_argument(k);
    let i = [
        bessel_i(0.0, &x, &wctx)?,
        bessel_i(1.0, &x, &wctx)?,
        bessel_i(2.0, &x, &wctx)?,
        bessel_i(3.0, &x, &wctx)?,
    ];
    let ii = match ii {
        None => None,
        Some(IiEvaluation::Quadrature) => Some(bessel_integral_ii(&x, &wctx)?),
        Some(IiEvaluation::LeadingTerm) => Some(bessel_integral_ii_leading(&x, &wctx)),
    };
    Ok(ArcBessel { i, ii })
}

fn s1_summand(h: i64, k: i64, shared: &NShared, bes: &ArcBessel, prec: u32) -> Result<Complex> {
    let w = arc_phase(h, k, shared.n)?.to_complex(prec);
    let a = log_multiplier_ratio(h, k, prec)?;
    let pi = Float::with_val(prec, Constant::Pi);
    let sqrt2 = Float::with_val(prec, 2u32).sqrt();
    let m = Float::with_val(prec, &shared.m);
    let sq = &shared.sqrt_m;
    let kf = Float::with_val(prec, k);

    let quarter_log = Float::with_val(prec, &shared.log_2m / 4u32);
    let coeff1 = Float::with_val(prec, &pi * &bes.i[1]) / (Float::with_val(prec, &kf * sq));
    let mut bracket = Complex::with_val(prec, &a + &quarter_log) * coeff1;
    let pi2 = Float::with_val(prec, pi.square_ref());
    let k2 = Float::with_val(prec, kf.square_ref());
    bracket += pi2 * &bes.i[2] / (Float::with_val(prec, &sqrt2 * &k2) * 4u32 * &m);
    bracket += Float::with_val(prec, &sqrt2 * 3u32) * &bes.i[0] / &m;
    Ok(Complex::with_val(prec, &w * &bracket))
}

fn s2_summand(h: i64, k: i64, shared: &NShared, bes: &ArcBessel, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + GUARD;
    let t = coefficient_table_shared(h, k, shared, &ctx.with_extra_bits(GUARD))?;
    let l = &shared.log_2m;
    let mut total = Complex::new(prec);
    for (g, i) in t.gamma.iter().zip(bes.i.iter()) {
        total += Complex::with_val(prec, g * i);
    }
    let mut with_log = Complex::new(prec);
    for (d, i) in t.delta.iter().zip(bes.i.iter()) {
        with_log += Complex::with_val(prec, d * i);
    }
    total += with_log * l;
    let l2 = Float::with_val(prec, l.square_ref());
    total += Complex::with_val(prec, &t.varrho * &bes.i[1]) * l2;
    let ii = bes.ii.as_ref().expect("II evaluated for the second moment");
    total += Complex::with_val(prec, &t.psi * ii);
    Ok(total)
}

/// One summand of the first-moment sum; `h` need not be reduced mod `k`.
pub fn s1_term(h: i64, k: i64, n: u64, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + GUARD;
    let shared = NShared::new(n, prec)?;
    let bes = arc_bessel(k, &shared, ctx, None)?;
    Ok(Complex::with_val(ctx.precision_bits(), s1_summand(h, k, &shared, &bes, prec)?))
}

/// One summand of the second-moment sum; `h` need not be reduced mod `k`.
pub fn s2_term(h: i64, k: i64, n: u64, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + GUARD;
    let shared = NShared::new(n, prec)?;
    let bes = arc_bessel(k, &shared, ctx, Some(IiEvaluation::Quadrature))?;
    Ok(Complex::with_val(ctx.precision_bits(), s2_summand(h, k, &shared, &bes, ctx)?))
}

/// Sums `summand` over the arcs, denominators in parallel; each
/// denominator is summed in ascending `h` and the per-`k` results are
/// combined in ascending `k` at doubled guard precision, so the result does
/// not depend on scheduling.
fn arc_sum<F>(n: u64, ctx: &PrecisionContext, ii: Option<IiEvaluation>, summand: F) -> Result<AsymptoticSum>
where
    F: Fn(i64, i64, &NShared, &ArcBessel) -> Result<Complex> + Sync,
{
    let prec = ctx.precision_bits() + GUARD;
    let acc_prec = ctx.precision_bits() + 2 * GUARD;
    let shared = NShared::new(n, prec)?;
    let per_k = odd_denominators(n)
        .into_par_iter()
        .map(|k| {
            let bes = arc_bessel(k, &shared, ctx, ii)?;
            let mut acc = Complex::new(acc_prec);
            for h in 0..k {
                if gcd(h, k) == 1 {
                    acc += summand(h, k, &shared, &bes)?;
                }
            }
            Ok((k, acc))
        })
        .collect::<Result<Vec<_>>>()?;
    let mut total = Complex::new(acc_prec);
    for (_, v) in &per_k {
        total += v;
    }
    let p = ctx.precision_bits();
    Ok(AsymptoticSum {
        n,
        value: Complex::with_val(p, total),
        per_k: per_k.into_iter().map(|(k, v)| (k, Complex::with_val(p, v))).collect(),
    })
}

/// The first-moment arc sum with every contribution retained.
pub fn s1_asymptotic_detail(n: u64, ctx: &PrecisionContext) -> Result<AsymptoticSum> {
    let prec = ctx.precision_bits() + GUARD;
    arc_sum(n, ctx, None, |h, k, shared, bes| s1_summand(h, k, shared, bes, prec))
}

/// `s_1^{[a]}(n)`: the asymptotic formula for `s_1(n)` without its error
/// term (real part; the imaginary part cancels).
pub fn s1_asymptotic(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    Ok(s1_asymptotic_detail(n, ctx)?.real())
}

/// The second-moment arc sum with `II` evaluated as requested.
pub fn s2_asymptotic_detail(n: u64, ctx: &PrecisionContext, ii: IiEvaluation) -> Result<AsymptoticSum> {
    arc_sum(n, ctx, Some(ii), |h, k, shared, bes| s2_summand(h, k, shared, bes, ctx))
}

/// `s_2^{[a]}(n)`: the asymptotic formula for `s_2(n)` without its error
/// term.
pub fn s2_asymptotic(n: u64, ctx: &PrecisionContext) -> Result<Float> {
    Ok(s2_asymptotic_detail(n, ctx, IiEvaluation::Quadrature)?.real())
}
