use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use super::abc::{abc_constants, AbcConstants};
use crate::error::{invalid, Result};
use crate::modarith::{multiplier_quotient, UnitPhase};
use crate::precision::PrecisionContext;

/// Quantities that depend only on `n`: `m = 24n + 1`, `sqrt(m)` and
/// `log(2m)`, shared by every arc.
#[derive(Debug, Clone)]
pub struct NShared {
    pub n: u64,
    pub m: Integer,
    pub sqrt_m: Float,
    pub log_2m: Float,
}

impl NShared {
    pub fn new(n: u64, prec: u32) -> Result<Self> {
        if n == 0 {
            return Err(invalid("n must be >= 1"));
        }
        let m = Integer::from(n) * 24u32 + 1u32;
        let sqrt_m = Float::with_val(prec, &m).sqrt();
        let log_2m = Float::with_val(prec, Integer::from(&m * 2u32)).ln();
        Ok(NShared { n, m, sqrt_m, log_2m })
    }

    /// `X_k(n) = pi sqrt(24n+1) / (6 sqrt(2) k)`.
    pub fn bessel_argument(&self, k: i64) -> Float {
        let prec = self.sqrt_m.prec();
        let pi = Float::with_val(prec, Constant::Pi);
        let sqrt2 = Float::with_val(prec, 2u32).sqrt();
        pi * &self.sqrt_m / (sqrt2 * (6 * k))
    }
}

/// `omega_{h,k} / omega_{2h,k} e^{-2 pi i n h / k}`, the phase multiplying
/// every coefficient of the arc at `h/k`.
pub fn arc_phase(h: i64, k: i64, n: u64) -> Result<UnitPhase> {
    let twist = Rational::from((Integer::from(n) * h * 2u32, Integer::from(k)));
    Ok(&multiplier_quotient(h, k)? * &UnitPhase::new(-twist))
}

/// Per-arc constants and Bessel coefficients for fixed `(h, k, n)`.
#[derive(Debug, Clone, PartialEq)]
pub struct TermCoefficients {
    pub h: i64,
    pub k: i64,
    pub n: u64,
    pub a: Complex,
    pub b: Complex,
    pub c: Complex,
    pub alpha: Complex,
    pub beta: Complex,
    pub gamma: [Complex; 4],
    pub delta: [Complex; 3],
    pub varrho: Complex,
    pub psi: Complex,
    pub x: Float,
}

impl TermCoefficients {
    /// `b - a^2 - alpha`, zero by construction.
    pub fn b_defect(&self) -> Complex {
        let prec = self.b.prec().0;
        let a2 = Complex::with_val(prec, self.a.square_ref());
        Complex::with_val(prec, &self.b - &a2) - &self.alpha
    }

    /// `c - (pi / 2k) a - beta`, zero by construction.
    pub fn c_defect(&self) -> Complex {
        let prec = self.c.prec().0;
        let pi = Float::with_val(prec, Constant::Pi);
        let pa = Complex::with_val(prec, &self.a * (pi / (2 * self.k)));
        Complex::with_val(prec, &self.c - &pa) - &self.beta
    }
}

/// Every coefficient of the arc `h/k` at `n`, for odd `k`.
pub fn coefficient_table(h: i64, k: i64, n: u64, ctx: &PrecisionContext) -> Result<TermCoefficients> {
    let prec = ctx.precision_bits() + 32;
    let shared = NShared::new(n, prec)?;
    coefficient_table_shared(h, k, &shared, ctx)
}

pub(crate) fn coefficient_table_shared(
    h: i64,
    k: i64,
    shared: &NShared,
    ctx: &PrecisionContext,
) -> Result<TermCoefficients> {
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let AbcConstants { a, b, c, alpha, beta } = abc_constants(h, k, &wctx)?;
    let w = arc_phase(h, k, shared.n)?.to_complex(prec);
    let pi = Float::with_val(prec, Constant::Pi);
    let sqrt2 = Float::with_val(prec, 2u32).sqrt();
    let m = Float::with_val(prec, &shared.m);
    let sq = &shared.sqrt_m;
    let m32 = Float::with_val(prec, &m * sq);
    let m2 = Float::with_val(prec, m.square_ref());
    let kf = Float::with_val(prec, k);
    let scale = |c: &Complex, f: Float| Complex::with_val(prec, c * f);

    let am3 = Complex::with_val(prec, &a * &m) - 3u32;
    let gamma0 = scale(&Complex::with_val(prec, &w * &am3), Float::with_val(prec, &sqrt2 * 6u32) / &m2);
    let bm3 = Complex::with_val(prec, &b * &m) + 3u32;
    let gamma1 = scale(&Complex::with_val(prec, &w * &bm3), Float::with_val(prec, &pi / &kf) / &m32);
    let gamma2 = scale(
        &Complex::with_val(prec, &w * &c),
        Float::with_val(prec, &pi / &sqrt2) / Float::with_val(prec, &kf * &m),
    );
    let k3 = Float::with_val(prec, (&kf).pow(3u32));
    let gamma3 = scale(
        &w,
        Float::with_val(prec, (&pi).pow(3u32)) * 3u32 / (k3 * 32u32 * &m32),
    );
    let delta0 = scale(&w, Float::with_val(prec, 3u32) / Float::with_val(prec, &sqrt2 * &m));
    let delta1 = scale(
        &Complex::with_val(prec, &w * &a),
        Float::with_val(prec, &pi / (Float::with_val(prec, &kf * sq) * 2u32)),
    );
    let k2 = Float::with_val(prec, kf.square_ref());
    let delta2 = scale(
        &w,
        Float::with_val(prec, pi.square_ref()) / (Float::with_val(prec, &sqrt2 * &k2) * 8u32 * &m),
    );
    let ksq = Float::with_val(prec, &kf * sq);
    let varrho = scale(&w, Float::with_val(prec, &pi / &ksq) / 16u32);
    let psi = scale(&w, -Float::with_val(prec, 1u32) / (ksq * 4u32));

    let p = ctx.precision_bits();
    let round = |c: Complex| Complex::with_val(p, c);
    Ok(TermCoefficients {
        h,
        k,
        n: shared.n,
        a: round(a),
        b: round(b),
        c: round(c),
        alpha: round(alpha),
        beta: round(beta),
        gamma: [round(gamma0), round(gamma1), round(gamma2), round(gamma3)],
        delta: [round(delta0), round(delta1), round(delta2)],
        varrho: round(varrho),
        psi: round(psi),
        x: Float::with_val(p, shared.bessel_argument(k)),
    })
}
