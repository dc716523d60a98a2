use rug::float::Constant;
use rug::{Complex, Float, Integer, Rational};

use crate::error::{invalid, Error, Result};
use crate::modarith::{gcd, UnitPhase};
use crate::precision::PrecisionContext;
use crate::specfun::{bernoulli_poly, polylog, zeta_value};

/// Evaluation point of `L(q) = sum_r q^r / (r^2 (1 + q^r)^2)` at
/// `q = e^{(2 pi i / k)(h + i z)}`, with the data of its expansion near
/// `z = 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct LEvalContext {
    pub h: i64,
    pub k: i64,
    /// `lcm(k, 2)`.
    pub kappa: i64,
    pub z: Complex,
    pub indicator_even_k: bool,
    /// Order of the roots of unity `zeta_k^{h l}`.
    pub root_of_unity_order: i64,
    /// `{h l / k}` for `l = 1..=kappa`.
    pub fractional_parts: Vec<Rational>,
}

impl LEvalContext {
    pub fn new(h: i64, k: i64, z: Complex) -> Result<Self> {
        if k < 1 || !(0..k).contains(&h) || gcd(h, k) != 1 {
            return Err(invalid(format!("need 0 <= h < k coprime, got {h}/{k}")));
        }
        if !z.real().is_sign_positive() || z.real().is_zero() {
            return Err(invalid("L(q) needs Re(z) > 0"));
        }
        let kappa = if k % 2 == 0 { k } else { 2 * k };
        let fractional_parts = (1..=kappa)
            .map(|l| Rational::from((h * l, k)).fract_floor(Integer::new()).0)
            .collect();
        Ok(LEvalContext {
            h,
            k,
            kappa,
            z,
            indicator_even_k: k % 2 == 0,
            root_of_unity_order: k,
            fractional_parts,
        })
    }

    /// `q = e^{2 pi i h / k} e^{-2 pi z / k}`.
    pub fn q(&self, prec: u32) -> Complex {
        let root = UnitPhase::new(Rational::from((2 * self.h, self.k))).to_complex(prec);
        let pi = Float::with_val(prec, Constant::Pi);
        let decay = Complex::with_val(prec, &self.z * (pi * 2u32 / self.k));
        root * (-decay).exp()
    }
}

/// `L(q)` by direct summation, stopped once the tail bound
/// `|q|^(N+1) / ((N+1)^2 (1-|q|)^3)` falls below the series tolerance.
pub fn l_direct(lc: &LEvalContext, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + 32;
    let q = lc.q(prec);
    let mod_q = Float::with_val(prec, q.abs_ref());
    if mod_q >= 1u32 {
        return Err(invalid("|q| must be below 1"));
    }
    let gap = Float::with_val(prec, 1u32) - &mod_q;
    let gap3 = Float::with_val(prec, gap.square_ref()) * &gap;
    let stop = ctx.series_stop();
    let mut sum = Complex::new(prec);
    let mut qr = Complex::with_val(prec, 1u32);
    let mut mod_qr = Float::with_val(prec, 1u32);
    let max_terms: u64 = 50_000_000;
    for r in 1..=max_terms {
        qr *= &q;
        mod_qr *= &mod_q;
        let one_plus = Complex::with_val(prec, &qr + 1u32);
        let den = one_plus.square() * (r * r);
        sum += Complex::with_val(prec, &qr / &den);
        let next = Float::with_val(prec, r + 1).square();
        let tail = Float::with_val(prec, &mod_qr * &mod_q) / next / &gap3;
        if tail <= Float::with_val(prec, sum.abs_ref()) * &stop {
            return Ok(Complex::with_val(ctx.precision_bits(), sum));
        }
    }
    Err(Error::NonConvergence {
        what: "L(q) direct sum",
        detail: format!("tail bound not met after {max_terms} terms"),
    })
}

/// The five-term expansion of `L(q)` as `z -> 0`.
pub fn l_asymptotic(lc: &LEvalContext, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let (h, k, kappa) = (lc.h, lc.k, lc.kappa);
    let pi = Float::with_val(prec, Constant::Pi);
    let pi2 = Float::with_val(prec, pi.square_ref());
    let z = Complex::with_val(prec, &lc.z);
    let z2 = Complex::with_val(prec, z.square_ref());
    let k2 = Integer::from(k * k);

    let mut total = Complex::new(prec);
    if lc.indicator_even_k {
        let c = Float::with_val(prec, &pi2 / Integer::from(&k2 * 24u32));
        total -= Complex::with_val(prec, &c / &z2);
    }

    let mut constant = Complex::new(prec);
    let mut linear = Rational::new();
    for l in 1..=kappa {
        let sign = if l % 2 == 0 { 1 } else { -1 };
        let x = Rational::from((l, kappa));
        let root = UnitPhase::new(Rational::from((2 * h * l, k))).to_complex(prec);
        let b2 = bernoulli_poly(2, &x) * sign;
        constant += polylog(2, &root, &wctx)? * Float::with_val(prec, &b2);
        linear += (&lc.fractional_parts[(l - 1) as usize] * bernoulli_poly(3, &x)) * sign;
    }
    total += constant * Rational::from((kappa, 2));

    let lin_coeff = Float::with_val(prec, &pi2 * 2u32) * Rational::from((kappa * kappa, 3 * k)) * &linear;
    total += Complex::with_val(prec, &z * Complex::with_val(prec, (0, lin_coeff)));

    total += Complex::with_val(prec, &z2 * Float::with_val(prec, &pi2 / Integer::from(&k2 * 8u32)));

    let mut zc = Float::with_val(prec, (kappa * kappa) as u64) / Float::with_val(prec, &pi * (2 * k));
    if !lc.indicator_even_k {
        zc += Float::with_val(prec, 3 * k) / Float::with_val(prec, &pi * 2u32);
    }
    zc *= zeta_value(3, &wctx)?;
    total -= Complex::with_val(prec, &z * zc);
    Ok(Complex::with_val(ctx.precision_bits(), total))
}
