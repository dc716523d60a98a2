use rug::float::Constant;
use rug::{Complex, Float, Integer};

use crate::error::{invalid, Error, Result};
use crate::modarith::kloosterman_a;
use crate::precision::PrecisionContext;
use crate::specfun::bessel_i_three_halves;

/// Rounded value of the truncated Rademacher series together with the
/// distance of the unrounded sum from that integer.
#[derive(Debug, Clone, PartialEq)]
pub struct RademacherValue {
    pub value: Integer,
    pub residual: Float,
    pub terms: u64,
}

/// `ceil(2 sqrt(n))`.
pub fn default_truncation(n: u64) -> u64 {
    let s = Integer::from(4 * n).sqrt();
    let s = s.to_u64().expect("fits");
    if s * s == 4 * n {
        s
    } else {
        s + 1
    }
}

/// `2 pi (24n-1)^{-3/4} sum_{k<=K} A_k(n)/k I_{3/2}(pi sqrt(24n-1)/(6k))`,
/// rounded. Fails when the unrounded sum is not within `1/2` of an integer.
pub fn rademacher_p(n: u64, truncation: Option<u64>, ctx: &PrecisionContext) -> Result<RademacherValue> {
    if n == 0 {
        return Err(invalid("rademacher_p needs n >= 1"));
    }
    let terms = truncation.unwrap_or_else(|| default_truncation(n));
    if terms == 0 {
        return Err(invalid("truncation must be >= 1"));
    }
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let pi = Float::with_val(prec, Constant::Pi);
    let m = Float::with_val(prec, 24 * n - 1);
    let sqrt_m = Float::with_val(prec, m.sqrt_ref());
    let mut sum = Complex::new(prec);
    for k in 1..=terms {
        let a = kloosterman_a(k as i64, n as i64, prec)?;
        let x = Float::with_val(prec, &pi * &sqrt_m) / (6 * k);
        let i = bessel_i_three_halves(&x, &wctx)?;
        sum += a * (i / k);
    }
    let pref = Float::with_val(prec, &pi * 2u32) / Float::with_val(prec, m.sqrt_ref()) / m.root(4);
    let total = sum * pref;
    let re = total.real().clone();
    let rounded = re.clone().round();
    let residual = Float::with_val(ctx.precision_bits(), &re - &rounded).abs();
    let value = rounded.to_integer().expect("finite sum");
    if residual.is_nan() || residual >= 0.5f64 {
        return Err(Error::RademacherResidual {
            n,
            terms,
            residual: residual.to_string_radix(10, Some(6)),
        });
    }
    Ok(RademacherValue { value, residual, terms })
}
