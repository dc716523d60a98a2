use rug::float::Constant;
use rug::ops::Pow;
use rug::Complete;
use rug::{Float, Integer, Rational};

use super::bernoulli::bernoulli_number;
use crate::error::{invalid, Result};
use crate::precision::PrecisionContext;

/// `zeta(s)` for `s` in `{2, 3, 4}`.
pub fn zeta_value(s: u32, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.precision_bits();
    let pi = Float::with_val(prec, Constant::Pi);
    match s {
        2 => Ok(pi.square() / 6u32),
        3 => Ok(zeta3_apery(prec)),
        4 => Ok(Float::with_val(prec, pi.square_ref()).square() / 90u32),
        _ => Err(invalid(format!("zeta_value supports s in {{2, 3, 4}}, got {s}"))),
    }
}

/// `zeta(3) = (5/2) sum_{n>=1} (-1)^(n+1) / (n^3 C(2n, n))`.
pub fn zeta3_apery(prec: u32) -> Float {
    let work = prec + 16;
    let mut sum = Float::new(work);
    let mut binom = Integer::from(1);
    // Terms shrink by a factor of about 4, giving two bits per term.
    let terms = work / 2 + 4;
    for n in 1..=terms {
        binom *= 2 * (2 * n - 1);
        binom /= n;
        let den = Integer::from(n).pow(3) * &binom;
        let term = Float::with_val(work, Rational::from((1, den)));
        if n % 2 == 1 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    Float::with_val(prec, sum * 5u32 / 2u32)
}

/// `zeta(s)` for integer `s >= 2` through Borwein's acceleration of the
/// alternating eta series, `zeta(s) = eta(s) / (1 - 2^(1-s))`.
pub fn zeta_borwein(s: u32, prec: u32) -> Result<Float> {
    if s < 2 {
        return Err(invalid(format!("zeta_borwein needs s >= 2, got {s}")));
    }
    let work = prec + 32;
    // Error is about 3 / (3 + sqrt 8)^n, and log2(3 + sqrt 8) > 2.54.
    let n = (work as f64 / 2.54).ceil() as u32 + 2;
    let mut d = Vec::with_capacity(n as usize + 1);
    let mut acc = Rational::new();
    let mut term = Rational::from((1, n));
    for i in 0..=n {
        // term_i = (n+i-1)! 4^i / ((n-i)! (2i)!)
        if i > 0 {
            term *= Rational::from((
                Integer::from(n + i - 1) * 4u32 * (n - i + 1),
                Integer::from(2 * i - 1) * (2 * i),
            ));
        }
        acc += &term;
        d.push(Rational::from(&acc * n));
    }
    let dn = d[n as usize].clone();
    let mut sum = Float::new(work);
    for k in 0..n {
        let c = Rational::from(&d[k as usize] - &dn);
        let mut t = Float::with_val(work, &c);
        t /= Float::with_val(work, k + 1).pow(s);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
    }
    let eta = -sum / Float::with_val(work, &dn);
    let factor = Float::with_val(work, 1u32) - Float::with_val(work, Float::i_exp(1, 1 - s as i32));
    Ok(Float::with_val(prec, eta / factor))
}

/// `zeta(s)` for integer `s >= 2`: exact Bernoulli form for even `s`.
pub fn zeta_int(s: u32, prec: u32) -> Result<Float> {
    if s < 2 {
        return Err(invalid(format!("zeta_int needs s >= 2, got {s}")));
    }
    if s == 3 {
        return Ok(zeta3_apery(prec));
    }
    if s % 2 == 1 {
        return zeta_borwein(s, prec);
    }
    // zeta(2m) = (-1)^(m+1) B_2m (2 pi)^(2m) / (2 (2m)!)
    let work = prec + 16;
    let mut b = bernoulli_number(s as usize).abs();
    b /= Integer::factorial(s).complete() * 2u32;
    let two_pi = Float::with_val(work, Constant::Pi) * 2u32;
    Ok(Float::with_val(prec, two_pi.pow(s) * b))
}

/// `zeta(-m)` for `m >= 0` as an exact rational.
pub fn zeta_nonpositive(m: u32) -> Rational {
    if m == 0 {
        return Rational::from((-1, 2));
    }
    -bernoulli_number(m as usize + 1) / (m + 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: &Float, b: &Float, tol: f64) -> bool {
        let d = Float::with_val(a.prec(), a - b).abs();
        d <= Float::with_val(a.prec(), b.abs_ref()) * tol
    }

    #[test]
    fn closed_forms() {
        let ctx = PrecisionContext::default();
        let pi = ctx.pi();
        let z2 = zeta_value(2, &ctx).unwrap();
        assert!(close(&z2, &(pi.clone().square() / 6u32), 1e-55));
        let z4 = zeta_value(4, &ctx).unwrap();
        assert!(close(&z4, &(pi.pow(4u32) / 90u32), 1e-55));
        assert!(zeta_value(5, &ctx).is_err());
    }

    #[test]
    fn zeta3_two_series_agree() {
        for prec in [64, 192, 512] {
            let a = zeta3_apery(prec);
            let b = zeta_borwein(3, prec).unwrap();
            assert!(close(&a, &b, 2f64.powi(-(prec as i32) + 4)), "prec {prec}");
        }
        let z = zeta3_apery(192);
        let ref_val = Float::with_val(192, Float::parse("1.2020569031595942853997381615114499907649862923405").unwrap());
        assert!(close(&z, &ref_val, 1e-48));
    }

    #[test]
    fn integer_arguments() {
        for s in 2..=12 {
            let a = zeta_int(s, 192).unwrap();
            let b = zeta_borwein(s, 192).unwrap();
            assert!(close(&a, &b, 1e-55), "s = {s}");
        }
        assert_eq!(zeta_nonpositive(0), Rational::from((-1, 2)));
        assert_eq!(zeta_nonpositive(1), Rational::from((-1, 12)));
        assert_eq!(zeta_nonpositive(2), 0);
        assert_eq!(zeta_nonpositive(3), Rational::from((1, 120)));
    }
}
