use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float};

use super::zeta::{zeta_int, zeta_nonpositive};
use crate::error::{invalid, Error, Result};
use crate::precision::PrecisionContext;

/// `Li_ell(w) = sum_{n>=1} w^n / n^ell` on the closed unit disk (`ell >= 2`),
/// or `-Log(1 - w)` for `ell = 1`, `|w| < 1`.
///
/// For `|w| <= 1/2` the defining series is summed with the tail bound
/// `|w|^(N+1) / ((N+1)^ell (1 - |w|))`. Closer to the unit circle the
/// expansion in `mu = Log w`,
/// `sum_{j != ell-1} zeta(ell-j) mu^j / j! + mu^(ell-1) (H_{ell-1} - Log(-mu)) / (ell-1)!`,
/// is used instead; it converges for `|mu| < 2 pi`.
pub fn polylog(ell: u32, w: &Complex, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits();
    let work = prec + 32;
    let w = Complex::with_val(work, w);
    let modulus = Float::with_val(work, w.abs_ref());
    let slack = Float::with_val(work, Float::i_exp(1, -(prec as i32 / 2)));
    if modulus > Float::with_val(work, &slack + 1u32) {
        return Err(invalid(format!("polylog needs |w| <= 1, got |w| = {}", modulus.to_f64())));
    }
    if ell == 0 {
        return Err(invalid("polylog order must be >= 1"));
    }
    if ell == 1 {
        if modulus >= Float::with_val(work, 1u32) - &slack {
            return Err(invalid("Li_1 diverges on |w| = 1"));
        }
        let one_minus = Complex::with_val(work, 1u32) - &w;
        return Ok(Complex::with_val(prec, -one_minus.ln()));
    }
    let value = if modulus <= 0.5f64 {
        direct_sum(ell, &w, &modulus, work, &ctx.series_stop())?
    } else {
        log_series(ell, &w, work, &ctx.series_stop())?
    };
    Ok(Complex::with_val(prec, value))
}

fn direct_sum(ell: u32, w: &Complex, modulus: &Float, prec: u32, stop: &Float) -> Result<Complex> {
    let mut sum = Complex::new(prec);
    if modulus.is_zero() {
        return Ok(sum);
    }
    let mut power = w.clone();
    let mut mod_power = modulus.clone();
    let geometric = Float::with_val(prec, 1u32) - modulus;
    for n in 1u32..=(64 * prec) {
        let denom = Float::with_val(prec, n).pow(ell);
        sum += Complex::with_val(prec, &power / &denom);
        power *= w;
        mod_power *= modulus;
        let next = Float::with_val(prec, n + 1).pow(ell);
        let tail = Float::with_val(prec, &mod_power / next) / &geometric;
        if tail <= Float::with_val(prec, sum.abs_ref()) * stop {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "polylog direct sum",
        detail: format!("ell = {ell}"),
    })
}

fn log_series(ell: u32, w: &Complex, prec: u32, stop: &Float) -> Result<Complex> {
    let mu = Complex::with_val(prec, w.ln_ref());
    if mu.real().is_zero() && mu.imag().is_zero() {
        return Ok(Complex::with_val(prec, (zeta_int(ell, prec)?, Float::new(prec))));
    }
    let mu_abs = Float::with_val(prec, mu.abs_ref());
    let two_pi = Float::with_val(prec, Constant::Pi) * 2u32;
    let ratio = Float::with_val(prec, &mu_abs / &two_pi);
    if ratio >= 0.75f64 {
        return Err(Error::NonConvergence {
            what: "polylog log-series",
            detail: format!("|Log w| = {} too close to 2 pi", mu_abs.to_f64()),
        });
    }
    let mut sum = Complex::new(prec);
    // mu^j / j!
    let mut power = Complex::with_val(prec, 1u32);
    let mut small_run = 0;
    let max_terms = 8 * prec + 64;
    for j in 0..max_terms {
        if j > 0 {
            power *= &mu;
            power /= j;
        }
        let term = if j + 1 == ell {
            let mut harmonic = Float::new(prec);
            for i in 1..ell {
                harmonic += Float::with_val(prec, 1u32) / i;
            }
            let log_neg = Complex::with_val(prec, -&mu).ln();
            Complex::with_val(prec, &power * (Complex::with_val(prec, (harmonic, 0u32)) - log_neg))
        } else if j + 1 < ell {
            let z = zeta_int(ell - j, prec)?;
            Complex::with_val(prec, &power * &z)
        } else {
            let z = zeta_nonpositive(j - ell);
            if z == 0 {
                continue;
            }
            Complex::with_val(prec, &power * Float::with_val(prec, &z))
        };
        let mag = Float::with_val(prec, term.abs_ref());
        sum += term;
        if j > ell + 1 {
            // Remaining terms are dominated by 2 (|mu|/2 pi)^j times the
            // current magnitude growth; require two consecutive small terms.
            if mag <= Float::with_val(prec, sum.abs_ref()) * stop {
                small_run += 1;
                if small_run >= 2 {
                    return Ok(sum);
                }
            } else {
                small_run = 0;
            }
        }
    }
    Err(Error::NonConvergence {
        what: "polylog log-series",
        detail: format!("ell = {ell}, {max_terms} terms"),
    })
}
