//! Modified Bessel functions `I_nu`, `K_nu` of real order and positive
//! real argument, plus `nu`-derivatives of `I_nu` at integer order.

use rug::float::Constant;
use rug::Complete;
use rug::ops::Pow;
use rug::{Float, Integer, Rational};

use super::quad::integrate;
use crate::error::{invalid, Error, Result};
use crate::precision::PrecisionContext;

/// Guard bits carried by the series evaluations.
const GUARD_BITS: u32 = 32;

fn check_arg(x: &Float) -> Result<()> {
    if !x.is_finite() || x.is_sign_negative() && !x.is_zero() {
        return Err(invalid(format!("Bessel argument must be finite and >= 0, got {x}")));
    }
    Ok(())
}

fn is_integer(nu: f64) -> bool {
    nu.fract() == 0.0
}

/// Extra bits lost to the `e^{2x}` cancellation in the `K` series.
fn cancellation_bits(x: &Float) -> u32 {
    (2.9 * x.to_f64()).ceil().max(0.0) as u32
}

/// Ascending series for `I_nu(x)` at working precision `prec`.
fn i_series(nu: &Float, x: &Float, prec: u32, stop: &Float) -> Result<Float> {
    let half = Float::with_val(prec, x) / 2u32;
    let quarter_sq = Float::with_val(prec, half.square_ref());
    let nu1 = Float::with_val(prec, nu + 1u32);
    let mut term = Float::with_val(prec, (&half).pow(nu)) / nu1.gamma();
    let mut sum = term.clone();
    let limit = 64 + 8 * (x.to_f64() as u64) + 8 * u64::from(prec);
    for m in 1..=limit {
        let denom = Float::with_val(prec, nu + m) * m;
        term *= &quarter_sq;
        term /= &denom;
        sum += &term;
        // Once (x/2)^2 / (m (m + nu)) < 1/2 the tail is below the last term.
        let ratio_small = Float::with_val(prec, &quarter_sq * 2u32) < denom;
        if ratio_small && Float::with_val(prec, term.abs_ref()) <= Float::with_val(prec, sum.abs_ref()) * stop {
            return Ok(sum);
        }
    }
    Err(Error::NonConvergence {
        what: "Bessel I series",
        detail: format!("nu = {nu}, x = {x}"),
    })
}

/// `I_nu(x)` by the ascending series, relative error below the series
/// tolerance of `ctx`.
pub fn bessel_i(nu: f64, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_arg(x)?;
    if !nu.is_finite() {
        return Err(invalid("Bessel order must be finite"));
    }
    let prec = ctx.precision_bits();
    if is_integer(nu) && nu < 0.0 {
        return bessel_i(-nu, x, ctx);
    }
    if x.is_zero() {
        return match nu {
            0.0 => Ok(Float::with_val(prec, 1)),
            v if v > 0.0 => Ok(Float::new(prec)),
            _ => Err(invalid("I_nu(0) diverges for negative non-integer nu")),
        };
    }
    let work = prec + GUARD_BITS;
    let nu_f = Float::with_val(work, nu);
    let sum = i_series(&nu_f, x, work, &ctx.series_stop())?;
    Ok(Float::with_val(prec, sum))
}

/// `I_{3/2}(x) = sqrt(2/(pi x)) (cosh x - sinh(x)/x)`.
pub fn bessel_i_three_halves(x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_arg(x)?;
    if x.is_zero() {
        return Ok(Float::new(ctx.precision_bits()));
    }
    let work = ctx.precision_bits() + GUARD_BITS;
    let x = Float::with_val(work, x);
    let (sh, ch) = x.clone().sinh_cosh(Float::new(work));
    let pi = Float::with_val(work, Constant::Pi);
    let pref = (Float::with_val(work, 2u32) / (pi * &x)).sqrt();
    Ok(Float::with_val(ctx.precision_bits(), pref * (ch - sh / &x)))
}

/// `psi(1), ..., psi(count)` at integer arguments.
fn digamma_table(count: usize, prec: u32) -> Vec<Float> {
    let mut out = Vec::with_capacity(count);
    let mut cur = -Float::with_val(prec, Constant::Euler);
    for j in 1..=count {
        out.push(cur.clone());
        cur += Float::with_val(prec, 1u32) / j as u32;
    }
    out
}

/// `K_n(x)` for integer `n >= 0` by the logarithmic power series.
fn k_integer(n: u32, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.precision_bits();
    let work = prec + GUARD_BITS + cancellation_bits(x);
    let x = Float::with_val(work, x);
    let half = Float::with_val(work, &x / 2u32);
    let quarter_sq = Float::with_val(work, half.square_ref());
    let stop = Float::with_val(work, Float::i_exp(1, -(work as i32)));

    // Finite part: (1/2)(x/2)^-n sum_{k<n} (n-k-1)!/k! (-x^2/4)^k
    let mut finite = Float::new(work);
    let mut power = Float::with_val(work, 1u32);
    for k in 0..n {
        let coeff = Rational::from((
            Integer::factorial(n - k - 1).complete(),
            Integer::factorial(k).complete(),
        ));
        let mut t = Float::with_val(work, &power * &coeff);
        if k % 2 == 1 {
            t = -t;
        }
        finite += t;
        power *= &quarter_sq;
    }
    finite /= Float::with_val(work, (&half).pow(n)) * 2u32;

    let i_n = i_series(&Float::with_val(work, n), &x, work, &stop)?;
    let log_part = Float::with_val(work, half.ln_ref()) * &i_n;

    // Digamma series: (1/2)(x/2)^n sum_k (psi(k+1) + psi(n+k+1)) (x^2/4)^k / (k! (n+k)!)
    let limit = 64 + 8 * (x.to_f64() as usize) + 8 * work as usize;
    let psi = digamma_table(limit + n as usize + 2, work);
    let mut base = Float::with_val(work, 1u32) / Float::with_val(work, Integer::factorial(n).complete());
    let mut series = Float::new(work);
    let mut converged = false;
    for k in 0..limit {
        if k > 0 {
            base *= &quarter_sq;
            base /= Float::with_val(work, k) * (k + n as usize);
        }
        let t = Float::with_val(work, &psi[k] + &psi[k + n as usize]) * &base;
        series += &t;
        if k as f64 > quarter_sq.to_f64() && Float::with_val(work, t.abs_ref()) <= Float::with_val(work, series.abs_ref()) * &stop {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence {
            what: "Bessel K series",
            detail: format!("n = {n}, x = {x}"),
        });
    }
    series *= Float::with_val(work, (&half).pow(n)) / 2u32;

    let sign_odd = n % 2 == 1;
    let mut k = finite;
    if sign_odd {
        k += log_part;
        k -= series;
    } else {
        k -= log_part;
        k += series;
    }
    Ok(Float::with_val(prec, k))
}

/// `K_nu(x)` for `x > 0`: logarithmic series at integer order, otherwise
/// `(pi/2)(I_{-nu} - I_nu)/sin(pi nu)` at raised precision.
pub fn bessel_k(nu: f64, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_arg(x)?;
    if x.is_zero() {
        return Err(invalid("K_nu(x) needs x > 0"));
    }
    let nu = nu.abs();
    if is_integer(nu) {
        return k_integer(nu as u32, x, ctx);
    }
    let work = ctx.precision_bits() + GUARD_BITS + cancellation_bits(x);
    let stop = Float::with_val(work, Float::i_exp(1, -(work as i32)));
    let xw = Float::with_val(work, x);
    let ip = i_series(&Float::with_val(work, nu), &xw, work, &stop)?;
    let im = i_series(&Float::with_val(work, -nu), &xw, work, &stop)?;
    let pi = Float::with_val(work, Constant::Pi);
    let s = Float::with_val(work, nu).sin_pi();
    Ok(Float::with_val(ctx.precision_bits(), (im - ip) * pi / 2u32 / s))
}

/// `[d^order/d nu^order I_nu(x)]` at `nu = n`, for `order` 1 or 2, from the
/// differentiated ascending series.
pub fn bessel_i_order_deriv(n: i64, x: &Float, order: u32, ctx: &PrecisionContext) -> Result<Float> {
    check_arg(x)?;
    if x.is_zero() {
        return Err(invalid("order derivative needs x > 0"));
    }
    if !(1..=2).contains(&order) {
        return Err(invalid(format!("order must be 1 or 2, got {order}")));
    }
    let prec = ctx.precision_bits();
    let work = prec + GUARD_BITS + 8;
    let x = Float::with_val(work, x);
    let half = Float::with_val(work, &x / 2u32);
    let ell = Float::with_val(work, half.ln_ref());
    let quarter_sq = Float::with_val(work, half.square_ref());
    let pi2_6 = Float::with_val(work, Constant::Pi).square() / 6u32;
    let stop = ctx.series_stop();

    let limit = 64 + 8 * (x.to_f64() as i64) + 8 * i64::from(work) + n.abs();
    // c_m = (x/2)^(2m+n) / m!
    let mut c = Float::with_val(work, (&half).pow(n as i32));
    let mut sum = Float::new(work);
    // Harmonic sums H_{p-1} and sum_{i<p} 1/i^2 for p = m+n+1 >= 1, and the
    // factorial 1/(p-1)!; advanced incrementally once p reaches 1.
    let euler = Float::with_val(work, Constant::Euler);
    let mut p_state: Option<(Float, Float, Float)> = None;
    for m in 0..limit {
        if m > 0 {
            c *= &quarter_sq;
            c /= m as u32;
        }
        let p = m + n + 1;
        let (r, r1, r2) = if p <= 0 {
            let j = (-p) as u32;
            let fact = Float::with_val(work, Integer::factorial(j).complete());
            let sign = if j.is_multiple_of(2) { 1 } else { -1 };
            let mut h = Float::new(work);
            for i in 1..=j {
                h += Float::with_val(work, 1u32) / i;
            }
            let psi = h - &euler;
            let r1 = Float::with_val(work, &fact * sign);
            let r2 = Float::with_val(work, &fact * psi) * (-2 * sign);
            (Float::new(work), r1, r2)
        } else {
            let (inv_fact, harm, harm2) = match p_state.take() {
                None => {
                    // First p >= 1 may be larger than 1 when n > 0.
                    let q = p as u32;
                    let mut harm = Float::new(work);
                    let mut harm2 = Float::new(work);
                    for i in 1..q {
                        harm += Float::with_val(work, 1u32) / i;
                        harm2 += Float::with_val(work, 1u32) / Float::with_val(work, i).square();
                    }
                    let inv_fact = Float::with_val(work, 1u32) / Float::with_val(work, Integer::factorial(q - 1).complete());
                    (inv_fact, harm, harm2)
                }
                Some((inv_fact, harm, harm2)) => {
                    let prev = (p - 1) as u32;
                    let inv_fact = inv_fact / prev;
                    let harm = harm + Float::with_val(work, 1u32) / prev;
                    let harm2 = harm2 + Float::with_val(work, 1u32) / Float::with_val(work, prev).square();
                    (inv_fact, harm, harm2)
                }
            };
            let psi = Float::with_val(work, &harm - &euler);
            let trigamma = Float::with_val(work, &pi2_6 - &harm2);
            let r1 = -Float::with_val(work, &psi * &inv_fact);
            let r2 = (Float::with_val(work, psi.square_ref()) - trigamma) * &inv_fact;
            p_state = Some((inv_fact.clone(), harm, harm2));
            (inv_fact, r1, r2)
        };
        let bracket = if order == 1 {
            Float::with_val(work, &ell * &r) + r1
        } else {
            let l2 = Float::with_val(work, ell.square_ref()) * &r;
            l2 + Float::with_val(work, &ell * &r1) * 2u32 + r2
        };
        let term = bracket * &c;
        sum += &term;
        let tail_small = p >= 1 && (m as f64) > quarter_sq.to_f64() + 1.0;
        if tail_small
            && !sum.is_zero()
            && Float::with_val(work, term.abs_ref()) <= Float::with_val(work, sum.abs_ref()) * &stop
        {
            return Ok(Float::with_val(prec, sum));
        }
    }
    Err(Error::NonConvergence {
        what: "Bessel order-derivative series",
        detail: format!("n = {n}, x = {x}, order = {order}"),
    })
}

/// Truncation point `T` with `x (cosh T - 1) + |nu| T` beyond the working
/// precision, so `int_T^inf` of the scaled integrands is negligible.
fn tail_cutoff(nu: f64, x: f64, prec: u32) -> f64 {
    let target = (f64::from(prec) + 40.0) * std::f64::consts::LN_2;
    let mut t = 1.0f64;
    while x * (t.cosh() - 1.0) + nu * t < target && t < 800.0 {
        t *= 1.25;
    }
    t
}

/// `I_nu(x)` from its integral representation
/// `(1/pi) int_0^pi cos(nu t) e^{x cos t} dt - sin(pi nu)/pi int_0^inf e^{-x cosh t - nu t} dt`,
/// evaluated with the `e^{-x}` scaling pulled out.
pub fn bessel_i_quadrature(nu: f64, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_arg(x)?;
    if x.is_zero() {
        return Err(invalid("quadrature oracle needs x > 0"));
    }
    let prec = ctx.precision_bits() + GUARD_BITS;
    let qctx = ctx.with_extra_bits(GUARD_BITS);
    let xw = Float::with_val(prec, x);
    let nu_f = Float::with_val(prec, nu);
    let pi = Float::with_val(prec, Constant::Pi);
    let zero = Float::new(prec);
    let first = integrate(
        |t| {
            let p = t.prec();
            let c = Float::with_val(p, t.cos_ref()) - 1u32;
            Float::with_val(p, &nu_f * t).cos() * (c * &xw).exp()
        },
        &zero,
        &pi,
        &qctx,
    )?;
    let mut total = first / &pi;
    if !is_integer(nu) {
        let cut = Float::with_val(prec, tail_cutoff(nu, x.to_f64(), prec));
        let second = integrate(
            |t| {
                let p = t.prec();
                let c = Float::with_val(p, t.cosh_ref()) - 1u32;
                (-(c * &xw) - Float::with_val(p, &nu_f * t)).exp()
            },
            &zero,
            &cut,
            &qctx,
        )?;
        // This part carries e^{-x}, not e^{+x}.
        let rescale = Float::with_val(prec, &xw * -2i32).exp();
        total -= second * rescale * Float::with_val(prec, nu_f.sin_pi_ref()) / &pi;
    }
    Ok(Float::with_val(ctx.precision_bits(), total * xw.exp()))
}

/// `K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt` by quadrature.
pub fn bessel_k_quadrature(nu: f64, x: &Float, ctx: &PrecisionContext) -> Result<Float> {
    check_arg(x)?;
    if x.is_zero() {
        return Err(invalid("K_nu(x) needs x > 0"));
    }
    let prec = ctx.precision_bits() + GUARD_BITS;
    let qctx = ctx.with_extra_bits(GUARD_BITS);
    let xw = Float::with_val(prec, x);
    let nu_f = Float::with_val(prec, nu);
    let mut cut = tail_cutoff(0.0, x.to_f64(), prec);
    // cosh(nu t) grows like e^{|nu| t}; stretch the cutoff to absorb it.
    while nu.abs() * cut > x.to_f64() * (cut.cosh() - 1.0) / 2.0 && cut < 800.0 {
        cut *= 1.25;
    }
    let value = integrate(
        |t| {
            let p = t.prec();
            let c = Float::with_val(p, t.cosh_ref()) - 1u32;
            (-(c * &xw)).exp() * Float::with_val(p, &nu_f * t).cosh()
        },
        &Float::new(prec),
        &Float::with_val(prec, cut),
        &qctx,
    )?;
    Ok(Float::with_val(ctx.precision_bits(), value * (-xw).exp()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx() -> PrecisionContext {
        PrecisionContext::default()
    }

    fn rel(a: &Float, b: &Float) -> f64 {
        let d = Float::with_val(a.prec(), a - b).abs();
        (d / Float::with_val(a.prec(), b.abs_ref())).to_f64()
    }

    fn f(v: f64) -> Float {
        Float::with_val(192, v)
    }

    #[test]
    fn values_at_zero() {
        let c = ctx();
        assert_eq!(bessel_i(0.0, &f(0.0), &c).unwrap(), 1);
        assert!(bessel_i(1.0, &f(0.0), &c).unwrap().is_zero());
        assert!(bessel_i(-0.5, &f(0.0), &c).is_err());
        assert!(bessel_i(0.0, &f(-1.0), &c).is_err());
    }

    #[test]
    fn half_integer_closed_form() {
        let c = ctx();
        for x in [0.25, 1.0, 7.5, 40.0] {
            let s = bessel_i(1.5, &f(x), &c).unwrap();
            let cf = bessel_i_three_halves(&f(x), &c).unwrap();
            assert!(rel(&s, &cf) < 1e-42, "x = {x}");
        }
        let v = bessel_i(1.5, &f(1.0), &c).unwrap();
        assert!((v.to_f64() - 0.293_525_326_1).abs() < 1e-9);
    }

    #[test]
    fn k_closed_forms() {
        let c = ctx();
        // K_{1/2}(1) = sqrt(pi/2) e^{-1}
        let k = bessel_k(0.5, &f(1.0), &c).unwrap();
        let pi = c.pi();
        let expect = (pi / 2u32).sqrt() * f(-1.0).exp();
        assert!(rel(&k, &expect) < 1e-42);
        let k0 = bessel_k(0.0, &f(1.0), &c).unwrap();
        assert!((k0.to_f64() - 0.421_024_438_240_708_3).abs() < 1e-15);
    }

    #[test]
    fn k_series_matches_quadrature() {
        let c = ctx();
        for nu in [0.0, 1.0, 2.0, 3.0, 0.5, 1.25] {
            for x in [0.5, 2.0, 20.0] {
                let s = bessel_k(nu, &f(x), &c).unwrap();
                let q = bessel_k_quadrature(nu, &f(x), &c).unwrap();
                assert!(rel(&s, &q) < 1e-40, "nu = {nu}, x = {x}: {}", rel(&s, &q));
            }
        }
    }

    #[test]
    fn i_series_matches_quadrature() {
        let c = ctx();
        for nu in [0.0, 1.0, 2.5, -0.5, -1.5] {
            for x in [1.0, 10.0] {
                let s = bessel_i(nu, &f(x), &c).unwrap();
                let q = bessel_i_quadrature(nu, &f(x), &c).unwrap();
                assert!(rel(&s, &q) < 1e-40, "nu = {nu}, x = {x}: {}", rel(&s, &q));
            }
        }
    }

    #[test]
    fn negative_integer_order_is_symmetric() {
        let c = ctx();
        let a = bessel_i(-2.0, &f(3.0), &c).unwrap();
        let b = bessel_i(2.0, &f(3.0), &c).unwrap();
        assert_eq!(a, b);
    }

    /// Central differences in `nu` with step `h` at raised precision.
    fn central(n: i64, x: &Float, order: u32) -> Float {
        let c = PrecisionContext::new(320).unwrap();
        let h = 2f64.powi(-40);
        let at = |v: f64| bessel_i(v, x, &c).unwrap();
        let nu = n as f64;
        let (p, m, z) = (at(nu + h), at(nu - h), at(nu));
        if order == 1 {
            (p - m) / (2.0 * h)
        } else {
            (p + m - z * 2u32) / (h * h)
        }
    }

    #[test]
    fn order_derivatives_match_differences() {
        let c = ctx();
        for n in [-2i64, -1, 0, 1, 3] {
            for x in [0.7, 5.0, 12.0] {
                for order in [1, 2] {
                    let d = bessel_i_order_deriv(n, &f(x), order, &c).unwrap();
                    let cd = central(n, &f(x), order);
                    assert!(rel(&d, &cd) < 1e-8, "n={n} x={x} order={order}: {}", rel(&d, &cd));
                }
            }
        }
        assert!(bessel_i_order_deriv(0, &f(1.0), 3, &c).is_err());
    }
}
