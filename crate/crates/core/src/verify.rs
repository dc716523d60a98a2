//! Named invariant suites run by the command-line `verify` subcommand.

use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use crate::asymp::{alpha_closed_form, alpha_via_polylog, beta_closed_form, beta_via_fractional_parts};
use crate::asymp::{l_asymptotic, l_direct, LEvalContext};
use crate::error::{invalid, Result};
use crate::modarith::{
    dedekind_sum, dedekind_sum_direct, gcd, multiplier_ratio_closed_form, multiplier_ratio_phase, omega, UnitPhase,
};
use crate::precision::PrecisionContext;
use crate::qseries::{enumerate_moment, s_moment_series, verify_distinct_identity};
use crate::specfun::{bessel_i, bessel_i_order_deriv, bessel_i_quadrature, bessel_integral_ii, bessel_k};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    Omega,
    Branch,
    Bessel,
    AlphaBeta,
    Lq,
    Bell,
}

impl Suite {
    pub const ALL: [Suite; 6] = [
        Suite::Omega,
        Suite::Branch,
        Suite::Bessel,
        Suite::AlphaBeta,
        Suite::Lq,
        Suite::Bell,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Omega => "omega",
            Suite::Branch => "branch",
            Suite::Bessel => "bessel",
            Suite::AlphaBeta => "alphabeta",
            Suite::Lq => "lq",
            Suite::Bell => "bell",
        }
    }

    pub fn parse(name: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|s| s.name().eq_ignore_ascii_case(name))
    }
}

/// Outcome of one check inside a suite.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub suite: &'static str,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// Settings for [`run_suite`].
#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub ctx: PrecisionContext,
    /// Largest `n` compared against brute-force enumeration.
    pub enumeration_limit: u32,
    pub enumeration_cap: u32,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            ctx: PrecisionContext::default(),
            enumeration_limit: 40,
            enumeration_cap: crate::qseries::DEFAULT_ENUMERATION_CAP,
        }
    }
}

pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<Vec<CheckOutcome>> {
    let mut out = Checks { suite: suite.name(), list: Vec::new() };
    match suite {
        Suite::Omega => omega_suite(&mut out)?,
        Suite::Branch => branch_suite(&mut out)?,
        Suite::Bessel => bessel_suite(&mut out, &opts.ctx)?,
        Suite::AlphaBeta => alpha_beta_suite(&mut out, &opts.ctx)?,
        Suite::Lq => lq_suite(&mut out, &opts.ctx)?,
        Suite::Bell => bell_suite(&mut out, opts)?,
    }
    Ok(out.list)
}

struct Checks {
    suite: &'static str,
    list: Vec<CheckOutcome>,
}

impl Checks {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.list.push(CheckOutcome {
            suite: self.suite,
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }
}

fn coprime_pairs(kmax: i64, odd_only: bool) -> impl Iterator<Item = (i64, i64)> {
    (1..=kmax)
        .filter(move |k| !odd_only || k % 2 == 1)
        .flat_map(|k| (0..k).map(move |h| (h, k)))
        .filter(|&(h, k)| gcd(h, k) == 1)
}

fn omega_suite(out: &mut Checks) -> Result<()> {
    let mut bad = Vec::new();
    for (h, k) in coprime_pairs(50, false) {
        if omega(h, k)? != UnitPhase::new(dedekind_sum_direct(h, k)?) {
            bad.push((h, k));
        }
    }
    out.push("omega equals exp(pi i s(h,k)) for k <= 50", bad.is_empty(), format!("mismatches {bad:?}"));

    let mut bad = Vec::new();
    for h in 1..=100i64 {
        for k in 1..=100i64 {
            if gcd(h, k) != 1 {
                continue;
            }
            let lhs = dedekind_sum_direct(h, k)? + dedekind_sum_direct(k, h)?;
            let rhs = (Rational::from((h, k)) + Rational::from((k, h)) + Rational::from((1, h * k))) / 12u32
                - Rational::from((1, 4));
            if lhs != rhs || dedekind_sum(h, k)? != dedekind_sum_direct(h, k)? {
                bad.push((h, k));
            }
        }
    }
    out.push("Dedekind reciprocity for h, k <= 100", bad.is_empty(), format!("mismatches {bad:?}"));
    Ok(())
}

fn branch_suite(out: &mut Checks) -> Result<()> {
    let mut on_cut = Vec::new();
    let mut closed = Vec::new();
    for (h, k) in coprime_pairs(99, true) {
        let phase = multiplier_ratio_phase(h, k)?;
        if phase.is_negative_real() {
            on_cut.push((h, k));
        }
        if multiplier_ratio_closed_form(h, k)? != phase {
            closed.push((h, k));
        }
    }
    out.push("multiplier ratio avoids -1 for odd k <= 99", on_cut.is_empty(), format!("on the cut {on_cut:?}"));
    out.push("multiplier ratio closed form for odd k <= 99", closed.is_empty(), format!("mismatches {closed:?}"));
    Ok(())
}

fn rel(a: &Float, b: &Float) -> f64 {
    let d = Float::with_val(a.prec(), a - b).abs();
    (d / Float::with_val(a.prec(), b.abs_ref())).to_f64()
}

fn bessel_suite(out: &mut Checks, ctx: &PrecisionContext) -> Result<()> {
    let prec = ctx.precision_bits();
    let tol = ctx.quadrature_tolerance();
    for nu in 0..=3u32 {
        for x in ["1", "10", "57.36"] {
            let xf = Float::with_val(prec, Float::parse(x).expect("literal"));
            let r = rel(&bessel_i(f64::from(nu), &xf, ctx)?, &bessel_i_quadrature(f64::from(nu), &xf, ctx)?);
            out.push(format!("I_{nu}({x}) series vs integral"), r < tol, format!("relative {r:.3e}"));
        }
    }

    for n in 0..=2u32 {
        for x in [5u32, 20] {
            let xf = Float::with_val(prec, x);
            let half = Float::with_val(prec, &xf / 2u32);
            let mut sum = Float::new(prec);
            for j in 0..n {
                let mut term = Float::with_val(prec, (&half).pow(j)) * bessel_i(f64::from(j), &xf, ctx)?;
                term /= Integer::from(Integer::factorial(j)) * (n - j);
                if j % 2 == 0 {
                    sum += term;
                } else {
                    sum -= term;
                }
            }
            let corr = sum * Integer::from(Integer::factorial(n)) / 2u32 / Float::with_val(prec, (&half).pow(n));
            let k_n = bessel_k(f64::from(n), &xf, ctx)?;
            for sign in [1i64, -1] {
                let mut lhs = bessel_i_order_deriv(sign * i64::from(n), &xf, 1, ctx)?;
                if n % 2 == 1 {
                    lhs = -lhs;
                }
                let rhs = Float::with_val(prec, &corr * sign) - &k_n;
                let r = rel(&lhs, &rhs);
                out.push(
                    format!("order derivative at nu = {}{n}, x = {x}", if sign < 0 { "-" } else { "" }),
                    r < 1e-10,
                    format!("relative {r:.3e}"),
                );
            }
        }
    }

    let mut previous = f64::INFINITY;
    for x in [50u32, 100] {
        let xf = Float::with_val(prec, x);
        let norm = Float::with_val(prec, xf.sqrt_ref()) * &xf * Float::with_val(prec, -&xf).exp();
        let two_over_pi = Float::with_val(prec, 2u32) / ctx.pi();
        let v = bessel_integral_ii(&xf, ctx)? * norm * two_over_pi.sqrt();
        let residual = (v - 1u32).to_f64().abs();
        out.push(
            format!("normalized integral at x = {x}"),
            residual < 5.0 / f64::from(x) && residual < previous,
            format!("residual {residual:.4e}"),
        );
        previous = residual;
    }
    Ok(())
}

fn alpha_beta_suite(out: &mut Checks, ctx: &PrecisionContext) -> Result<()> {
    let prec = ctx.precision_bits();
    let tol = ctx.series_tail_tolerance() * 1e10;
    for k in (1..=15i64).step_by(2) {
        let mut worst = [0f64; 2];
        for h in (0..k).filter(|&h| gcd(h, k) == 1) {
            let da = Complex::with_val(prec, alpha_closed_form(h, k, ctx)? - alpha_via_polylog(h, k, ctx)?);
            let db = Complex::with_val(prec, beta_closed_form(h, k, ctx)? - beta_via_fractional_parts(h, k, ctx)?);
            worst[0] = worst[0].max(Float::with_val(prec, da.abs_ref()).to_f64());
            worst[1] = worst[1].max(Float::with_val(prec, db.abs_ref()).to_f64());
        }
        out.push(format!("alpha dual forms, k = {k}"), worst[0] < tol, format!("max deviation {:.3e}", worst[0]));
        out.push(format!("beta dual forms, k = {k}"), worst[1] < tol, format!("max deviation {:.3e}", worst[1]));
    }
    Ok(())
}

fn lq_suite(out: &mut Checks, ctx: &PrecisionContext) -> Result<()> {
    let prec = ctx.precision_bits();
    for (h, k) in [(0i64, 1i64), (1, 3), (2, 5)] {
        let mut logs = [0f64; 2];
        let mut kappa = 0;
        for (slot, inv_z) in [10u32, 20].into_iter().enumerate() {
            let z = Complex::with_val(prec, (Float::with_val(prec, 1u32) / inv_z, 0));
            let lc = LEvalContext::new(h, k, z)?;
            kappa = lc.kappa;
            let d = Complex::with_val(prec, l_direct(&lc, ctx)? - l_asymptotic(&lc, ctx)?);
            logs[slot] = Float::with_val(prec, d.abs_ref()).ln().to_f64();
        }
        let slope = (logs[1] - logs[0]) / 10.0;
        let target = -2.0 * std::f64::consts::PI / kappa as f64;
        let dev = (slope / target - 1.0).abs();
        out.push(
            format!("L(q) error slope at {h}/{k}"),
            dev < 0.25,
            format!("slope {slope:.4} against {target:.4}"),
        );
    }
    Ok(())
}

fn bell_suite(out: &mut Checks, opts: &VerifyOptions) -> Result<()> {
    let limit = opts.enumeration_limit.min(opts.enumeration_cap);
    if limit == 0 {
        return Err(invalid("enumeration limit must be positive"));
    }
    for k in 1..=4u32 {
        let series = s_moment_series(k, limit as usize)?;
        let mut bad = Vec::new();
        for n in 1..=limit {
            if *series.coeffs().get(n as usize).expect("in range") != enumerate_moment(n, k, opts.enumeration_cap)? {
                bad.push(n);
            }
        }
        out.push(
            format!("moment series k = {k} matches enumeration for n <= {limit}"),
            bad.is_empty(),
            format!("mismatches {bad:?}"),
        );
    }
    out.push(
        "distinct-part product equals P(q)/P(q^2) to order 500",
        verify_distinct_identity(500),
        "",
    );
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(Suite::parse(s.name()), Some(s));
        }
        assert_eq!(Suite::parse("LQ"), Some(Suite::Lq));
        assert_eq!(Suite::parse("nope"), None);
    }

    #[test]
    fn fast_suites_pass() {
        let opts = VerifyOptions { enumeration_limit: 20, ..VerifyOptions::default() };
        for s in [Suite::Omega, Suite::Branch, Suite::Lq, Suite::Bell] {
            let checks = run_suite(s, &opts).unwrap();
            assert!(!checks.is_empty());
            assert!(checks.iter().all(|c| c.passed), "{:?}", checks);
        }
    }
}
