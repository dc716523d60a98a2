//! Double-exponential (tanh-sinh) quadrature on finite intervals.

use rug::float::Constant;
use rug::{Complex, Float};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;

/// Maximum number of bisections applied to an interval that fails to
/// converge at the configured depth.
const MAX_SPLITS: u32 = 6;

/// Integral of a complex-valued `f` over `[a, b]`, together with the
/// estimate of `int |f|` used as the convergence scale.
#[derive(Debug, Clone)]
pub struct Quadrature {
    pub value: Complex,
    pub l1: Float,
    pub evaluations: usize,
}

/// `int_a^b f(x) dx` by tanh-sinh with level doubling; intervals that do not
/// settle within `max_quadrature_depth` levels are bisected.
pub fn integrate_complex<F>(f: F, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<Quadrature>
where
    F: Fn(&Float) -> Complex,
{
    let prec = ctx.precision_bits() + 32;
    let a = Float::with_val(prec, a);
    let b = Float::with_val(prec, b);
    let tol = Float::with_val(prec, ctx.quadrature_stop());
    let mut out = Quadrature {
        value: Complex::new(prec),
        l1: Float::new(prec),
        evaluations: 0,
    };
    integrate_piece(&f, &a, &b, &tol, ctx, prec, 0, &mut out)?;
    out.value = Complex::with_val(ctx.precision_bits(), &out.value);
    Ok(out)
}

/// Real-valued wrapper over [`integrate_complex`].
pub fn integrate<F>(f: F, a: &Float, b: &Float, ctx: &PrecisionContext) -> Result<Float>
where
    F: Fn(&Float) -> Float,
{
    let q = integrate_complex(
        |x| {
            let v = f(x);
            let p = v.prec();
            Complex::with_val(p, (v, Float::new(p)))
        },
        a,
        b,
        ctx,
    )?;
    Ok(Float::with_val(ctx.precision_bits(), q.value.real()))
}

/// Sum over `[a, b]`, splitting `[a, b]` in two on failure.
#[allow(clippy::too_many_arguments)]
fn integrate_piece<F>(
    f: &F,
    a: &Float,
    b: &Float,
    tol: &Float,
    ctx: &PrecisionContext,
    prec: u32,
    splits: u32,
    out: &mut Quadrature,
) -> Result<()>
where
    F: Fn(&Float) -> Complex,
{
    match tanh_sinh(f, a, b, tol, ctx.max_quadrature_depth(), prec) {
        Ok((value, l1, evals)) => {
            out.value += value;
            out.l1 += l1;
            out.evaluations += evals;
            Ok(())
        }
        Err(_) if splits < MAX_SPLITS => {
            let mid = Float::with_val(prec, a + b) / 2u32;
            integrate_piece(f, a, &mid, tol, ctx, prec, splits + 1, out)?;
            integrate_piece(f, &mid, b, tol, ctx, prec, splits + 1, out)
        }
        Err(detail) => Err(Error::NonConvergence {
            what: "tanh-sinh quadrature",
            detail,
        }),
    }
}

/// One tanh-sinh pass over `[a, b]`. Returns the value, the `|f|` integral
/// and the number of evaluations, or a diagnostic when the level-to-level
/// change is still above `tol * l1` at the final level.
fn tanh_sinh<F>(
    f: &F,
    a: &Float,
    b: &Float,
    tol: &Float,
    depth: u32,
    prec: u32,
) -> std::result::Result<(Complex, Float, usize), String>
where
    F: Fn(&Float) -> Complex,
{
    let center = Float::with_val(prec, a + b) / 2u32;
    let half = Float::with_val(prec, b - a) / 2u32;
    let half_pi = Float::with_val(prec, Constant::Pi) / 2u32;
    // Weights below this are dropped: they cannot move the sum.
    let cutoff = Float::with_val(prec, Float::i_exp(1, -(prec as i32) - 8)) * half.clone().abs();

    let mut sum = Complex::new(prec);
    let mut l1 = Float::new(prec);
    let mut evals = 0usize;

    // Adds the node pair at +-t (or the single node at t = 0). Returns
    // false once the weight has dropped below the cutoff.
    let add_node = |t: &Float, sum: &mut Complex, l1: &mut Float, evals: &mut usize| -> bool {
        let (sh, ch) = Float::with_val(prec, t).sinh_cosh(Float::new(prec));
        let u = Float::with_val(prec, &half_pi * &sh);
        let cu = Float::with_val(prec, u.cosh_ref());
        let w = Float::with_val(prec, &half_pi * &ch) / cu.square() * &half;
        if w < cutoff {
            return false;
        }
        let offset = Float::with_val(prec, u.tanh_ref()) * &half;
        let mut pts = vec![Float::with_val(prec, &center + &offset)];
        if !t.is_zero() {
            pts.push(Float::with_val(prec, &center - &offset));
        }
        for x in pts {
            let v = f(&x);
            *evals += 1;
            let mag = Float::with_val(prec, v.abs_ref());
            if !mag.is_finite() {
                continue;
            }
            *l1 += Float::with_val(prec, &mag * &w);
            *sum += Complex::with_val(prec, &v * &w);
        }
        true
    };

    let mut previous: Option<Complex> = None;
    for level in 0..=depth {
        let step = Float::with_val(prec, Float::i_exp(1, -(level as i32)));
        // Level 0 visits every integer node; later levels only odd
        // multiples of the new step.
        let (start, stride) = if level == 0 { (0u64, 1u64) } else { (1, 2) };
        let mut j = start;
        loop {
            let t = Float::with_val(prec, &step * j);
            if t > 8 || !add_node(&t, &mut sum, &mut l1, &mut evals) {
                break;
            }
            j += stride;
        }
        let estimate = Complex::with_val(prec, &sum * &step);
        if let Some(prev) = &previous {
            let diff = Float::with_val(prec, Complex::with_val(prec, &estimate - prev).abs_ref());
            let scale = Float::with_val(prec, &l1 * &step);
            if level >= 3 && diff <= Float::with_val(prec, tol * &scale) {
                return Ok((estimate, scale, evals));
            }
        }
        previous = Some(estimate);
    }
    Err(format!("no convergence after {depth} levels on [{}, {}]", a.to_f64(), b.to_f64()))
}
