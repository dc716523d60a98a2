use rug::float::Constant;
use rug::ops::Pow;
use rug::{Complex, Float, Integer, Rational};

use super::bessel::bessel_i;
use super::bessel_integral::bessel_integral_ii;
use super::quad::integrate_complex;
use crate::error::{invalid, Result};
use crate::modarith::FareyNeighborhood;
use crate::precision::PrecisionContext;

/// Parameters of `int z^s Log^ell(z) e^{A z + B/z} dPhi` over the arc of
/// `h/k`, with `z = k/n - i k Phi`, `A = 2 pi (n + 1/24)/k`, `B = pi/(24 k)`.
///
/// `A` and `B` are held as exact rational multiples of `pi`.
#[derive(Debug, Clone, PartialEq)]
pub struct ContourParams {
    pub n: u64,
    pub s: u32,
    pub ell: u32,
    pub a_over_pi: Rational,
    pub b_over_pi: Rational,
    pub neighborhood: FareyNeighborhood,
}

impl ContourParams {
    pub fn new(n: u64, s: u32, ell: u32, neighborhood: FareyNeighborhood) -> Result<Self> {
        if n == 0 {
            return Err(invalid("contour integral needs n >= 1"));
        }
        if s > 2 || ell > 2 {
            return Err(invalid(format!("(s, ell) = ({s}, {ell}) outside {{0,1,2}}^2")));
        }
        let k = Integer::from(neighborhood.k);
        let a_over_pi = Rational::from((Integer::from(n) * 24u32 + 1u32, Integer::from(&k * 12u32)));
        let b_over_pi = Rational::from((Integer::from(1), k * 24u32));
        Ok(ContourParams { n, s, ell, a_over_pi, b_over_pi, neighborhood })
    }

    /// `X_k(n)^2 / (4 pi^2) = (24n + 1) / (288 k^2)`.
    pub fn x_squared_over_4pi2(&self) -> Rational {
        let k = Integer::from(self.neighborhood.k);
        Rational::from((Integer::from(self.n) * 24u32 + 1u32, Integer::from(&k * &k) * 288u32))
    }

    /// `A B = X_k(n)^2 / 4`, checked exactly.
    pub fn product_matches_x(&self) -> bool {
        Rational::from(&self.a_over_pi * &self.b_over_pi) == self.x_squared_over_4pi2()
    }

    pub fn a(&self, prec: u32) -> Float {
        Float::with_val(prec, Constant::Pi) * &self.a_over_pi
    }

    pub fn b(&self, prec: u32) -> Float {
        Float::with_val(prec, Constant::Pi) * &self.b_over_pi
    }

    /// `2 sqrt(A B) = X_k(n)`.
    pub fn bessel_argument(&self, prec: u32) -> Float {
        let ab = Float::with_val(prec, self.a(prec) * self.b(prec));
        ab.sqrt() * 2u32
    }
}

/// Direct quadrature of the arc integral along `Phi in [-theta', theta'']`.
pub fn contour_quadrature_isl(params: &ContourParams, ctx: &PrecisionContext) -> Result<Complex> {
    let prec = ctx.precision_bits() + 32;
    let qctx = ctx.with_extra_bits(32);
    let nb = &params.neighborhood;
    let k = nb.k;
    let re_z = Float::with_val(prec, Rational::from((k, params.n as i64)));
    let a = params.a(prec);
    let b = params.b(prec);
    let (lo, hi) = nb.arc();
    let lo = Float::with_val(prec, &lo);
    let hi = Float::with_val(prec, &hi);
    let integrand = |phi: &Float| {
        let p = phi.prec();
        let z = Complex::with_val(p, (&re_z, Float::with_val(p, phi * -k)));
        let expo = Complex::with_val(p, &z * &a) + Complex::with_val(p, &b / &z);
        let mut v = expo.exp();
        for _ in 0..params.s {
            v *= &z;
        }
        if params.ell > 0 {
            let log = Complex::with_val(p, z.ln_ref());
            for _ in 0..params.ell {
                v *= &log;
            }
        }
        v
    };
    let q = integrate_complex(integrand, &lo, &hi, &qctx)?;
    Ok(Complex::with_val(ctx.precision_bits(), q.value))
}

/// The Bessel-function replacement of the arc integral for the shapes that
/// occur in the asymptotic formulas: `(j, 0)` for `j <= 3`, `(0, 1)`,
/// `(1, 1)` and `(0, 2)`.
pub fn contour_bessel_main_term(params: &ContourParams, ctx: &PrecisionContext) -> Result<Float> {
    let prec = ctx.precision_bits() + 32;
    let wctx = ctx.with_extra_bits(32);
    let k = params.neighborhood.k;
    let pi = Float::with_val(prec, Constant::Pi);
    let a = params.a(prec);
    let b = params.b(prec);
    let x = params.bessel_argument(prec);
    let ba = Float::with_val(prec, &b / &a);
    let log_ba = Float::with_val(prec, ba.ln_ref());
    let i = |nu: u32| bessel_i(f64::from(nu), &x, &wctx);
    let pi_k = Float::with_val(prec, &pi / k);
    let value = match (params.s, params.ell) {
        (j, 0) => {
            let pow = Float::with_val(prec, (&ba).pow(f64::from(j + 1) / 2.0));
            pi_k * 2u32 * pow * i(j + 1)?
        }
        (0, 1) => {
            let t0 = -Float::with_val(prec, &pi_k / &a) * i(0)?;
            let t1 = Float::with_val(prec, &pi_k * Float::with_val(prec, ba.sqrt_ref())) * &log_ba * i(1)?;
            t0 + t1
        }
        (1, 1) => {
            let t2 = Float::with_val(prec, &pi_k * &ba) * &log_ba * i(2)?;
            let t0 = Float::with_val(prec, &pi_k / Float::with_val(prec, a.square_ref())) * i(0)?;
            let a32 = Float::with_val(prec, (&a).pow(1.5f64));
            let t1 = Float::with_val(prec, &pi_k * Float::with_val(prec, b.sqrt_ref())) * 2u32 / a32 * i(1)?;
            t2 + t0 - t1
        }
        (0, 2) => {
            let log_ab = -log_ba.clone();
            let sq = Float::with_val(prec, ba.sqrt_ref());
            let t1 = Float::with_val(prec, &pi_k * &sq) / 2u32 * Float::with_val(prec, log_ab.square_ref()) * i(1)?;
            let t0 = Float::with_val(prec, &pi_k / &a) * &log_ab * i(0)?;
            let tii = sq * 2u32 / k * bessel_integral_ii(&x, &wctx)?;
            t1 + t0 - tii
        }
        (s, ell) => {
            return Err(invalid(format!("no Bessel main term for (s, ell) = ({s}, {ell})")));
        }
    };
    Ok(Float::with_val(ctx.precision_bits(), value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::farey_neighborhood;

    fn params(n: u64, s: u32, ell: u32) -> ContourParams {
        let nb = farey_neighborhood(0, 1, (n as f64).sqrt() as i64).unwrap();
        ContourParams::new(n, s, ell, nb).unwrap()
    }

    #[test]
    fn product_identity() {
        for n in [1, 100, 12345] {
            for (h, k) in [(0, 1), (1, 3), (2, 7)] {
                let nb = farey_neighborhood(h, k, 10).unwrap();
                assert!(ContourParams::new(n, 0, 0, nb).unwrap().product_matches_x());
            }
        }
    }

    fn deviation(n: u64, s: u32, ell: u32) -> f64 {
        let ctx = PrecisionContext::new(128).unwrap();
        let p = params(n, s, ell);
        let q = contour_quadrature_isl(&p, &ctx).unwrap();
        let m = contour_bessel_main_term(&p, &ctx).unwrap();
        let d = Complex::with_val(128, &q - &m);
        (Float::with_val(128, d.abs_ref()) / m.abs()).to_f64()
    }

    #[test]
    fn main_terms_approximate_the_arc_integral() {
        for (s, ell) in [(0, 0), (1, 0), (0, 1), (1, 1), (0, 2)] {
            let d100 = deviation(100, s, ell);
            let d400 = deviation(400, s, ell);
            assert!(d100 < 0.2, "({s},{ell}) n=100: {d100}");
            assert!(d400 < d100, "({s},{ell}): {d100} -> {d400}");
        }
    }
}
