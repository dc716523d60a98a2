use std::ops::{Add, Mul, Sub};

use rayon::prelude::*;
use rug::{Integer, Rational};

use crate::error::{invalid, Result};

/// Truncated formal power series `c_0 + c_1 q + ... + c_N q^N` with exact
/// rational coefficients.
///
/// All arithmetic is closed at the truncation order: operands must share the
/// same order and the result keeps it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    coeffs: Vec<Rational>,
}

impl RationalSeries {
    pub fn zero(order: usize) -> Self {
        RationalSeries {
            coeffs: vec![Rational::new(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = Rational::from(1);
        s
    }

    /// Builds a series from coefficients `c_0..=c_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(invalid("a series needs at least the constant coefficient"));
        }
        Ok(RationalSeries { coeffs })
    }

    pub fn from_integers(coeffs: Vec<Integer>) -> Result<Self> {
        Self::from_coeffs(coeffs.into_iter().map(Rational::from).collect())
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^j`, or `None` beyond the truncation order.
    pub fn coeff(&self, j: usize) -> Option<&Rational> {
        self.coeffs.get(j)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        RationalSeries {
            coeffs: self.coeffs.iter().map(|c| Rational::from(c * factor)).collect(),
        }
    }

    /// Substitutes `q -> q^m`, keeping the truncation order.
    pub fn dilate(&self, m: usize) -> Result<Self> {
        if m == 0 {
            return Err(invalid("dilation factor must be positive"));
        }
        let mut out = Self::zero(self.order());
        for (j, c) in self.coeffs.iter().enumerate() {
            match j.checked_mul(m) {
                Some(t) if t <= self.order() => out.coeffs[t] = c.clone(),
                _ => break,
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse of a series with nonzero constant term.
    pub fn reciprocal(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if *c0 == 0 {
            return Err(invalid("reciprocal requires a nonzero constant term"));
        }
        let inv0 = Rational::from(c0.recip_ref());
        let n = self.order();
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for j in 1..=n {
            let mut acc = Rational::new();
            for i in 1..=j {
                if self.coeffs[i] != 0 {
                    acc += Rational::from(&self.coeffs[i] * &out[j - i]);
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(RationalSeries { coeffs: out })
    }

    /// Truncated product. Coefficients are brought to a common denominator
    /// per operand so the convolution runs over integers; each output
    /// coefficient is an independent sum, so the parallel result matches the
    /// sequential one exactly.
    pub fn mul_series(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let (a, da) = integer_form(&self.coeffs);
        let (b, db) = integer_form(&other.coeffs);
        let denom = Integer::from(&da * &db);
        let coeffs = (0..=self.order())
            .into_par_iter()
            .map(|j| {
                let mut acc = Integer::new();
                for i in 0..=j {
                    if a[i] != 0 && b[j - i] != 0 {
                        acc += &a[i] * &b[j - i];
                    }
                }
                Rational::from((acc, denom.clone()))
            })
            .collect();
        Ok(RationalSeries { coeffs })
    }

    pub fn add_series(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(RationalSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| Rational::from(x + y))
                .collect(),
        })
    }

    pub fn sub_series(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        Ok(RationalSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(x, y)| Rational::from(x - y))
                .collect(),
        })
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(invalid(format!(
                "truncation orders differ: {} vs {}",
                self.order(),
                other.order()
            )));
        }
        Ok(())
    }
}

/// Integer numerators over the lcm of all denominators.
fn integer_form(coeffs: &[Rational]) -> (Vec<Integer>, Integer) {
    let mut lcm = Integer::from(1);
    for c in coeffs {
        if *c.denom() != 1 {
            lcm.lcm_mut(c.denom());
        }
    }
    let nums = coeffs
        .iter()
        .map(|c| {
            let mut v = Integer::from(&lcm / c.denom());
            v *= c.numer();
            v
        })
        .collect();
    (nums, lcm)
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&RationalSeries> for &RationalSeries {
            type Output = RationalSeries;

            /// Panics if the truncation orders differ.
            fn $method(self, rhs: &RationalSeries) -> RationalSeries {
                self.$inner(rhs).expect("series truncation orders must match")
            }
        }
    };
}

forward_binop!(Add, add, add_series);
forward_binop!(Sub, sub, sub_series);
forward_binop!(Mul, mul, mul_series);
