use std::fmt;
use std::ops::Mul;

use rug::{Complex, Float, Integer, Rational};

/// The unit complex number `e^{i pi t}` with exact `t` in `(-1, 1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnitPhase {
    t: Rational,
}

impl UnitPhase {
    pub fn new(t: Rational) -> Self {
        // t - 2 ceil((t - 1)/2) lands in (-1, 1].
        let shifted = (t.clone() - 1u32) / 2u32;
        let (_, ceil) = shifted.fract_ceil(Integer::new());
        UnitPhase { t: t - Rational::from(ceil * 2u32) }
    }

    pub fn one() -> Self {
        UnitPhase { t: Rational::new() }
    }

    /// `-1`, the phase on the negative real axis.
    pub fn minus_one() -> Self {
        UnitPhase { t: Rational::from(1) }
    }

    pub fn from_sign(sign: i32) -> Self {
        if sign < 0 {
            Self::minus_one()
        } else {
            Self::one()
        }
    }

    pub fn t(&self) -> &Rational {
        &self.t
    }

    pub fn inv(&self) -> Self {
        UnitPhase::new(-self.t.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        UnitPhase::new(self.t.clone() * Integer::from(e))
    }

    pub fn is_negative_real(&self) -> bool {
        self.t == 1
    }

    pub fn to_complex(&self, prec: u32) -> Complex {
        let t = Float::with_val(prec + 16, &self.t);
        Complex::with_val(prec, (t.clone().cos_pi(), t.sin_pi()))
    }
}

impl Mul for &UnitPhase {
    type Output = UnitPhase;
    // Exponents add under multiplication.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: &UnitPhase) -> UnitPhase {
        UnitPhase::new(self.t.clone() + &rhs.t)
    }
}

impl Mul for UnitPhase {
    type Output = UnitPhase;
    fn mul(self, rhs: UnitPhase) -> UnitPhase {
        &self * &rhs
    }
}

impl fmt::Display for UnitPhase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exp(i*pi*{})", self.t)
    }
}
