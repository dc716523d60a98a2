//! Working precision and tolerances for every floating evaluation.

use rug::float::Constant;
use rug::Float;

use crate::error::{invalid, Result};

/// Smallest precision accepted anywhere in the floating pipeline.
pub const MIN_PRECISION_BITS: u32 = 64;

/// Default working precision.
pub const DEFAULT_PRECISION_BITS: u32 = 192;

/// Precision and tolerance settings shared by all floating evaluations.
///
/// Sums and quadratures stop once their error estimate falls below the
/// relevant tolerance scaled by [`PrecisionContext::GUARD`], so a converged
/// result is expected to carry the tolerance as a relative error bound.
#[derive(Debug, Clone, PartialEq)]
pub struct PrecisionContext {
    precision_bits: u32,
    series_tail_tolerance: f64,
    quadrature_tolerance: f64,
    max_quadrature_depth: u32,
}

impl PrecisionContext {
    /// Factor applied to tolerances when deciding termination.
    pub const GUARD: f64 = 1.0 / 1024.0;

    /// Context at `bits` with tolerances scaled proportionally
    /// (192 bits gives 1e-40).
    pub fn new(bits: u32) -> Result<Self> {
        let digits = (f64::from(bits) * 40.0 / 192.0).round();
        let tol = 10f64.powf(-digits);
        Self::with_tolerances(bits, tol, tol, 12)
    }

    pub fn with_tolerances(
        bits: u32,
        series_tail_tolerance: f64,
        quadrature_tolerance: f64,
        max_quadrature_depth: u32,
    ) -> Result<Self> {
        if bits < MIN_PRECISION_BITS {
            return Err(invalid(format!(
                "precision {bits} bits is below the minimum of {MIN_PRECISION_BITS}"
            )));
        }
        // A tolerance must sit comfortably above the unit roundoff.
        let floor = 2f64.powi(-(bits as i32 - 8));
        for (name, tol) in [
            ("series tail tolerance", series_tail_tolerance),
            ("quadrature tolerance", quadrature_tolerance),
        ] {
            if !(tol.is_finite() && tol > 0.0 && tol < 1.0) {
                return Err(invalid(format!("{name} {tol} must lie in (0, 1)")));
            }
            if tol < floor {
                return Err(invalid(format!(
                    "{name} {tol:e} is not representable at {bits} bits"
                )));
            }
        }
        if max_quadrature_depth == 0 || max_quadrature_depth > 24 {
            return Err(invalid("quadrature depth must lie in 1..=24"));
        }
        Ok(PrecisionContext {
            precision_bits: bits,
            series_tail_tolerance,
            quadrature_tolerance,
            max_quadrature_depth,
        })
    }

    pub fn precision_bits(&self) -> u32 {
        self.precision_bits
    }

    pub fn series_tail_tolerance(&self) -> f64 {
        self.series_tail_tolerance
    }

    pub fn quadrature_tolerance(&self) -> f64 {
        self.quadrature_tolerance
    }

    pub fn max_quadrature_depth(&self) -> u32 {
        self.max_quadrature_depth
    }

    /// Same tolerances at a higher precision.
    pub fn with_extra_bits(&self, extra: u32) -> PrecisionContext {
        PrecisionContext {
            precision_bits: self.precision_bits + extra,
            ..self.clone()
        }
    }

    pub fn float<T>(&self, value: T) -> Float
    where
        Float: rug::Assign<T>,
    {
        Float::with_val(self.precision_bits, value)
    }

    pub fn pi(&self) -> Float {
        Float::with_val(self.precision_bits, Constant::Pi)
    }

    /// Termination threshold for truncated sums.
    pub(crate) fn series_stop(&self) -> Float {
        Float::with_val(self.precision_bits, self.series_tail_tolerance * Self::GUARD)
    }

    pub(crate) fn quadrature_stop(&self) -> Float {
        Float::with_val(self.precision_bits, self.quadrature_tolerance * Self::GUARD)
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        PrecisionContext {
            precision_bits: DEFAULT_PRECISION_BITS,
            series_tail_tolerance: 1e-40,
            quadrature_tolerance: 1e-40,
            max_quadrature_depth: 12,
        }
    }
}
