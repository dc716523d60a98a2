use rug::float::Constant;
use rug::{Complex, Float, Integer, Rational};

use super::dedekind::{check_coprime, kronecker, mod_inverse};
use super::phase::UnitPhase;
use crate::error::{invalid, Error, Result};

/// Smallest `h' >= 0` with `h h' = -1 (mod k)`; with `require_div8` also
/// `8 | h'`, which needs `k` odd.
pub fn inverse_neg_mod8(h: i64, k: i64, require_div8: bool) -> Result<i64> {
    check_coprime(h, k)?;
    let neg_inv = (-mod_inverse(h, k)).rem_euclid(k);
    if !require_div8 {
        return Ok(neg_inv);
    }
    if k % 2 == 0 {
        return Err(invalid(format!("no h' divisible by 8 exists for even k = {k}")));
    }
    let y = ((neg_inv as i128 * mod_inverse(8, k) as i128) % k as i128) as i64;
    Ok(8 * y)
}

/// `omega_{h,k}` from the closed form in `h`, `k`, `h'` and a Kronecker
/// symbol, for any `h` coprime to `k` and any `h'` with `h h' = -1 (mod k)`
/// (with `8 | h'` when `k` is odd).
pub fn omega_with_inverse(h: i64, k: i64, h_prime: i64) -> Result<UnitPhase> {
    check_coprime(h, k)?;
    if (Integer::from(h) * h_prime + 1u32) % Integer::from(k) != 0 {
        return Err(invalid(format!("h' = {h_prime} does not satisfy h h' = -1 mod {k}")));
    }
    if k % 2 == 1 && h_prime % 8 != 0 {
        return Err(invalid(format!("h' = {h_prime} must be divisible by 8 for odd k")));
    }
    let (hi, ki, hp) = (Integer::from(h), Integer::from(k), Integer::from(h_prime));
    let k_minus_inv = Rational::from(&ki) - Rational::from((Integer::from(1), ki.clone()));
    let poly = Integer::from(2 * &hi) - &hp + Integer::from(&hi * &hi) * &hp;
    let mut exponent = k_minus_inv * poly / 12u32;
    let sign = if h.rem_euclid(2) == 1 {
        exponent += Rational::from((Integer::from(2) - Integer::from(&hi * &ki) - &hi, 4));
        kronecker(-k, h)
    } else {
        exponent += Rational::from((ki - 1u32, 4));
        kronecker(-h, k)
    };
    debug_assert!(sign != 0);
    Ok(&UnitPhase::new(-exponent) * &UnitPhase::from_sign(sign))
}

/// `omega_{h,k}` for `0 <= h < k`, `gcd(h,k) = 1`, using the minimal
/// admissible `h'`.
pub fn omega(h: i64, k: i64) -> Result<UnitPhase> {
    if !(0..k).contains(&h) {
        return Err(invalid(format!("omega needs 0 <= h < k, got h = {h}, k = {k}")));
    }
    omega_general(h, k)
}

/// `omega_{h,k}` evaluated by the closed form at the given `h` without
/// reducing it mod `k`.
pub fn omega_general(h: i64, k: i64) -> Result<UnitPhase> {
    let h_prime = inverse_neg_mod8(h, k, k % 2 == 1)?;
    omega_with_inverse(h, k, h_prime)
}

fn require_odd(k: i64) -> Result<()> {
    if k < 1 || k % 2 == 0 {
        return Err(invalid(format!("k = {k} must be odd and positive")));
    }
    Ok(())
}

/// `omega_{2h,k}` with `2h` reduced mod `k` (`k` odd).
pub fn omega_2h(h: i64, k: i64) -> Result<UnitPhase> {
    require_odd(k)?;
    omega((2 * h).rem_euclid(k), k)
}

/// `omega_{h,k} / omega_{2h,k}^2` for odd `k`; `h` need not be reduced.
pub fn multiplier_ratio_phase(h: i64, k: i64) -> Result<UnitPhase> {
    require_odd(k)?;
    Ok(&omega_general(h, k)? * &omega_2h(h, k)?.pow(-2))
}

/// `omega_{h,k} / omega_{2h,k}` for odd `k`; `h` need not be reduced.
pub fn multiplier_quotient(h: i64, k: i64) -> Result<UnitPhase> {
    require_odd(k)?;
    Ok(&omega_general(h, k)? * &omega_2h(h, k)?.inv())
}

/// `(-h|k) exp(i pi (h(k^2-1) + k^2(1-k)) / (4k))`.
pub fn multiplier_ratio_closed_form(h: i64, k: i64) -> Result<UnitPhase> {
    require_odd(k)?;
    check_coprime(h, k)?;
    let (hi, ki) = (Integer::from(h), Integer::from(k));
    let k2 = Integer::from(&ki * &ki);
    let num = hi * Integer::from(&k2 - 1u32) + k2 * (Integer::from(1) - &ki);
    let t = Rational::from((num, ki * 4u32));
    Ok(&UnitPhase::new(t) * &UnitPhase::from_sign(kronecker(-h, k)))
}

/// `a_{h,k} = Log(omega_{h,k} / (2 omega_{2h,k}^2))` on the principal branch.
pub fn log_multiplier_ratio(h: i64, k: i64, prec: u32) -> Result<Complex> {
    let ratio = multiplier_ratio_phase(h, k)?;
    if ratio.is_negative_real() {
        return Err(Error::BranchCut { h, k });
    }
    let log2 = -Float::with_val(prec, Constant::Log2);
    let im = Float::with_val(prec, Constant::Pi) * ratio.t();
    Ok(Complex::with_val(prec, (log2, im)))
}

/// `A_k(n) = sum_{h mod k, gcd(h,k)=1} omega_{h,k} e^{-2 pi i n h/k}`.
pub fn kloosterman_a(k: i64, n: i64, prec: u32) -> Result<Complex> {
    if k < 1 {
        return Err(invalid(format!("k = {k} must be positive")));
    }
    let mut total = Complex::new(prec);
    for h in 0..k {
        if super::gcd(h, k) != 1 {
            continue;
        }
        let twist = Rational::from((Integer::from(n) * h * 2u32, Integer::from(k)));
        let phase = &omega(h, k)? * &UnitPhase::new(-twist);
        total += phase.to_complex(prec);
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modarith::{dedekind_sum, gcd};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn h_prime_examples() {
        assert_eq!(inverse_neg_mod8(0, 1, true).unwrap(), 0);
        assert_eq!(inverse_neg_mod8(1, 3, true).unwrap(), 8);
        assert_eq!(inverse_neg_mod8(2, 5, true).unwrap(), 32);
        assert_eq!(inverse_neg_mod8(1, 4, false).unwrap(), 3);
        assert!(inverse_neg_mod8(1, 4, true).is_err());
        assert!(inverse_neg_mod8(2, 4, false).is_err());
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(0, 1).unwrap(), UnitPhase::one());
        assert_eq!(omega(1, 2).unwrap(), UnitPhase::one());
        assert_eq!(omega(1, 3).unwrap().t(), &q(1, 18));
        assert!(omega(3, 3).is_err());
    }

    #[test]
    fn omega_is_dedekind_phase() {
        for k in 1..=30 {
            for h in 0..k {
                if gcd(h, k) == 1 {
                    let expect = UnitPhase::new(dedekind_sum(h, k).unwrap());
                    assert_eq!(omega(h, k).unwrap(), expect, "({h},{k})");
                }
            }
        }
    }

    #[test]
    fn omega_shift_invariance() {
        for (h, k) in [(1, 3), (4, 9), (2, 7), (3, 8), (5, 12)] {
            let w = omega(h, k).unwrap();
            let hp = inverse_neg_mod8(h, k, k % 2 == 1).unwrap();
            assert_eq!(omega_with_inverse(h, k, hp + 8 * k).unwrap(), w);
            let hp2 = inverse_neg_mod8(h + k, k, k % 2 == 1).unwrap();
            assert_eq!(omega_with_inverse(h + k, k, hp2).unwrap(), w);
        }
    }

    #[test]
    fn ratio_closed_form() {
        for k in (1..=41).step_by(2) {
            for h in 0..k {
                if gcd(h, k) == 1 {
                    assert_eq!(
                        multiplier_ratio_phase(h, k).unwrap(),
                        multiplier_ratio_closed_form(h, k).unwrap()
                    );
                }
            }
        }
        assert_eq!(multiplier_ratio_phase(1, 3).unwrap().t(), &q(1, 6));
    }

    #[test]
    fn log_ratio() {
        let a = log_multiplier_ratio(0, 1, 128).unwrap();
        let ln2 = Float::with_val(128, Constant::Log2);
        assert!((a.real().clone() + ln2).abs() < 1e-36);
        assert!(a.imag().is_zero());
        let a = log_multiplier_ratio(1, 3, 128).unwrap();
        let pi6 = Float::with_val(128, Constant::Pi) / 6u32;
        assert!((a.imag().clone() - pi6).abs() < 1e-36);
        assert!(log_multiplier_ratio(1, 4, 128).is_err());
    }

    #[test]
    fn kloosterman_small() {
        for n in 0..6 {
            let a1 = kloosterman_a(1, n, 128).unwrap();
            assert!((a1.real().clone() - 1u32).abs() < 1e-36);
            let a2 = kloosterman_a(2, n, 128).unwrap();
            let sign: i32 = if n % 2 == 0 { 1 } else { -1 };
            assert!((a2.real().clone() - sign).abs() < 1e-36);
        }
        for k in 1..=20 {
            let a = kloosterman_a(k, 7, 192).unwrap();
            assert!(a.imag().clone().abs() < 1e-45, "k = {k}");
        }
    }
}
