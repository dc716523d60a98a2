//! Decimal rendering of exact rationals and binary floats.
//!
//! Values are rounded half-to-even at a chosen number of significant digits.
//! Magnitudes in `[1e-4, 1e7)` print positionally, everything else in
//! scientific form `d.ddde±x`.

use rug::ops::Pow;
use rug::{Float, Integer, Rational};

const PLAIN_MIN_EXP: i64 = -4;
const PLAIN_MAX_EXP: i64 = 6;

/// Renders `value` with `sig_digits` significant digits (at least one).
pub fn render_rational(value: &Rational, sig_digits: usize) -> String {
    let sig = sig_digits.max(1);
    if *value == 0 {
        return "0".to_string();
    }
    let negative = *value < 0;
    let abs = Rational::from(value.abs_ref());
    let (digits, exp) = round_significant(&abs, sig);
    let body = if (PLAIN_MIN_EXP..=PLAIN_MAX_EXP).contains(&exp) {
        positional(&digits, exp)
    } else {
        scientific(&digits, exp)
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

/// Renders a binary float exactly (via its rational value).
///
/// Non-finite values render as `nan`, `inf` or `-inf`.
pub fn render_float(value: &Float, sig_digits: usize) -> String {
    match value.to_rational() {
        Some(r) => render_rational(&r, sig_digits),
        None if value.is_nan() => "nan".to_string(),
        None if value.is_sign_negative() => "-inf".to_string(),
        None => "inf".to_string(),
    }
}

/// Parses the output of [`render_rational`] back into an exact rational.
pub fn parse_decimal(text: &str) -> Option<Rational> {
    let (negative, body) = match text.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, text),
    };
    let (mantissa, exp) = match body.split_once('e') {
        Some((m, e)) => (m, e.parse::<i64>().ok()?),
        None => (body, 0),
    };
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    if int_part.is_empty() || !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return None;
    }
    let all: String = format!("{int_part}{frac_part}");
    let numer = Integer::from_str_radix(&all, 10).ok()?;
    let shift = exp - frac_part.len() as i64;
    let mut r = Rational::from(numer);
    r *= pow10(shift);
    if negative {
        r = -r;
    }
    Some(r)
}

/// Half-unit of the last retained digit for a value with decimal exponent
/// `exp` rendered at `sig_digits`.
pub fn half_ulp(exp: i64, sig_digits: usize) -> Rational {
    pow10(exp - sig_digits as i64 + 1) / Rational::from(2)
}

/// Decimal exponent `e` with `10^e <= |value| < 10^(e+1)`; `value` nonzero.
pub fn decimal_exponent(value: &Rational) -> i64 {
    let abs = Rational::from(value.abs_ref());
    let numer_digits = abs.numer().to_string_radix(10).len() as i64;
    let denom_digits = abs.denom().to_string_radix(10).len() as i64;
    let mut e = numer_digits - denom_digits;
    while abs >= pow10(e + 1) {
        e += 1;
    }
    while abs < pow10(e) {
        e -= 1;
    }
    e
}

fn pow10(exp: i64) -> Rational {
    let base = Integer::from(10).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        Rational::from(base)
    } else {
        Rational::from((Integer::from(1), base))
    }
}

/// Digit string of length `sig` and the decimal exponent of the leading digit.
fn round_significant(abs: &Rational, sig: usize) -> (String, i64) {
    let mut exp = decimal_exponent(abs);
    let scaled = abs * pow10(sig as i64 - 1 - exp);
    let mut mantissa = round_half_even(&scaled);
    if mantissa == Integer::from(10).pow(sig as u32) {
        mantissa /= 10;
        exp += 1;
    }
    (mantissa.to_string_radix(10), exp)
}

fn round_half_even(x: &Rational) -> Integer {
    let (fract, floor) = x.clone().fract_floor(Integer::new());
    let half = Rational::from((1, 2));
    match fract.cmp(&half) {
        std::cmp::Ordering::Less => floor,
        std::cmp::Ordering::Greater => floor + 1,
        std::cmp::Ordering::Equal => {
            if floor.is_even() {
                floor
            } else {
                floor + 1
            }
        }
    }
}

fn positional(digits: &str, exp: i64) -> String {
    if exp < 0 {
        let zeros = "0".repeat((-exp - 1) as usize);
        return format!("0.{zeros}{digits}");
    }
    let int_len = exp as usize + 1;
    if digits.len() <= int_len {
        let pad = "0".repeat(int_len - digits.len());
        format!("{digits}{pad}")
    } else {
        format!("{}.{}", &digits[..int_len], &digits[int_len..])
    }
}

fn scientific(digits: &str, exp: i64) -> String {
    if digits.len() == 1 {
        format!("{digits}e{exp}")
    } else {
        format!("{}.{}e{exp}", &digits[..1], &digits[1..])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn positional_and_scientific_forms() {
        assert_eq!(render_rational(&r(11, 6), 10), "1.833333333");
        assert_eq!(render_rational(&r(6515397463, 10000), 10), "651539.7463");
        assert_eq!(render_rational(&Rational::from(1_352_867_041_830_000_i64), 10), "1.352867042e15");
        assert_eq!(render_rational(&r(-5846709795, 10_000_000_000_000_000), 10), "-5.846709795e-7");
        assert_eq!(render_rational(&Rational::new(), 5), "0");
        assert_eq!(render_rational(&r(1, 8), 1), "0.1");
    }

    #[test]
    fn ties_round_to_even() {
        assert_eq!(render_rational(&r(125, 100), 2), "1.2");
        assert_eq!(render_rational(&r(135, 100), 2), "1.4");
        assert_eq!(render_rational(&r(9995, 1000), 3), "10.0");
        assert_eq!(render_rational(&r(9_999_999, 1), 3), "1.00e7");
    }

    proptest! {
        #[test]
        fn rendering_round_trips_within_half_ulp(
            n in -10_000_000_000_000i64..10_000_000_000_000,
            d in 1i64..1_000_000_000,
            scale in -30i64..30,
            sig in 1usize..25,
        ) {
            prop_assume!(n != 0);
            let x = r(n, d) * pow10(scale);
            let text = render_rational(&x, sig);
            let back = parse_decimal(&text).unwrap();
            let err = Rational::from((back - &x).abs_ref());
            prop_assert!(err <= half_ulp(decimal_exponent(&x), sig), "{} -> {}", x, text);
        }
    }
}
