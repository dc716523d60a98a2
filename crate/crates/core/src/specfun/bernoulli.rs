use std::sync::OnceLock;

use rug::Complete;
use rug::{Integer, Rational};

/// Largest index held in the shared Bernoulli-number cache.
pub const BERNOULLI_CACHE_MAX: usize = 1024;

static CACHE: OnceLock<Vec<Rational>> = OnceLock::new();

/// `B_0, ..., B_max` from tangent numbers (integer arithmetic only).
fn bernoulli_table(max: usize) -> Vec<Rational> {
    let half = max / 2;
    let mut t = vec![Integer::new(); half + 1];
    if half >= 1 {
        t[1] = Integer::from(1);
    }
    for k in 2..=half {
        t[k] = Integer::from(&t[k - 1] * (k - 1));
    }
    for k in 2..=half {
        for j in k..=half {
            let next = Integer::from(&t[j - 1] * (j - k)) + Integer::from(&t[j] * (j - k + 2));
            t[j] = next;
        }
    }
    let mut out = vec![Rational::new(); max + 1];
    out[0] = Rational::from(1);
    if max >= 1 {
        out[1] = Rational::from((-1, 2));
    }
    for k in 1..=half {
        // B_{2k} = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
        let four_k = Integer::from(1) << (2 * k as u32);
        let den = Integer::from(&four_k - 1u32) * four_k;
        let mut b = Rational::from((Integer::from(&t[k] * (2 * k)), den));
        if k % 2 == 0 {
            b = -b;
        }
        out[2 * k] = b;
    }
    out
}

/// The Bernoulli number `B_m` (with `B_1 = -1/2`).
pub fn bernoulli_number(m: usize) -> Rational {
    if m <= BERNOULLI_CACHE_MAX {
        CACHE.get_or_init(|| bernoulli_table(BERNOULLI_CACHE_MAX))[m].clone()
    } else {
        bernoulli_table(m).swap_remove(m)
    }
}

/// `B_m(x) = sum_j C(m,j) B_j x^(m-j)`.
pub fn bernoulli_poly(m: u32, x: &Rational) -> Rational {
    let mut acc = Rational::new();
    let mut power = Rational::from(1);
    // Horner-free accumulation from the top coefficient downwards.
    for j in (0..=m).rev() {
        let binom = Integer::binomial_u(m, j).complete();
        acc += bernoulli_number(j as usize) * binom * &power;
        power *= x;
    }
    acc
}

/// `B_m({x})`, the one-periodic extension.
pub fn bernoulli_periodic(m: u32, x: &Rational) -> Rational {
    let (frac, _) = x.clone().fract_floor(Integer::new());
    bernoulli_poly(m, &frac)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    #[test]
    fn numbers() {
        assert_eq!(bernoulli_number(0), 1);
        assert_eq!(bernoulli_number(1), q(-1, 2));
        assert_eq!(bernoulli_number(2), q(1, 6));
        assert_eq!(bernoulli_number(3), 0);
        assert_eq!(bernoulli_number(4), q(-1, 30));
        assert_eq!(bernoulli_number(12), q(-691, 2730));
        assert_eq!(bernoulli_number(30), q(8_615_841_276_005, 14_322));
    }

    /// `sum_{j<m+1} C(m+1, j) B_j = 0` for `m >= 1`.
    #[test]
    fn defining_recurrence() {
        for m in 1..=80u32 {
            let mut s = Rational::new();
            for j in 0..=m {
                s += bernoulli_number(j as usize) * Integer::binomial_u(m + 1, j).complete();
            }
            assert_eq!(s, 0, "m = {m}");
        }
    }

    #[test]
    fn polynomials() {
        assert_eq!(bernoulli_poly(2, &Rational::new()), q(1, 6));
        assert_eq!(bernoulli_poly(3, &q(1, 2)), 0);
        assert_eq!(bernoulli_poly(2, &q(1, 2)), q(-1, 12));
        let x = q(1, 3);
        assert_eq!(bernoulli_poly(4, &(Rational::from(1) - &x)), bernoulli_poly(4, &x));
        assert_eq!(bernoulli_poly(5, &(Rational::from(1) - &x)), -bernoulli_poly(5, &x));
        assert_eq!(bernoulli_poly(3, &q(1, 5)), q(6, 125));
        assert_eq!(bernoulli_periodic(2, &q(7, 5)), bernoulli_poly(2, &q(2, 5)));
        assert_eq!(bernoulli_periodic(2, &q(-3, 5)), bernoulli_poly(2, &q(2, 5)));
    }
}
