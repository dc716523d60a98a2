use rug::{Integer, Rational};

use crate::error::{invalid, Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a as i64
}

pub(crate) fn check_coprime(h: i64, k: i64) -> Result<()> {
    if k < 1 {
        return Err(invalid(format!("modulus k = {k} must be positive")));
    }
    let g = gcd(h, k);
    if g != 1 {
        return Err(Error::NotCoprime { h, k, gcd: g });
    }
    Ok(())
}

/// Inverse of `a` modulo `m >= 1`, as a value in `[0, m)`.
pub(crate) fn mod_inverse(a: i64, m: i64) -> i64 {
    let (mut r0, mut r1) = (a.rem_euclid(m), m);
    let (mut s0, mut s1) = (1i64, 0i64);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert!(r0 == 1 || m == 1);
    s0.rem_euclid(m)
}

/// Kronecker symbol `(a|n)` for arbitrary integers.
pub fn kronecker(a: i64, n: i64) -> i32 {
    Integer::from(a).kronecker(&Integer::from(n))
}

/// `s(h,k)` by the reciprocity recursion
/// `s(h,k) = -s(k mod h, h) - 1/4 + (h/k + k/h + 1/(hk))/12`.
/// `h` may be any integer coprime to `k`; it is reduced mod `k` first.
pub fn dedekind_sum(h: i64, k: i64) -> Result<Rational> {
    check_coprime(h, k)?;
    let (mut h, mut k) = (h.rem_euclid(k), k);
    let mut total = Rational::new();
    let mut positive = true;
    while h != 0 {
        let (hq, kq) = (Integer::from(h), Integer::from(k));
        let mut step = Rational::from((hq.clone(), kq.clone()));
        step += Rational::from((kq.clone(), hq.clone()));
        step += Rational::from((Integer::from(1), hq * kq));
        step /= 12;
        step -= Rational::from((1, 4));
        if positive {
            total += step;
        } else {
            total -= step;
        }
        positive = !positive;
        (h, k) = (k % h, h);
    }
    Ok(total)
}

/// `((x))`: the sawtooth, zero at integers.
pub fn sawtooth(x: &Rational) -> Rational {
    let (frac, _) = x.clone().fract_floor(Integer::new());
    if frac == 0 {
        frac
    } else {
        frac - Rational::from((1, 2))
    }
}

/// `s(h,k) = sum_{mu mod k} ((mu/k)) ((h mu/k))`, in `O(k)` operations.
pub fn dedekind_sum_direct(h: i64, k: i64) -> Result<Rational> {
    check_coprime(h, k)?;
    let mut total = Rational::new();
    for mu in 1..k {
        let a = sawtooth(&Rational::from((mu, k)));
        let b = sawtooth(&Rational::from((h * mu, k)));
        total += a * b;
    }
    Ok(total)
}
