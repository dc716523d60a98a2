use rug::{Integer, Rational};

use super::dedekind::{check_coprime, mod_inverse};
use crate::error::{invalid, Result};

/// A Farey fraction `h/k` of order `N` with its neighbours `h1/k1 < h/k <
/// h2/k2` and the arc half-widths `theta' = 1/(k(k1+k))`,
/// `theta'' = 1/(k(k2+k))`.
///
/// The sequence is read cyclically on `[0, 1)`: the left neighbour of `0/1`
/// is `(N-1)/N - 1 = -1/N`, the translate of the fraction next to `1/1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FareyNeighborhood {
    pub h: i64,
    pub k: i64,
    pub h1: i64,
    pub k1: i64,
    pub h2: i64,
    pub k2: i64,
    pub theta_prime: Rational,
    pub theta_double_prime: Rational,
    pub order: i64,
}

impl FareyNeighborhood {
    /// `|h k_i - h_i k| = 1` on both sides and `1/(k + k_i) <= 1/(N+1)`.
    pub fn invariants_hold(&self) -> bool {
        let adjacent = self.h * self.k1 - self.h1 * self.k == 1
            && self.h2 * self.k - self.h * self.k2 == 1;
        let bounded = self.k + self.k1 > self.order && self.k + self.k2 > self.order;
        let in_range = self.k1 >= 1 && self.k1 <= self.order && self.k2 >= 1 && self.k2 <= self.order;
        adjacent && bounded && in_range
    }

    /// Arc interval `[-theta', theta'']` in the variable `Phi`.
    pub fn arc(&self) -> (Rational, Rational) {
        (-self.theta_prime.clone(), self.theta_double_prime.clone())
    }
}

/// The unique representative of `r (mod k)` in `(N - k, N]`.
fn lift(r: i64, k: i64, n: i64) -> i64 {
    n - (n - r).rem_euclid(k)
}

/// Neighbourhood of `h/k` in the Farey sequence of order `n`.
pub fn farey_neighborhood(h: i64, k: i64, n: i64) -> Result<FareyNeighborhood> {
    check_coprime(h, k)?;
    if !(0..k).contains(&h) && !(h == 0 && k == 1) {
        return Err(invalid(format!("need 0 <= h < k, got {h}/{k}")));
    }
    if k > n {
        return Err(invalid(format!("denominator {k} exceeds Farey order {n}")));
    }
    // k1 = h^{-1} and k2 = -h^{-1} (mod k), each lifted into (N - k, N].
    let inv = mod_inverse(h, k);
    let k1 = lift(inv, k, n);
    let k2 = lift(-inv, k, n);
    let h1 = (h * k1 - 1).div_euclid(k);
    let h2 = (h * k2 + 1).div_euclid(k);
    let theta = |kj: i64| Rational::from((Integer::from(1), Integer::from(k) * (kj + k)));
    Ok(FareyNeighborhood {
        h,
        k,
        h1,
        k1,
        h2,
        k2,
        theta_prime: theta(k1),
        theta_double_prime: theta(k2),
        order: n,
    })
}

/// Fractions `h/k` of order `n` in `[0, 1)`, increasing.
pub fn farey_sequence(n: i64) -> Result<Vec<(i64, i64)>> {
    if n < 1 {
        return Err(invalid(format!("Farey order {n} must be positive")));
    }
    let mut out = vec![(0, 1)];
    let (mut a, mut b, mut c, mut d) = (0i64, 1i64, 1i64, n);
    while c < d {
        out.push((c, d));
        let m = (n + b) / d;
        (a, b, c, d) = (c, d, m * c - a, m * d - b);
    }
    Ok(out)
}
