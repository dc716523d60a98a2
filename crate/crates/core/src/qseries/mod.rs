//! Exact reciprocal-sum moments `s_k(n)` over partitions into distinct parts.
//!
//! The generating function of `s_k` is `(-q;q)_inf * B_k(g_1, ..., g_k)`, where
//! `B_k` is the complete exponential Bell polynomial and
//!
//! ```text
//! g_j(q) = sum_{r,m >= 1} (-1)^(m+1) m^(j-1) r^(-j) q^(r m)
//! ```
//!
//! is the `j`-th `zeta d/dzeta` derivative of `sum_r Log(1 + zeta^(1/r) q^r)`
//! at `zeta = 1`. Everything here is exact; [`enumerate_moment`] is the
//! brute-force oracle for the series path.

mod enumerate;
mod series;

pub use enumerate::{enumerate_moment, DEFAULT_ENUMERATION_CAP};
pub use series::RationalSeries;

use rug::ops::Pow;
use rug::{Integer, Rational};

use crate::error::{invalid, Result};
use crate::render::render_rational;

/// `sum_{n <= N} p(n) q^n` by the pentagonal-number recurrence.
pub fn partition_series(order: usize) -> RationalSeries {
    RationalSeries::from_integers(partition_numbers(order)).expect("nonempty")
}

/// `p(0), ..., p(N)` as integers.
pub fn partition_numbers(order: usize) -> Vec<Integer> {
    let mut p: Vec<Integer> = Vec::with_capacity(order + 1);
    p.push(Integer::from(1));
    for i in 1..=order {
        let mut acc = Integer::new();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > i {
                break;
            }
            let g2 = k * (3 * k + 1) / 2;
            let positive = k % 2 == 1;
            for g in [g1, g2] {
                if g <= i {
                    if positive {
                        acc += &p[i - g];
                    } else {
                        acc -= &p[i - g];
                    }
                }
            }
        }
        p.push(acc);
    }
    p
}

/// `(-q;q)_inf` truncated at `q^N`: coefficient `j` counts partitions of `j`
/// into distinct parts.
pub fn distinct_product_series(order: usize) -> RationalSeries {
    let mut q = vec![Integer::new(); order + 1];
    q[0] = Integer::from(1);
    for part in 1..=order {
        for j in (part..=order).rev() {
            let (lo, hi) = q.split_at_mut(j);
            hi[0] += &lo[j - part];
        }
    }
    RationalSeries::from_integers(q).expect("nonempty")
}

/// `P(q) / P(q^2)` at order `N`, the product-free route to `(-q;q)_inf`.
pub fn distinct_product_via_partitions(order: usize) -> RationalSeries {
    let p = partition_series(order);
    let p2 = p.dilate(2).expect("positive dilation");
    &p * &p2.reciprocal().expect("P has constant term 1")
}

/// Checks `(-q;q)_inf = P(q)/P(q^2)` coefficientwise up to `q^N`.
pub fn verify_distinct_identity(order: usize) -> bool {
    distinct_product_series(order) == distinct_product_via_partitions(order)
}

/// `g_j(q)` truncated at `q^N` through its divisor-sum coefficients.
pub fn g_series(j: u32, order: usize) -> Result<RationalSeries> {
    if j == 0 {
        return Err(invalid("g_j is defined for j >= 1"));
    }
    let mut coeffs = vec![Rational::new(); order + 1];
    for r in 1..=order {
        let r_pow = Integer::from(r).pow(j);
        for m in 1..=order / r {
            let mut term = Rational::from((Integer::from(m).pow(j - 1), r_pow.clone()));
            if m % 2 == 0 {
                term = -term;
            }
            coeffs[r * m] += term;
        }
    }
    RationalSeries::from_coeffs(coeffs)
}

/// Complete exponential Bell polynomials `B_0..=B_k` evaluated on the
/// series `g_1..g_k` via `B_{m+1} = sum_j C(m, j) B_{m-j} g_{j+1}`.
pub fn bell_series(g: &[RationalSeries], k: usize) -> Result<Vec<RationalSeries>> {
    if g.len() < k {
        return Err(invalid(format!("need {k} generator series, got {}", g.len())));
    }
    let order = g.first().map(RationalSeries::order).unwrap_or(0);
    let mut bell = vec![RationalSeries::one(order)];
    for m in 0..k {
        let mut next = RationalSeries::zero(order);
        for j in 0..=m {
            let binom = Rational::from(Integer::from(Integer::binomial_u(m as u32, j as u32)));
            let term = bell[m - j].mul_series(&g[j])?.scale(&binom);
            next = next.add_series(&term)?;
        }
        bell.push(next);
    }
    Ok(bell)
}

/// `sum_n s_k(n) q^n` truncated at `q^N`, for `k >= 1`.
pub fn s_moment_series(k: u32, order: usize) -> Result<RationalSeries> {
    if k == 0 {
        return Err(invalid(
            "k = 0 is the distinct-partition count; use distinct_product_series",
        ));
    }
    let g = (1..=k)
        .map(|j| g_series(j, order))
        .collect::<Result<Vec<_>>>()?;
    let bell = bell_series(&g, k as usize)?;
    distinct_product_series(order).mul_series(&bell[k as usize])
}

/// Carrier for an exact moment `s_k(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MomentValue {
    pub n: u32,
    pub k: u32,
    pub exact: Rational,
}

impl MomentValue {
    /// Computes `s_k(n)` from the series (`k >= 1`) or the distinct-part
    /// count (`k = 0`).
    pub fn compute(n: u32, k: u32) -> Result<Self> {
        let order = n as usize;
        let series = if k == 0 {
            distinct_product_series(order)
        } else {
            s_moment_series(k, order)?
        };
        Ok(MomentValue {
            n,
            k,
            exact: series.coeffs()[order].clone(),
        })
    }

    pub fn decimal(&self, sig_digits: usize) -> String {
        render_rational(&self.exact, sig_digits)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from((n, d))
    }

    /// Partition numbers by the plain recurrence over largest parts.
    fn partitions_by_parts(n: usize) -> Vec<Integer> {
        let mut p = vec![Integer::new(); n + 1];
        p[0] = Integer::from(1);
        for part in 1..=n {
            for j in part..=n {
                let add = p[j - part].clone();
                p[j] += add;
            }
        }
        p
    }

    #[test]
    fn partition_numbers_match_direct_count() {
        let p = partition_series(100);
        assert_eq!(p.order(), 100);
        assert_eq!(partition_series(0).coeffs(), &[Rational::from(1)]);
        assert_eq!(*p.coeff(10).unwrap(), 42);
        assert_eq!(*p.coeff(100).unwrap(), 190_569_292);
        let direct = partitions_by_parts(100);
        for (a, b) in p.coeffs().iter().zip(direct) {
            assert_eq!(*a, b);
        }
    }

    #[test]
    fn distinct_counts() {
        let d = distinct_product_series(10);
        assert_eq!(*d.coeff(0).unwrap(), 1);
        assert_eq!(*d.coeff(5).unwrap(), 3);
        assert_eq!(*d.coeff(10).unwrap(), 10);
    }

    #[test]
    fn distinct_product_equals_partition_quotient() {
        for order in [0, 1, 2, 17, 100, 500] {
            assert!(verify_distinct_identity(order), "order {order}");
        }
    }

    #[test]
    fn g_series_coefficients() {
        let g1 = g_series(1, 6).unwrap();
        assert_eq!(*g1.coeff(0).unwrap(), 0);
        assert_eq!(*g1.coeff(1).unwrap(), 1);
        assert_eq!(*g1.coeff(2).unwrap(), q(-1, 2));
        let g2 = g_series(2, 6).unwrap();
        assert_eq!(*g2.coeff(1).unwrap(), 1);
        assert!(g_series(0, 4).is_err());
    }

    /// `(u d/du)^j log(1+u) = sum_m (-1)^(m+1) m^(j-1) u^m`, obtained by
    /// applying the operator to the coefficient list of `log(1+u)`, then
    /// substituting `u = q^r` with weight `r^-j`.
    fn g_by_operator_expansion(j: u32, order: usize) -> RationalSeries {
        let mut log1p: Vec<Rational> = (0..=order)
            .map(|m| if m == 0 { Rational::new() } else if m % 2 == 1 { q(1, m as i64) } else { q(-1, m as i64) })
            .collect();
        for _ in 0..j {
            for (m, c) in log1p.iter_mut().enumerate() {
                *c *= Rational::from(m as i64);
            }
        }
        let base = RationalSeries::from_coeffs(log1p).unwrap();
        let mut total = RationalSeries::zero(order);
        for r in 1..=order {
            let weight = Rational::from((1, Integer::from(r).pow(j)));
            let term = base.dilate(r).unwrap().scale(&weight);
            total = &total + &term;
        }
        total
    }

    #[test]
    fn divisor_sum_matches_operator_expansion() {
        for j in 1..=5 {
            assert_eq!(g_series(j, 60).unwrap(), g_by_operator_expansion(j, 60), "j = {j}");
        }
    }

    #[test]
    fn g2_is_the_l_series() {
        // L(q) = sum_r q^r / (r^2 (1 + q^r)^2), expanded via 1/(1+x)^2.
        let order = 40;
        let mut l = RationalSeries::zero(order);
        for r in 1..=order {
            let mut c = vec![Rational::new(); order + 1];
            let mut m = 1;
            while r * m <= order {
                let sign = if m % 2 == 1 { 1 } else { -1 };
                c[r * m] = q(sign * m as i64, (r * r) as i64);
                m += 1;
            }
            l = &l + &RationalSeries::from_coeffs(c).unwrap();
        }
        assert_eq!(g_series(2, order).unwrap(), l);
    }

    #[test]
    fn small_moments() {
        let s1 = s_moment_series(1, 6).unwrap();
        assert_eq!(*s1.coeff(0).unwrap(), 0);
        assert_eq!(*s1.coeff(3).unwrap(), q(11, 6));
        assert_eq!(*s1.coeff(6).unwrap(), q(79, 20));
        let s2 = s_moment_series(2, 3).unwrap();
        assert_eq!(*s2.coeff(3).unwrap(), q(85, 36));
        assert!(s_moment_series(0, 3).is_err());
    }

    #[test]
    fn s1_at_100_decimal() {
        let v = MomentValue::compute(100, 1).unwrap();
        assert_eq!(v.decimal(10), "651539.7463");
    }

    #[test]
    fn moment_zero_counts_partitions() {
        let v = MomentValue::compute(10, 0).unwrap();
        assert_eq!(v.exact, 10);
    }

    #[test]
    fn coefficients_are_nonnegative() {
        for k in 1..=4 {
            let s = s_moment_series(k, 60).unwrap();
            assert!(s.coeffs().iter().all(|c| *c >= 0));
        }
    }
}
