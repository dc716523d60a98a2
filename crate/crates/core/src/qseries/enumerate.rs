use rug::ops::PowAssign;
use rug::Rational;

use crate::error::{invalid, Error, Result};

/// Default largest `n` accepted by [`enumerate_moment`].
pub const DEFAULT_ENUMERATION_CAP: u32 = 60;

/// `s_k(n)` by exhaustive backtracking over partitions of `n` into distinct
/// parts. Rejects `n` above `cap`.
pub fn enumerate_moment(n: u32, k: u32, cap: u32) -> Result<Rational> {
    if n == 0 {
        return Err(invalid("enumeration requires n >= 1"));
    }
    if n > cap {
        return Err(Error::EnumerationCap { n, cap });
    }
    let mut total = Rational::new();
    let mut recip = Rational::new();
    walk(n, n, k, &mut recip, &mut total);
    Ok(total)
}

/// Visits every distinct-part partition of `remaining` with parts at most
/// `max_part`, carrying the running reciprocal sum.
fn walk(remaining: u32, max_part: u32, k: u32, recip: &mut Rational, total: &mut Rational) {
    if remaining == 0 {
        let mut term = recip.clone();
        term.pow_assign(k as i32);
        *total += term;
        return;
    }
    let top = max_part.min(remaining);
    for part in (1..=top).rev() {
        // Parts below `part` sum to at most part*(part-1)/2.
        if part * (part + 1) / 2 < remaining {
            break;
        }
        let step = Rational::from((1, part));
        *recip += &step;
        walk(remaining - part, part - 1, k, recip, total);
        *recip -= &step;
    }
}
