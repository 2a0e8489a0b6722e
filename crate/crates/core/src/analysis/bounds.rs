use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

use super::real::Real;
use crate::error::{Error, Result};

/// `E(r_1 ... r_{n-1})` when each ratio `r_{i+1} / r_i` is uniform on
/// `(1, 2]`: the product of `(2^j - 1) / j` for `j = 2..n-1`.
pub fn continuous_expectation(n: usize) -> Result<BigRational> {
    if n < 2 {
        return Err(Error::Precondition("need n >= 2".into()));
    }
    Ok((2..n).fold(BigRational::one(), |acc, j| {
        let numer = (BigInt::one() << j) - 1;
        acc * BigRational::new(numer, BigInt::from(j))
    }))
}

/// `(1 - 1/2)(1 - 1/4)...(1 - 2^-factors)`, truncated at `precision` bits.
pub fn alpha_partial(factors: u32, precision: u32) -> Real {
    let mut product = Real::from_int(1, precision);
    for i in 1..=factors {
        let shrink = product.div_int(&(BigInt::one() << i));
        product = product.sub(&shrink);
    }
    product
}

/// The infinite product of `1 - 2^-i` over `i >= 1` (about 0.2887880951).
///
/// Stopping after `N` factors leaves a tail in `[1 - 2^-N, 1]`, so with
/// `N = precision + 8` the truncation error is below `2^-(precision + 8)`,
/// well under the final unit in the last place.
pub fn alpha(precision: u32) -> Result<Real> {
    if precision < 16 {
        return Err(Error::Precondition("alpha needs at least 16 bits".into()));
    }
    let work = precision + 16;
    Ok(alpha_partial(precision + 8, work).with_precision(precision))
}

/// `alpha * 2^C(n,2) / (n-1)!`, a lower bound on `s(n)`.
pub fn lower_bound(n: usize, precision: u32) -> Result<Real> {
    if n < 2 {
        return Err(Error::Precondition("need n >= 2".into()));
    }
    let factorial: BigUint = (1..n as u64).product();
    Ok(alpha(precision)?
        .shl(n * (n - 1) / 2)
        .div_int(&BigInt::from(factorial)))
}
