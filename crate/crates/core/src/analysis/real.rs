//! Binary fixed-point reals on top of `BigInt`.
//!
//! A [`Real`] is `mantissa * 2^-precision`. Every operation truncates
//! toward negative infinity at the precision of its operands (the larger
//! one when they differ), so each step loses less than one unit in the
//! last place.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Default number of fractional bits.
pub const DEFAULT_PRECISION: u32 = 128;

/// Extra bits carried internally by transcendental routines.
const GUARD_BITS: u32 = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Real {
    mantissa: BigInt,
    precision: u32,
}

impl Real {
    pub fn zero(precision: u32) -> Self {
        Real {
            mantissa: BigInt::zero(),
            precision,
        }
    }

    pub fn from_int(value: impl Into<BigInt>, precision: u32) -> Self {
        Real {
            mantissa: value.into() << precision,
            precision,
        }
    }

    pub fn from_biguint(value: &BigUint, precision: u32) -> Self {
        Self::from_int(BigInt::from(value.clone()), precision)
    }

    pub fn from_ratio(value: &BigRational, precision: u32) -> Self {
        Real {
            mantissa: (value.numer() << precision).div_floor(value.denom()),
            precision,
        }
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    pub fn mantissa(&self) -> &BigInt {
        &self.mantissa
    }

    pub fn is_negative(&self) -> bool {
        self.mantissa.is_negative()
    }

    /// Re-expresses at another precision (truncating when narrowing).
    pub fn with_precision(&self, precision: u32) -> Self {
        let mantissa = match precision.cmp(&self.precision) {
            Ordering::Equal => self.mantissa.clone(),
            Ordering::Greater => &self.mantissa << (precision - self.precision),
            Ordering::Less => &self.mantissa >> (self.precision - precision),
        };
        Real {
            mantissa,
            precision,
        }
    }

    fn aligned(&self, other: &Real) -> (BigInt, BigInt, u32) {
        let p = self.precision.max(other.precision);
        (
            self.with_precision(p).mantissa,
            other.with_precision(p).mantissa,
            p,
        )
    }

    pub fn add(&self, other: &Real) -> Real {
        let (a, b, precision) = self.aligned(other);
        Real {
            mantissa: a + b,
            precision,
        }
    }

    pub fn sub(&self, other: &Real) -> Real {
        let (a, b, precision) = self.aligned(other);
        Real {
            mantissa: a - b,
            precision,
        }
    }

    pub fn mul(&self, other: &Real) -> Real {
        let (a, b, precision) = self.aligned(other);
        Real {
            mantissa: (a * b) >> precision,
            precision,
        }
    }

    /// # Panics
    /// On division by zero.
    pub fn div(&self, other: &Real) -> Real {
        let (a, b, precision) = self.aligned(other);
        assert!(!b.is_zero(), "division by zero");
        Real {
            mantissa: (a << precision).div_floor(&b),
            precision,
        }
    }

    pub fn mul_int(&self, k: &BigInt) -> Real {
        Real {
            mantissa: &self.mantissa * k,
            precision: self.precision,
        }
    }

    pub fn div_int(&self, k: &BigInt) -> Real {
        Real {
            mantissa: self.mantissa.div_floor(k),
            precision: self.precision,
        }
    }

    /// Multiplies by `2^shift` exactly.
    pub fn shl(&self, shift: usize) -> Real {
        Real {
            mantissa: &self.mantissa << shift,
            precision: self.precision,
        }
    }

    /// Square root of a nonnegative value, truncated.
    pub fn sqrt(&self) -> Real {
        assert!(!self.is_negative(), "square root of a negative value");
        let scaled = self.mantissa.magnitude() << self.precision;
        Real {
            mantissa: BigInt::from(scaled.sqrt()),
            precision: self.precision,
        }
    }

    /// Base-2 logarithm of a positive integer.
    ///
    /// The integer part is the bit length minus one; the fraction comes
    /// from the leading bits by repeated squaring of the normalized
    /// mantissa in `[1, 2)`, one result bit per squaring.
    pub fn log2_biguint(x: &BigUint, precision: u32) -> Real {
        assert!(!x.is_zero(), "logarithm of zero");
        let exponent = x.bits() - 1;
        let work = precision + GUARD_BITS;
        let one = BigUint::one() << work;
        let two = &one << 1u32;
        // y = x / 2^exponent in [1, 2), as a work-bit fixed-point number.
        let mut y = if u64::from(work) >= exponent {
            x << (u64::from(work) - exponent)
        } else {
            x >> (exponent - u64::from(work))
        };
        let mut fraction = BigUint::zero();
        for _ in 0..work {
            y = (&y * &y) >> work;
            fraction <<= 1u32;
            if y >= two {
                fraction |= BigUint::one();
                y >>= 1u32;
            }
        }
        let whole = BigInt::from(exponent) << work;
        Real {
            mantissa: whole + BigInt::from(fraction),
            precision: work,
        }
        .with_precision(precision)
    }

    /// Base-2 logarithm of a positive value.
    pub fn log2(&self) -> Real {
        assert!(
            self.mantissa.is_positive(),
            "logarithm of a nonpositive value"
        );
        let lg_mantissa = Real::log2_biguint(self.mantissa.magnitude(), self.precision);
        lg_mantissa.sub(&Real::from_int(self.precision, self.precision))
    }

    /// Euler's number from its factorial series.
    pub fn e(precision: u32) -> Real {
        let work = precision + GUARD_BITS;
        let mut term = BigInt::one() << work;
        let mut sum = term.clone();
        let mut k = 1u32;
        while !term.is_zero() {
            term /= k;
            sum += &term;
            k += 1;
        }
        Real {
            mantissa: sum,
            precision: work,
        }
        .with_precision(precision)
    }

    /// Natural logarithm of a positive integer, as `lg x / lg e`.
    pub fn ln_biguint(x: &BigUint, precision: u32) -> Real {
        let work = precision + GUARD_BITS;
        let lg_e = Real::e(work).log2();
        Real::log2_biguint(x, work)
            .div(&lg_e)
            .with_precision(precision)
    }

    /// Compares with an exact rational without rounding.
    pub fn cmp_ratio(&self, other: &BigRational) -> Ordering {
        let lhs = &self.mantissa * other.denom();
        let rhs = other.numer() << self.precision;
        lhs.cmp(&rhs)
    }

    pub fn cmp_biguint(&self, other: &BigUint) -> Ordering {
        self.cmp_ratio(&BigRational::from_integer(BigInt::from(other.clone())))
    }

    pub fn to_f64(&self) -> f64 {
        // Keep 64 significant bits before converting.
        let bits = self.mantissa.bits();
        let drop = bits.saturating_sub(64);
        let top = (&self.mantissa >> drop).to_f64().unwrap_or(f64::NAN);
        top * 2f64.powi(drop as i32 - self.precision as i32)
    }

    /// Decimal rendering with exactly `digits` fractional digits,
    /// truncated toward negative infinity.
    pub fn to_decimal(&self, digits: usize) -> String {
        let scale = BigInt::from(10u32).pow(digits as u32);
        let scaled = (&self.mantissa * &scale) >> self.precision;
        let (whole, frac) = scaled.div_mod_floor(&scale);
        let negative = scaled.sign() == Sign::Minus;
        let (whole, frac) = if negative && !frac.is_zero() {
            (whole + 1u32, &scale - frac)
        } else {
            (whole, frac)
        };
        let sign = if negative && whole.is_zero() { "-" } else { "" };
        if digits == 0 {
            return format!("{sign}{whole}");
        }
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }
}

impl PartialOrd for Real {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Real {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = self.aligned(other);
        a.cmp(&b)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let digits = f.precision().unwrap_or(12);
        f.write_str(&self.to_decimal(digits))
    }
}
