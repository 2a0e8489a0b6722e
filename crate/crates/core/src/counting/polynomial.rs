use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::table::PascalTriangle;
use crate::error::{Error, Result};

/// Coefficients of `p_n` grow quickly with `n`.
pub const DEFAULT_POLYNOMIAL_LIMIT: usize = 40;

/// A polynomial with exact rational coefficients in ascending powers.
/// Trailing zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RationalPolynomial {
    coeffs: Vec<BigRational>,
}

impl RationalPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        RationalPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RationalPolynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::new(vec![c])
    }

    /// `-1` for the zero polynomial.
    pub fn degree(&self) -> isize {
        self.coeffs.len() as isize - 1
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coefficient(&self, power: usize) -> BigRational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, c| acc * x + c)
    }

    pub fn evaluate_int(&self, x: &BigInt) -> BigRational {
        self.evaluate(&BigRational::from_integer(x.clone()))
    }

    /// `p(factor * x)`.
    pub fn scale_argument(&self, factor: &BigRational) -> Self {
        let mut power = BigRational::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c * &power);
            power *= factor;
        }
        Self::new(coeffs)
    }

    pub fn add_scaled(&mut self, other: &RationalPolynomial, factor: &BigRational) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), BigRational::zero());
        }
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * factor;
        }
        *self = Self::new(std::mem::take(&mut self.coeffs));
    }

    /// Least common denominator `q` and integer numerators `q * c_i`.
    pub fn integer_form(&self) -> (Vec<BigInt>, BigInt) {
        let denom = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let numerators = self
            .coeffs
            .iter()
            .map(|c| (c * BigRational::from_integer(denom.clone())).to_integer())
            .collect();
        (numerators, denom)
    }
}

/// Renders as `(3k^2 + k)/2` using the variable `k`.
impl fmt::Display for RationalPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (nums, denom) = self.integer_form();
        let mut body = String::new();
        for (power, c) in nums.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if body.is_empty() {
                if c.is_negative() {
                    body.push('-');
                }
            } else {
                body.push_str(if c.is_negative() { " - " } else { " + " });
            }
            let show_coeff = power == 0 || !magnitude.is_one();
            if show_coeff {
                body.push_str(&magnitude.to_string());
            }
            match power {
                0 => {}
                1 => body.push('k'),
                p => body.push_str(&format!("k^{p}")),
            }
        }
        if body.is_empty() {
            body.push('0');
        }
        if denom.is_one() {
            f.write_str(&body)
        } else {
            write!(f, "({body})/{denom}")
        }
    }
}

/// Power-sum polynomials `S_m(x) = 1^m + 2^m + ... + x^m`, built from
/// `(m+1) S_m(x) = (x+1)^(m+1) - 1 - sum_{i<m} C(m+1, i) S_i(x)`.
struct PowerSums {
    sums: Vec<RationalPolynomial>,
    pascal: PascalTriangle,
}

impl PowerSums {
    fn new() -> Self {
        PowerSums {
            sums: Vec::new(),
            pascal: PascalTriangle::new(),
        }
    }

    fn get(&mut self, m: usize) -> &RationalPolynomial {
        while self.sums.len() <= m {
            let next = self.sums.len();
            let binomials: Vec<BigRational> = self
                .pascal
                .row(next + 1)
                .iter()
                .map(|b| BigRational::from_integer(BigInt::from(b.clone())))
                .collect();
            // (x+1)^(m+1) - 1
            let mut acc = RationalPolynomial::new(
                binomials
                    .iter()
                    .enumerate()
                    .map(|(i, b)| {
                        if i == 0 {
                            BigRational::zero()
                        } else {
                            b.clone()
                        }
                    })
                    .collect(),
            );
            for (i, lower) in self.sums.iter().enumerate() {
                acc.add_scaled(lower, &-binomials[i].clone());
            }
            let inv = BigRational::new(BigInt::one(), BigInt::from(next + 1));
            self.sums.push(RationalPolynomial::new(
                acc.coeffs.iter().map(|c| c * &inv).collect(),
            ));
        }
        &self.sums[m]
    }
}

/// `S_m(x) = sum_{j=1}^{x} j^m` as a polynomial of degree `m + 1`.
pub fn power_sum_polynomial(m: usize) -> RationalPolynomial {
    PowerSums::new().get(m).clone()
}

/// `p_n`, the number of `n`-th generation descendants of a node labelled
/// `k`, as a polynomial in `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LevelPolynomial {
    level: usize,
    poly: RationalPolynomial,
}

impl LevelPolynomial {
    pub fn level(&self) -> usize {
        self.level
    }

    pub fn polynomial(&self) -> &RationalPolynomial {
        &self.poly
    }

    /// `p_n(k)`. Returns an error if the value is not an integer, which
    /// would mean the polynomial is wrong.
    pub fn evaluate(&self, k: &BigInt) -> Result<BigInt> {
        let v = self.poly.evaluate_int(k);
        if !v.is_integer() {
            return Err(Error::Precondition(format!(
                "p_{}({k}) = {v} is not an integer",
                self.level
            )));
        }
        Ok(v.to_integer())
    }
}

impl fmt::Display for LevelPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p_{} = {}", self.level, self.poly)
    }
}

pub fn level_polynomial(n: usize) -> Result<LevelPolynomial> {
    level_polynomial_with_limit(n, DEFAULT_POLYNOMIAL_LIMIT)
}

/// Symbolic summation: with `P(x) = p_{n-1}(1) + ... + p_{n-1}(x)`,
/// `p_n(k) = P(2k) - P(k)`. Starts from `p_0 = 1`.
pub fn level_polynomial_with_limit(n: usize, limit: usize) -> Result<LevelPolynomial> {
    if n > limit {
        return Err(Error::LimitExceeded {
            what: "polynomial level",
            requested: n,
            limit,
        });
    }
    let mut sums = PowerSums::new();
    let two = BigRational::from_integer(BigInt::from(2));
    let mut p = RationalPolynomial::constant(BigRational::one());
    for _ in 0..n {
        let mut antidiff = RationalPolynomial::zero();
        for (i, a) in p.coeffs.iter().enumerate() {
            antidiff.add_scaled(sums.get(i), a);
        }
        let mut next = antidiff.scale_argument(&two);
        next.add_scaled(&antidiff, &-BigRational::one());
        p = next;
    }
    Ok(LevelPolynomial { level: n, poly: p })
}

pub fn count_via_polynomial(n: usize) -> Result<BigUint> {
    count_via_polynomial_with_limit(n, DEFAULT_POLYNOMIAL_LIMIT)
}

/// `s(n) = p_{n-1}(1)`.
pub fn count_via_polynomial_with_limit(n: usize, limit: usize) -> Result<BigUint> {
    if n == 0 {
        return Err(Error::Precondition(
            "sequence length must be at least 1".into(),
        ));
    }
    let p = level_polynomial_with_limit(n - 1, limit)?;
    let v = p.evaluate(&BigInt::one())?;
    Ok(v.to_biguint().expect("descendant counts are nonnegative"))
}
