use num_bigint::{BigInt, BigUint, RandBigInt};
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::real::{Real, DEFAULT_PRECISION};
use crate::error::{Error, Result};

/// Samples drawn from one generator stream. Sample `i` always comes from
/// stream `i / CHUNK_SAMPLES`, so results do not depend on thread count.
pub const CHUNK_SAMPLES: u64 = 1024;

/// Walks the tournament tree from the root, choosing each child uniformly,
/// and returns `t_1 t_2 ... t_{n-1}`. The expectation is `s(n)`.
pub fn sample_path<R: Rng + ?Sized>(n: usize, rng: &mut R) -> BigUint {
    assert!(n >= 1, "sequence length must be at least 1");
    let mut product = BigUint::one();
    if n <= 63 {
        let mut t = 1u64;
        for _ in 1..n - 1 {
            product *= t;
            t = rng.gen_range(t + 1..=2 * t);
        }
        if n >= 2 {
            product *= t;
        }
    } else {
        let mut t = BigUint::one();
        for _ in 1..n - 1 {
            product *= &t;
            let low = &t + 1u32;
            let high = &t << 1u32;
            t = rng.gen_biguint_range(&low, &(high + 1u32));
        }
        product *= &t;
    }
    product
}

/// Running totals of samples; merging is exact and order-independent.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Accumulator {
    pub count: u64,
    pub sum: BigUint,
    pub sum_squares: BigUint,
}

impl Accumulator {
    pub fn push(&mut self, x: &BigUint) {
        self.count += 1;
        self.sum += x;
        self.sum_squares += x * x;
    }

    pub fn merge(&mut self, other: &Accumulator) {
        self.count += other.count;
        self.sum += &other.sum;
        self.sum_squares += &other.sum_squares;
    }

    pub fn mean(&self) -> BigRational {
        BigRational::new(BigInt::from(self.sum.clone()), BigInt::from(self.count))
    }

    /// Unbiased sample variance divided by the sample count.
    pub fn variance_of_mean(&self) -> BigRational {
        let n = BigInt::from(self.count);
        let sum = BigInt::from(self.sum.clone());
        let spread = &n * BigInt::from(self.sum_squares.clone()) - &sum * &sum;
        BigRational::new(spread, &n * &n * (&n - 1))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Estimate {
    pub n: usize,
    pub samples: u64,
    pub seed: u64,
    pub mean: Real,
    pub std_error: Real,
}

impl Estimate {
    fn from_accumulator(n: usize, seed: u64, acc: &Accumulator) -> Self {
        Estimate {
            n,
            samples: acc.count,
            seed,
            mean: Real::from_ratio(&acc.mean(), DEFAULT_PRECISION),
            std_error: Real::from_ratio(&acc.variance_of_mean(), DEFAULT_PRECISION).sqrt(),
        }
    }

    /// `|mean - value| <= sigmas * std_error`.
    pub fn within(&self, value: &BigUint, sigmas: u32) -> bool {
        let value = Real::from_biguint(value, self.mean.precision());
        let diff = self.mean.sub(&value);
        let diff = if diff.is_negative() {
            Real::zero(diff.precision()).sub(&diff)
        } else {
            diff
        };
        diff <= self.std_error.mul_int(&BigInt::from(sigmas))
    }
}

fn chunk_rng(seed: u64, chunk: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    rng
}

fn run_chunks(n: usize, samples: u64, seed: u64, chunks: impl Iterator<Item = u64>) -> Accumulator {
    let mut acc = Accumulator::default();
    for chunk in chunks {
        let mut rng = chunk_rng(seed, chunk);
        let start = chunk * CHUNK_SAMPLES;
        let end = (start + CHUNK_SAMPLES).min(samples);
        for _ in start..end {
            acc.push(&sample_path(n, &mut rng));
        }
    }
    acc
}

fn check_args(n: usize, samples: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::Precondition(
            "sequence length must be at least 1".into(),
        ));
    }
    if samples < 2 {
        return Err(Error::Precondition(
            "at least two samples are needed".into(),
        ));
    }
    Ok(())
}

/// Mean and standard error of `samples` path products. Deterministic in
/// `(n, samples, seed)`.
pub fn estimate_count(n: usize, samples: u64, seed: u64) -> Result<Estimate> {
    estimate_count_parallel(n, samples, seed, 1)
}

/// Same result as [`estimate_count`], with chunks spread over `threads`.
pub fn estimate_count_parallel(
    n: usize,
    samples: u64,
    seed: u64,
    threads: usize,
) -> Result<Estimate> {
    check_args(n, samples)?;
    let chunks = samples.div_ceil(CHUNK_SAMPLES);
    let threads = threads.clamp(1, chunks as usize) as u64;
    let mut total = Accumulator::default();
    if threads == 1 {
        total = run_chunks(n, samples, seed, 0..chunks);
    } else {
        let parts: Vec<Accumulator> = std::thread::scope(|scope| {
            let handles: Vec<_> = (0..threads)
                .map(|w| {
                    scope.spawn(move || {
                        run_chunks(n, samples, seed, (w..chunks).step_by(threads as usize))
                    })
                })
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("sampling thread panicked"))
                .collect()
        });
        for part in &parts {
            total.merge(part);
        }
    }
    Ok(Estimate::from_accumulator(n, seed, &total))
}

/// The expectation of [`sample_path`] computed by visiting every path,
/// weighting each by its probability.
pub fn exact_path_expectation(n: usize) -> Result<BigRational> {
    if n == 0 || n > 12 {
        return Err(Error::LimitExceeded {
            what: "path enumeration level",
            requested: n,
            limit: 12,
        });
    }
    fn visit(t: u64, remaining: usize, product: &BigUint, weight: &BigRational) -> BigRational {
        // `t` is the label of the current node, which is still to be
        // multiplied in.
        let product = product * t;
        if remaining == 0 {
            return weight * BigRational::from_integer(BigInt::from(product));
        }
        let child_weight = weight / BigRational::from_integer(BigInt::from(t));
        (t + 1..=2 * t)
            .map(|c| visit(c, remaining - 1, &product, &child_weight))
            .fold(BigRational::zero(), |a, b| a + b)
    }
    if n == 1 {
        return Ok(BigRational::one());
    }
    Ok(visit(1, n - 2, &BigUint::one(), &BigRational::one()))
}

/// Sample mean of `t_k^(1/k)` over random paths.
pub fn sampled_label_root(k: usize, samples: u64, seed: u64) -> f64 {
    assert!((1..=62).contains(&k), "label index out of range");
    let mut rng = chunk_rng(seed, 0);
    let mut total = 0.0;
    for _ in 0..samples {
        let mut t = 1u64;
        for _ in 1..k {
            t = rng.gen_range(t + 1..=2 * t);
        }
        total += (t as f64).powf(1.0 / k as f64);
    }
    total / samples as f64
}
