//! Acceptance criteria, one line each. Runs as a plain binary so the report
//! is printed in order; pass criterion numbers as arguments to run a subset.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use common::*;
use tournament_core::analysis::{
    continuous_expectation, estimate_count_parallel, exact_path_expectation, growth_series,
    lower_bound,
};
use tournament_core::counting::{
    bound_check, count_dfs, count_via_polynomial, count_via_profile, level_polynomial,
    published_count,
};
use tournament_core::{phi, CountTable, LogBase, PUBLISHED_COUNTS};

fn published(n: usize) -> BigUint {
    published_count(n).unwrap()
}

fn threads() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

fn exact_values() -> Check {
    let start = Instant::now();
    let mut table = CountTable::new();
    for n in 1..=PUBLISHED_COUNTS.len() {
        let s = table.count(n);
        if s != published(n) {
            return Err(format!("s({n}) = {s}, published {}", published(n)));
        }
    }
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(5) {
        return Err(format!("sweep took {elapsed:?}"));
    }
    Ok(format!("s(1..22) exact in {elapsed:?}"))
}

fn method_agreement() -> Check {
    let mut table = CountTable::new();
    for n in 1..=30 {
        let fast = table.count(n);
        let poly = count_via_polynomial(n).map_err(|e| e.to_string())?;
        if poly != fast {
            return Err(format!("poly s({n}) = {poly}, fast {fast}"));
        }
        if n <= 20 {
            let profile = count_via_profile(n).map_err(|e| e.to_string())?;
            if profile != fast {
                return Err(format!("profile s({n}) = {profile}, fast {fast}"));
            }
        }
        if n <= 9 {
            let dfs = count_dfs(n).map_err(|e| e.to_string())?;
            if dfs != fast {
                return Err(format!("dfs s({n}) = {dfs}, fast {fast}"));
            }
        }
    }
    Ok("profile n <= 20, dfs n <= 9, poly n <= 30".into())
}

fn polynomial_fixtures() -> Check {
    let fixtures: [(usize, &[i64], i64); 3] = [
        (2, &[0, 1, 3], 2),
        (3, &[0, 1, 6, 7], 2),
        (4, &[0, 6, 63, 154, 105], 8),
    ];
    for (n, numerators, denominator) in fixtures {
        let p = level_polynomial(n).map_err(|e| e.to_string())?;
        for (power, &c) in numerators.iter().enumerate() {
            let expected = BigRational::new(BigInt::from(c), BigInt::from(denominator));
            if p.polynomial().coefficient(power) != expected {
                return Err(format!("{p}: coefficient of k^{power}"));
            }
        }
        if p.polynomial().degree() != n as isize {
            return Err(format!("{p}: degree"));
        }
    }
    Ok("p_2, p_3, p_4 match".into())
}

fn bijection_fixtures() -> Check {
    let mut chains = vec![
        (recurrence(&[1], 1, 1, 40), recurrence(&[1, 2], 2, 0, 40)),
        (powers_of_two(40), powers_of_two(40)),
        (
            recurrence(&[1, 2], 2, 0, 30),
            recurrence(&[1, 2, 3], 3, 0, 30),
        ),
        (
            recurrence(&[1, 2, 3], 3, 0, 30),
            recurrence(&[1, 2, 3, 7], 4, 0, 30),
        ),
        (
            recurrence(&[1, 2], 2, 1, 30),
            recurrence(&[1, 2, 4], 3, 0, 30),
        ),
    ];
    chains.push((
        seq(&[1, 2, 4, 7, 12, 20, 33, 54, 88, 143]),
        seq(&[1, 2, 4, 7, 13, 24, 44, 81, 149, 274]),
    ));
    chains.push((
        seq(&[1, 2, 3, 6, 11, 20, 37]),
        seq(&[1, 2, 3, 7, 13, 25, 48]),
    ));
    for (t, m) in &chains {
        let image = phi(t).map_err(|e| e.to_string())?;
        if image != *m {
            return Err(format!("phi({t}) = {image}, expected {m}"));
        }
    }
    let swept = round_trip_sweep(9)?;
    let direct = round_trip_direct(8)?;
    let mut rng = ChaCha8Rng::seed_from_u64(60);
    random_round_trips(1000, 60, &mut rng)?;
    Ok(format!(
        "{} chains; round trip on {swept} sequences of length <= 9 ({direct} of length <= 8 also through phi_inverse), 1000 random of length 60",
        chains.len()
    ))
}

fn structure_theorems() -> Check {
    let nodes = extension_structure(8)?;
    tree_shapes(8)?;
    rank_identity_sweep(8)?;
    oracle_agreement(8)?;
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    kbonacci_random(1000, &mut rng)?;
    Ok(format!(
        "{nodes} Meeussen nodes to depth 8, 1000 k-bonacci instances"
    ))
}

fn bounds() -> Check {
    let table = CountTable::build(64);
    let mut cells = 0;
    for n in 0..=64 {
        for k in 0..table.row(n).unwrap().len() {
            if !bound_check(&table, n, k).map_err(|e| e.to_string())? {
                return Err(format!("d({n},{k}) exceeds the bound"));
            }
            cells += 1;
        }
    }
    let mut counts = CountTable::new();
    for n in 1..=40 {
        let s = counts.count(n);
        let choose = (n - 1) * n.saturating_sub(2) / 2;
        if s > BigUint::one() << choose {
            return Err(format!("lg s({n}) > C({}, 2)", n - 1));
        }
        if n >= 2 {
            let expectation = continuous_expectation(n).map_err(|e| e.to_string())?;
            let low = lower_bound(n, 128).map_err(|e| e.to_string())?;
            if low.cmp_ratio(&expectation).is_gt() {
                return Err(format!("lower_bound({n}) > continuous_expectation({n})"));
            }
            if expectation > BigRational::from_integer(BigInt::from(s)) {
                return Err(format!("continuous_expectation({n}) > s({n})"));
            }
        }
    }
    Ok(format!(
        "{cells} cells to n = 64; lg bound and sandwich to n = 40"
    ))
}

fn asymptotics() -> Check {
    let start = Instant::now();
    let series = growth_series(64, LogBase::E, 128).map_err(|e| e.to_string())?;
    let peak = series.peak();
    let c32 = series.point(32).unwrap().c_value.to_f64();
    if peak.n != 32 {
        return Err(format!("peak at n = {}", peak.n));
    }
    if (c32 - 1.18304060).abs() > 1e-6 {
        return Err(format!("c(32) = {c32}"));
    }
    Ok(format!(
        "natural-log denominator: peak at 32, c(32) = {} ({:?})",
        series.point(32).unwrap().c_value.to_decimal(10),
        start.elapsed()
    ))
}

fn monte_carlo() -> Check {
    for n in 1..=7 {
        let exact = exact_path_expectation(n).map_err(|e| e.to_string())?;
        if exact != BigRational::from_integer(BigInt::from(published(n))) {
            return Err(format!("path expectation at n = {n} is {exact}"));
        }
    }
    let target = published(8);
    let mut inside = 0;
    for seed in 0..100 {
        let estimate =
            estimate_count_parallel(8, 100_000, seed, threads()).map_err(|e| e.to_string())?;
        if estimate.within(&target, 3) {
            inside += 1;
        }
    }
    if inside < 99 {
        return Err(format!("{inside}/100 seeds within 3 sigma"));
    }
    Ok(format!(
        "exact for n <= 7; {inside}/100 seeds within 3 sigma at n = 8"
    ))
}

/// Least-squares slope of `ln y` against `ln x`.
fn log_log_slope(points: &[(f64, f64)]) -> f64 {
    let logs: Vec<(f64, f64)> = points.iter().map(|&(x, y)| (x.ln(), y.ln())).collect();
    let len = logs.len() as f64;
    let mx = logs.iter().map(|p| p.0).sum::<f64>() / len;
    let my = logs.iter().map(|p| p.1).sum::<f64>() / len;
    let sxy: f64 = logs.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = logs.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

fn performance() -> Check {
    let start = Instant::now();
    let mut table = CountTable::build(99);
    let mut rows = Vec::new();
    for n in 100..=190 {
        let row_start = Instant::now();
        table.push_row();
        rows.push((n as f64, row_start.elapsed().as_secs_f64()));
    }
    let s190 = table.count(190);
    let total = start.elapsed();
    let slope = log_log_slope(&rows);
    if slope > 4.0 {
        return Err(format!("row cost grows like n^{slope:.2}"));
    }
    if total > Duration::from_secs(600) {
        return Err(format!("s(190) took {total:?}"));
    }
    Ok(format!(
        "row cost ~ n^{slope:.2} over rows 100..190; s(190) has {} digits, {total:?}",
        s190.to_string().len()
    ))
}

type Criterion = (u32, &'static str, fn() -> Check);

const CRITERIA: [Criterion; 9] = [
    (1, "exact values", exact_values),
    (2, "method agreement", method_agreement),
    (3, "polynomial fixtures", polynomial_fixtures),
    (4, "bijection fixtures and round trips", bijection_fixtures),
    (5, "structure theorems", structure_theorems),
    (6, "bounds", bounds),
    (7, "asymptotics", asymptotics),
    (8, "monte carlo", monte_carlo),
    (9, "performance", performance),
];

fn main() {
    let selected: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let mut failures = 0;
    for (id, name, check) in CRITERIA {
        if !selected.is_empty() && !selected.contains(&id) {
            continue;
        }
        let start = Instant::now();
        let outcome =
            catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id} ({name}): PASS [{secs:.1}s] {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id} ({name}): FAIL [{secs:.1}s] {detail}");
            }
        }
    }
    if failures > 0 {
        std::process::exit(1);
    }
}
