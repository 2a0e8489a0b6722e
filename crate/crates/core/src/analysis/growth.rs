use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;

use super::real::Real;
use crate::counting::CountTable;
use crate::error::{Error, Result};

/// Base of the logarithm in the `(log n)^2` denominator. The numerator
/// always uses base 2.
///
/// With natural logarithms the series peaks at `n = 32` with
/// `c(32) = 1.1830405981...`; base 2 peaks at the same `n` with every value
/// scaled by `(ln 2)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum LogBase {
    Two,
    #[default]
    E,
}

impl FromStr for LogBase {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2" => Ok(LogBase::Two),
            "e" => Ok(LogBase::E),
            other => Err(Error::Parse(format!(
                "log base must be 2 or e, got `{other}`"
            ))),
        }
    }
}

impl fmt::Display for LogBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LogBase::Two => "2",
            LogBase::E => "e",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthPoint {
    pub n: usize,
    /// `lg s(n)`.
    pub lg_s: Real,
    /// `(lg s(n) - C(n,2) + lg n!) / (log n)^2`.
    pub c_value: Real,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrowthSeries {
    pub base: LogBase,
    pub points: Vec<GrowthPoint>,
}

impl GrowthSeries {
    /// The point with the largest `c`; the first one on ties.
    pub fn peak(&self) -> &GrowthPoint {
        self.points
            .iter()
            .reduce(|best, p| if p.c_value > best.c_value { p } else { best })
            .expect("series has at least one point")
    }

    pub fn point(&self, n: usize) -> Option<&GrowthPoint> {
        self.points.iter().find(|p| p.n == n)
    }
}

/// Growth constants `c(n)` for `4 <= n <= n_max`, from exact `s(n)`.
pub fn growth_series(n_max: usize, base: LogBase, precision: u32) -> Result<GrowthSeries> {
    if n_max < 4 {
        return Err(Error::Precondition(
            "the growth series starts at n = 4".into(),
        ));
    }
    if precision < 16 {
        return Err(Error::Precondition(
            "growth constants need at least 16 bits".into(),
        ));
    }
    // Guard bits cover the cancellation between lg s(n) and C(n,2).
    let work = precision + 32;
    let mut table = CountTable::new();
    let mut factorial: BigUint = (1..4u64).product();
    let mut points = Vec::with_capacity(n_max - 3);
    for n in 4..=n_max {
        factorial *= n as u64;
        let lg_s = Real::log2_biguint(&table.count(n), work);
        let lg_fact = Real::log2_biguint(&factorial, work);
        let choose = Real::from_int(n * (n - 1) / 2, work);
        let log_n = match base {
            LogBase::Two => Real::log2_biguint(&BigUint::from(n), work),
            LogBase::E => Real::ln_biguint(&BigUint::from(n), work),
        };
        let c_value = lg_s.sub(&choose).add(&lg_fact).div(&log_n.mul(&log_n));
        points.push(GrowthPoint {
            n,
            lg_s: lg_s.with_precision(precision),
            c_value: c_value.with_precision(precision),
        });
    }
    Ok(GrowthSeries { base, points })
}

/// `n,lg_s,c` rows with `digits` fractional digits.
pub fn growth_csv(series: &GrowthSeries, digits: usize) -> String {
    let mut out = String::from("n,lg_s,c\n");
    for p in &series.points {
        out.push_str(&format!(
            "{},{},{}\n",
            p.n,
            p.lg_s.to_decimal(digits),
            p.c_value.to_decimal(digits)
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_series_values() {
        // Reference values from an independent 200-bit mpmath computation.
        let e = growth_series(10, LogBase::E, 96).unwrap();
        assert_eq!(e.point(4).unwrap().c_value.to_decimal(12), "0.724481573871");
        assert_eq!(
            e.point(10).unwrap().c_value.to_decimal(12),
            "1.134638118637"
        );
        assert_eq!(e.point(5).unwrap().lg_s.to_decimal(15), "5.357552004618083");
        let two = growth_series(10, LogBase::Two, 96).unwrap();
        assert_eq!(
            two.point(10).unwrap().c_value.to_decimal(12),
            "0.545140303805"
        );
    }

    #[test]
    fn csv_layout() {
        let s = growth_series(5, LogBase::Two, 64).unwrap();
        let csv = growth_csv(&s, 4);
        let lines: Vec<&str> = csv.lines().collect();
        assert_eq!(lines[0], "n,lg_s,c");
        assert_eq!(lines.len(), 3);
        assert!(lines[1].starts_with("4,2.8073,0.3480"));
    }

    #[test]
    fn rejects_short_series() {
        assert!(growth_series(3, LogBase::E, 64).is_err());
        assert!(growth_series(10, LogBase::E, 8).is_err());
    }

    #[test]
    fn parses_bases() {
        assert_eq!("2".parse::<LogBase>().unwrap(), LogBase::Two);
        assert_eq!("e".parse::<LogBase>().unwrap(), LogBase::E);
        assert!("10".parse::<LogBase>().is_err());
    }
}
