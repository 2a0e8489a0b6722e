use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Rows of Pascal's triangle, grown additively on demand.
#[derive(Debug, Clone)]
pub struct PascalTriangle {
    rows: Vec<Vec<BigUint>>,
}

impl Default for PascalTriangle {
    fn default() -> Self {
        Self::new()
    }
}

impl PascalTriangle {
    pub fn new() -> Self {
        PascalTriangle {
            rows: vec![vec![BigUint::one()]],
        }
    }

    pub fn row(&mut self, n: usize) -> &[BigUint] {
        while self.rows.len() <= n {
            let prev = self.rows.last().expect("row 0");
            let mut next = Vec::with_capacity(prev.len() + 1);
            next.push(BigUint::one());
            next.extend(prev.windows(2).map(|w| &w[0] + &w[1]));
            next.push(BigUint::one());
            self.rows.push(next);
        }
        &self.rows[n]
    }
}

/// Descendant counts `d(n, k)`: how many nodes sit `n` generations below a
/// node labelled `k`. Row `n` stores columns `0..=2n+2`, which is exactly
/// what row `n + 1` reads.
///
/// Cells with `1 <= k <= n` use the pruning identity
/// `d(n,k) = d(n,k-1) - d(n-1,k) + d(n-1,2k-1) + d(n-1,2k)`: the subtree of
/// `(k)` is that of `(k-1)` with child `(k)` swapped for `(2k-1)` and
/// `(2k)`. Cells with `n < k <= 2n+2` extend the row as samples of a
/// degree-`n` polynomial, whose `n+1`-st finite difference vanishes:
/// `d(n,k) = sum_{j=1}^{n+1} (-1)^(j-1) C(n+1, j) d(n, k-j)`. The sum is
/// evaluated through the difference table rather than term by term.
#[derive(Debug, Clone)]
pub struct CountTable {
    rows: Vec<Vec<BigUint>>,
}

impl Default for CountTable {
    fn default() -> Self {
        Self::new()
    }
}

impl CountTable {
    /// Row 0 only: `d(0, k) = 1` for `k = 0, 1, 2`.
    pub fn new() -> Self {
        CountTable {
            rows: vec![vec![BigUint::one(); 3]],
        }
    }

    /// A table with rows `0..=n_max`.
    pub fn build(n_max: usize) -> Self {
        let mut table = CountTable::new();
        table.extend_to(n_max);
        table
    }

    /// Index of the last stored row.
    pub fn max_row(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, n: usize) -> Option<&[BigUint]> {
        self.rows.get(n).map(Vec::as_slice)
    }

    pub fn get(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.rows.get(n)?.get(k)
    }

    pub fn extend_to(&mut self, n_max: usize) {
        while self.max_row() < n_max {
            self.push_row();
        }
    }

    /// Computes and stores the next row.
    pub fn push_row(&mut self) -> &[BigUint] {
        let n = self.rows.len();
        let prev = &self.rows[n - 1];
        let width = 2 * n + 3;
        let mut row: Vec<BigUint> = Vec::with_capacity(width);
        row.push(BigUint::zero());
        for k in 1..=n {
            let mut cell = &row[k - 1] + &prev[2 * k - 1];
            cell += &prev[2 * k];
            cell -= &prev[k];
            row.push(cell);
        }
        // Backward differences at the right edge: diag[j] = nabla^j d(n, n).
        // The n-th difference is constant, so each new cell costs n additions.
        let mut work: Vec<BigInt> = row.iter().cloned().map(BigInt::from).collect();
        let mut diag = Vec::with_capacity(n + 1);
        diag.push(work[n].clone());
        for j in 1..=n {
            for i in 0..=n - j {
                let (low, high) = work.split_at_mut(i + 1);
                low[i] -= &high[0];
                low[i] = -std::mem::take(&mut low[i]);
            }
            diag.push(work[n - j].clone());
        }
        for _ in n + 1..width {
            for j in (0..n).rev() {
                let (low, high) = diag.split_at_mut(j + 1);
                low[j] += &high[0];
            }
            row.push(diag[0].to_biguint().expect("counts are nonnegative"));
        }
        self.rows.push(row);
        &self.rows[n]
    }

    /// `s(n) = d(n-1, 1)`, extending the table if needed.
    pub fn count(&mut self, n: usize) -> BigUint {
        assert!(n >= 1, "sequence length must be at least 1");
        self.extend_to(n - 1);
        self.rows[n - 1][1].clone()
    }
}

/// `s(n)` from a fresh table.
pub fn count_fast(n: usize) -> BigUint {
    CountTable::new().count(n)
}

/// Whether `d(n, k) <= 2^(n(n-1)/2) k^n` holds for a stored cell.
pub fn bound_check(table: &CountTable, n: usize, k: usize) -> Result<bool> {
    let value = table.get(n, k).ok_or_else(|| Error::OutOfRange {
        what: "table cell",
        value: BigUint::from(k),
        low: BigUint::zero(),
        high: BigUint::from(table.row(n).map_or(0, |r| r.len().saturating_sub(1))),
    })?;
    let bound = BigUint::from(k).pow(n as u32) << (n * n.saturating_sub(1) / 2);
    Ok(*value <= bound)
}
