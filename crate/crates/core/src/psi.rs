//! Exact and asymptotic evaluation of `Psi(x, y) = |{n <= x : p^+(n) <= y}|`.

use std::collections::HashMap;
use std::sync::RwLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ser::compact_f64;
use crate::smooth::{primes_up_to, MAX_PRIME_LIMIT};

/// Below this prime limit `pi(t)` is answered from a dense table.
const DENSE_PI_LIMIT: u64 = 1 << 24;

/// Prime ranges shorter than this are summed term by term.
const DIRECT_SUM_CUTOFF: usize = 32;

/// Reusable exact `Psi(x, y)` evaluator.
///
/// Counts are computed with the Buchstab recursion
/// `Psi(x, p_k) = Psi(x, p_{k-1}) + Psi(x / p_k, p_k)`, memoized on
/// `(x, k)`. Since `Psi` depends on `y` only through `pi(y)`, every real `y`
/// with the same prime cutoff shares cache entries. Primes above `sqrt(x)`
/// contribute exactly `floor(x / p)` each and are summed in groups of equal
/// quotient instead of recursing.
///
/// The memo sits behind a `RwLock`; a counter can be shared across threads
/// and always returns the same value for the same input.
#[derive(Debug)]
pub struct PsiCounter {
    primes: Vec<u64>,
    prime_limit: u64,
    pi_dense: Option<Vec<u32>>,
    // rows[x][i] = Psi(x, p_i), with rows[x][0] = Psi(x, 1) = 1.
    rows: RwLock<HashMap<u64, Vec<u64>>>,
}

impl PsiCounter {
    /// A counter able to answer any `Psi(x, y)` with `min(y, x) <= prime_limit`.
    pub fn new(prime_limit: u64) -> Result<Self> {
        let primes = primes_up_to(prime_limit)?;
        let pi_dense = (prime_limit <= DENSE_PI_LIMIT).then(|| {
            let mut table = vec![0u32; prime_limit as usize + 1];
            let mut idx = 0usize;
            for (t, slot) in table.iter_mut().enumerate() {
                while idx < primes.len() && primes[idx] <= t as u64 {
                    idx += 1;
                }
                *slot = idx as u32;
            }
            table
        });
        Ok(PsiCounter { primes, prime_limit, pi_dense, rows: RwLock::new(HashMap::new()) })
    }

    pub fn prime_limit(&self) -> u64 {
        self.prime_limit
    }

    /// `Psi(x, y)`.
    ///
    /// `x = 0` gives 0, `y < 2` gives 1 (only `n = 1`), `y >= x` gives `x`.
    pub fn count(&self, x: u64, y: f64) -> Result<u64> {
        if x == 0 {
            return Ok(0);
        }
        if y.is_nan() {
            return Err(Error::argument("y must be a real number"));
        }
        if y < 2.0 {
            return Ok(1);
        }
        if y >= x as f64 {
            return Ok(x);
        }
        let cutoff = y.floor() as u64;
        if cutoff > self.prime_limit {
            return Err(Error::capacity("psi prime cutoff", cutoff, self.prime_limit));
        }
        Ok(self.psi_k(x, self.pi(cutoff)))
    }

    /// Number of primes `<= t`; `t` must not exceed the prime limit.
    fn pi(&self, t: u64) -> usize {
        debug_assert!(t <= self.prime_limit);
        match &self.pi_dense {
            Some(table) => table[t as usize] as usize,
            None => self.primes.partition_point(|&p| p <= t),
        }
    }

    /// Count of `n <= x` whose prime factors all lie among the first `k` primes.
    fn psi_k(&self, x: u64, k: usize) -> u64 {
        if x == 0 {
            return 0;
        }
        if k == 0 {
            return 1;
        }
        if k == 1 {
            // Psi(x, 2) = 1 + Psi(x / 2, 2), unrolled.
            let mut count = 0;
            let mut v = x;
            while v > 0 {
                count += 1;
                v /= 2;
            }
            return count;
        }
        let pk = self.primes[k - 1];
        if pk >= x {
            return x;
        }
        let root = x.isqrt();
        if root < pk {
            let r = self.pi(root);
            return self.psi_k(x, r) + self.large_prime_sum(x, r, k);
        }
        self.psi_row(x, k)
    }

    /// `sum floor(x / p)` over `primes[from..to]`, all of which exceed `sqrt(x)`.
    fn large_prime_sum(&self, x: u64, from: usize, to: usize) -> u64 {
        let ps = &self.primes[from..to];
        if ps.len() <= DIRECT_SUM_CUTOFF {
            return ps.iter().map(|&p| x / p).sum();
        }
        let last = ps[ps.len() - 1];
        let mut sum = 0;
        let mut i = from;
        while i < to {
            let quotient = x / self.primes[i];
            let upper = x / quotient;
            let j = if upper >= last { to } else { self.pi(upper).min(to) };
            sum += quotient * (j - i) as u64;
            i = j;
        }
        sum
    }

    /// Memoized row evaluation for `p_k <= sqrt(x)`.
    fn psi_row(&self, x: u64, k: usize) -> u64 {
        let (mut row, start) = {
            let rows = self.rows.read().unwrap();
            match rows.get(&x) {
                Some(row) if row.len() > k => return row[k],
                Some(row) => (row.clone(), row.len()),
                None => (vec![1], 1),
            }
        };
        row.reserve(k + 1 - start);
        for i in start..=k {
            let p = self.primes[i - 1];
            let next = row[i - 1] + self.psi_k(x / p, i);
            row.push(next);
        }
        let value = row[k];
        let mut rows = self.rows.write().unwrap();
        let entry = rows.entry(x).or_default();
        if entry.len() < row.len() {
            *entry = row;
        }
        value
    }
}

/// Exact `Psi(x, y)` with the convention `p^+(1) = 1`.
pub fn psi_exact(x: u64, y: f64) -> Result<u64> {
    let needed = if y.is_nan() || y < 2.0 || y >= x as f64 { 0 } else { y.floor() as u64 };
    if needed > MAX_PRIME_LIMIT {
        return Err(Error::capacity("psi prime cutoff", needed, MAX_PRIME_LIMIT));
    }
    PsiCounter::new(needed)?.count(x, y)
}

/// `Psi(x, 2) = floor(log2 x) + 1`, via the bit length of `x`.
pub fn psi_base2(x: u64) -> u64 {
    u64::from(u64::BITS - x.leading_zeros())
}

/// One exact evaluation, as reported by the CLI.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PsiValue {
    pub x: u64,
    #[serde(serialize_with = "compact_f64")]
    pub y: f64,
    pub count: u64,
}

impl PsiValue {
    pub fn compute(x: u64, y: f64) -> Result<Self> {
        Ok(PsiValue { x, y, count: psi_exact(x, y)? })
    }
}

/// de Bruijn's exponent
/// `Z = (ln x / ln y) ln(1 + y / ln x) + (y / ln y) ln(1 + ln x / y)`,
/// defined for `x >= y >= 2`.
pub fn debruijn_z(x: f64, y: f64) -> Result<f64> {
    if !(x.is_finite() && y.is_finite()) || y < 2.0 || x < y {
        return Err(Error::argument(format!("de Bruijn Z needs x >= y >= 2, got x={x}, y={y}")));
    }
    Ok(debruijn_z_ln(x.ln(), y))
}

/// [`debruijn_z`] from `ln x`, for `x` too large to hold as a float.
pub fn debruijn_z_ln(ln_x: f64, y: f64) -> f64 {
    let ln_y = y.ln();
    (ln_x / ln_y) * (y / ln_x).ln_1p() + (y / ln_y) * (ln_x / y).ln_1p()
}

/// Comparison of `ln Psi(x, y)` with de Bruijn's `Z`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeBruijnReport {
    pub x: u64,
    #[serde(serialize_with = "compact_f64")]
    pub y: f64,
    pub count: u64,
    #[serde(rename = "Z")]
    pub z: f64,
    pub log_psi: f64,
    pub ratio: f64,
}

pub fn debruijn_ratio(x: u64, y: f64) -> Result<DeBruijnReport> {
    let z = debruijn_z(x as f64, y)?;
    let count = psi_exact(x, y)?;
    let log_psi = (count as f64).ln();
    Ok(DeBruijnReport { x, y, count, z, log_psi, ratio: log_psi / z })
}

/// Acceptance envelope for `ln Psi / Z`.
///
/// The asymptotic error term carries no explicit constant, so this is an
/// engineering envelope measured at desk scale rather than a bound.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeBruijnCorridor {
    pub lower: f64,
    pub upper: f64,
}

impl Default for DeBruijnCorridor {
    fn default() -> Self {
        DeBruijnCorridor { lower: 0.3, upper: 3.0 }
    }
}

impl DeBruijnCorridor {
    pub fn new(lower: f64, upper: f64) -> Result<Self> {
        if !(lower.is_finite() && upper.is_finite() && lower < upper) {
            return Err(Error::argument(format!("corridor needs lower < upper, got [{lower}, {upper}]")));
        }
        Ok(DeBruijnCorridor { lower, upper })
    }

    pub fn contains(&self, ratio: f64) -> bool {
        self.lower <= ratio && ratio <= self.upper
    }
}

/// Grid of `(x, y)` points on which the corridor is checked.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct DeBruijnGrid {
    pub xs: Vec<u64>,
    pub ys: Vec<f64>,
}

impl Default for DeBruijnGrid {
    fn default() -> Self {
        DeBruijnGrid {
            xs: vec![1_000, 10_000, 100_000, 1_000_000, 10_000_000],
            ys: vec![5.0, 11.0, 31.0, 101.0, 1009.0],
        }
    }
}

impl DeBruijnGrid {
    /// Reports for every grid point with `y <= x`, evaluated with one shared
    /// counter.
    pub fn evaluate(&self) -> Result<Vec<DeBruijnReport>> {
        let max_y = self.ys.iter().copied().fold(0.0f64, f64::max);
        let counter = PsiCounter::new(max_y.floor().max(0.0) as u64)?;
        let mut out = Vec::new();
        for &x in &self.xs {
            for &y in &self.ys {
                if y > x as f64 {
                    continue;
                }
                let z = debruijn_z(x as f64, y)?;
                let count = counter.count(x, y)?;
                let log_psi = (count as f64).ln();
                out.push(DeBruijnReport { x, y, count, z, log_psi, ratio: log_psi / z });
            }
        }
        Ok(out)
    }
}
