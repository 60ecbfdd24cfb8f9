//! Greatest-prime-factor table and prime enumeration.

use crate::error::{Error, Result};

/// Largest `N` a dense [`FactorTable`] may be built for (4 bytes per entry).
pub const MAX_TABLE_LIMIT: u64 = 1 << 30;

/// Largest bound [`primes_up_to`] will materialize.
pub const MAX_PRIME_LIMIT: u64 = 1 << 32;

/// Anything that can answer `p^+(n)`, the greatest prime factor of `n`.
///
/// `gpf(1)` is `1` for every implementation.
pub trait GpfSource {
    fn gpf(&self, n: u64) -> Result<u64>;

    /// Upper end of the range this source answers, if it is bounded.
    fn limit(&self) -> Option<u64> {
        None
    }
}

/// Dense table of greatest prime factors for every integer in `[1, N]`.
///
/// Immutable once built, so a single table can be shared across threads.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorTable {
    // gpf[0] is a placeholder so that gpf[n] is the entry for n.
    gpf: Vec<u32>,
}

impl FactorTable {
    /// Sieves greatest prime factors for `[1, limit]`.
    ///
    /// Every prime `p` overwrites the entries of its multiples in increasing
    /// order of `p`, so the survivor at each index is the largest prime
    /// divisor. Total work is `sum_{p <= N} N/p`, i.e. `O(N log log N)`.
    pub fn build(limit: u64) -> Result<Self> {
        if limit == 0 {
            return Err(Error::capacity("factor table limit", 0, "at least 1"));
        }
        if limit > MAX_TABLE_LIMIT {
            return Err(Error::capacity("factor table limit", limit, MAX_TABLE_LIMIT));
        }
        let n = limit as usize;
        let mut gpf: Vec<u32> = Vec::new();
        gpf.try_reserve_exact(n + 1)
            .map_err(|_| Error::capacity("factor table bytes", 4 * (n + 1), "available memory"))?;
        gpf.resize(n + 1, 0);
        gpf[1] = 1;
        for p in 2..=n {
            if gpf[p] != 0 {
                continue;
            }
            let pv = p as u32;
            let mut m = p;
            while m <= n {
                gpf[m] = pv;
                m += p;
            }
        }
        Ok(FactorTable { gpf })
    }

    pub fn limit(&self) -> u64 {
        (self.gpf.len() - 1) as u64
    }

    /// `p^+(n)` for `1 <= n <= limit`.
    pub fn greatest_prime_factor(&self, n: u64) -> Result<u64> {
        if n == 0 || n > self.limit() {
            return Err(Error::Range { what: "n", value: n, lo: 1, hi: self.limit() });
        }
        Ok(u64::from(self.gpf[n as usize]))
    }

    /// Entries for `1..=limit`, in order.
    pub fn as_slice(&self) -> &[u32] {
        &self.gpf[1..]
    }

    pub fn is_prime(&self, n: u64) -> Result<bool> {
        Ok(n >= 2 && self.greatest_prime_factor(n)? == n)
    }
}

impl GpfSource for FactorTable {
    fn gpf(&self, n: u64) -> Result<u64> {
        self.greatest_prime_factor(n)
    }

    fn limit(&self) -> Option<u64> {
        Some(FactorTable::limit(self))
    }
}

/// Unbounded source that factors each query by trial division.
#[derive(Clone, Copy, Debug, Default)]
pub struct TrialDivision;

impl GpfSource for TrialDivision {
    fn gpf(&self, n: u64) -> Result<u64> {
        if n == 0 {
            return Err(Error::argument("p^+(0) is undefined"));
        }
        Ok(gpf_by_trial_division(n))
    }
}

/// Table lookups inside the table's range, trial division beyond it.
#[derive(Clone, Copy, Debug)]
pub struct WithFallback<'a>(pub &'a FactorTable);

impl GpfSource for WithFallback<'_> {
    fn gpf(&self, n: u64) -> Result<u64> {
        if n <= self.0.limit() {
            self.0.greatest_prime_factor(n)
        } else {
            TrialDivision.gpf(n)
        }
    }
}

impl<T: GpfSource + ?Sized> GpfSource for &T {
    fn gpf(&self, n: u64) -> Result<u64> {
        (**self).gpf(n)
    }

    fn limit(&self) -> Option<u64> {
        (**self).limit()
    }
}

pub(crate) fn gpf_by_trial_division(mut n: u64) -> u64 {
    let mut largest = 1;
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            largest = d;
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        largest = n;
    }
    largest
}

/// Deterministic primality by trial division; fine for the prime sets used
/// as S-unit bases.
pub fn is_prime(n: u64) -> bool {
    n >= 2 && gpf_by_trial_division(n) == n
}

/// All primes `<= limit`, ascending.
pub fn primes_up_to(limit: u64) -> Result<Vec<u64>> {
    if limit > MAX_PRIME_LIMIT {
        return Err(Error::capacity("prime sieve limit", limit, MAX_PRIME_LIMIT));
    }
    if limit < 2 {
        return Ok(Vec::new());
    }
    let n = limit as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        primes.push(i as u64);
        if let Some(start) = i.checked_mul(i) {
            let mut m = start;
            while m <= n {
                composite[m] = true;
                m += i;
            }
        }
    }
    Ok(primes)
}

/// `pi(y)`, the number of primes `<= y`.
///
/// Uses a segmented sieve so memory stays `O(sqrt(y))` regardless of `y`.
pub fn prime_count(y: f64) -> u64 {
    if y.is_nan() || y < 2.0 {
        return 0;
    }
    let limit = if y >= u64::MAX as f64 { u64::MAX } else { y.floor() as u64 };
    let root = limit.isqrt();
    let base = primes_up_to(root).expect("sqrt of a u64 is within the sieve limit");
    let mut count = base.len() as u64;

    const SEGMENT: u64 = 1 << 16;
    let mut lo = root + 1;
    let mut marks = vec![false; SEGMENT as usize];
    while lo <= limit {
        let hi = lo.saturating_add(SEGMENT - 1).min(limit);
        let len = (hi - lo + 1) as usize;
        marks[..len].fill(false);
        for &p in &base {
            let first = (lo.div_ceil(p) * p).max(p * p);
            let mut m = first;
            while m <= hi {
                marks[(m - lo) as usize] = true;
                m += p;
            }
        }
        count += marks[..len].iter().filter(|&&c| !c).count() as u64;
        if hi == u64::MAX {
            break;
        }
        lo = hi + 1;
    }
    count
}
