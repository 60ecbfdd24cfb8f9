//! Smooth (friable) integers: factor tables, thresholds, windows.
//!
//! An integer `n` is `y`-smooth when its greatest prime factor `p^+(n)` is at
//! most `y(n)`. Two entry points exist for the threshold:
//!
//! * [`is_smooth`] / [`friable_window`] evaluate `y(n)` separately for every
//!   element, which is the set-membership definition;
//! * the decomposition pipelines fix a single cutoff `y(N)` for a whole window
//!   (see [`SmoothnessThreshold::fixed_at`]).
//!
//! `p^+(1) = 1`, and `1` counts as smooth for every threshold.

mod set;
mod table;
mod threshold;

pub use set::{counting, SortedIntSet};
pub use table::{
    is_prime, prime_count, primes_up_to, FactorTable, GpfSource, TrialDivision, WithFallback, MAX_PRIME_LIMIT,
    MAX_TABLE_LIMIT,
};
pub use threshold::SmoothnessThreshold;

use crate::error::{Error, Result};

/// `p^+(n)` looked up in `table`.
pub fn greatest_prime_factor(n: u64, table: &FactorTable) -> Result<u64> {
    table.greatest_prime_factor(n)
}

pub fn is_smooth<G: GpfSource + ?Sized>(n: u64, y: &SmoothnessThreshold, src: &G) -> Result<bool> {
    if n == 0 {
        return Err(Error::argument("smoothness is defined for positive integers only"));
    }
    let p = src.gpf(n)?;
    Ok(n == 1 || (p as f64) <= y.eval(n))
}

/// `p^+(n) <= cutoff` with a fixed cutoff.
pub(crate) fn is_smooth_below<G: GpfSource + ?Sized>(n: u64, cutoff: f64, src: &G) -> Result<bool> {
    Ok(n == 1 || (src.gpf(n)? as f64) <= cutoff)
}

fn check_window<G: GpfSource + ?Sized>(lo: u64, hi: u64, src: &G) -> Result<()> {
    if lo == 0 {
        return Err(Error::argument("window must start at 1 or above"));
    }
    if lo > hi {
        return Err(Error::argument(format!("inverted window [{lo}, {hi}]")));
    }
    if let Some(limit) = src.limit() {
        if hi > limit {
            return Err(Error::Range { what: "window end", value: hi, lo: 1, hi: limit });
        }
    }
    Ok(())
}

/// `F_y ∩ [lo, hi]`.
pub fn friable_window<G: GpfSource + ?Sized>(
    y: &SmoothnessThreshold,
    lo: u64,
    hi: u64,
    src: &G,
) -> Result<SortedIntSet> {
    check_window(lo, hi, src)?;
    let mut out = Vec::new();
    for n in lo..=hi {
        if is_smooth(n, y, src)? {
            out.push(n);
        }
    }
    Ok(SortedIntSet::from_sorted_unchecked(out))
}

/// `G_y ∩ [lo, hi]` where `G_y = F_y + {1}`.
///
/// Membership of `f + 1` is decided by `y(f)`, the threshold at the shifted
/// element itself.
pub fn shifted_friable_window<G: GpfSource + ?Sized>(
    y: &SmoothnessThreshold,
    lo: u64,
    hi: u64,
    src: &G,
) -> Result<SortedIntSet> {
    if lo == 0 {
        return Err(Error::argument("window must start at 1 or above"));
    }
    if lo > hi {
        return Err(Error::argument(format!("inverted window [{lo}, {hi}]")));
    }
    if hi < 2 {
        return Ok(SortedIntSet::new());
    }
    let inner = friable_window(y, lo.saturating_sub(1).max(1), hi - 1, src)?;
    Ok(SortedIntSet::from_sorted_unchecked(inner.iter().map(|f| f + 1).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(y: f64) -> SmoothnessThreshold {
        SmoothnessThreshold::constant(y).unwrap()
    }

    #[test]
    fn smoothness_examples() {
        let t = FactorTable::build(100).unwrap();
        assert!(is_smooth(96, &c(3.0), &t).unwrap());
        assert!(!is_smooth(10, &c(3.0), &t).unwrap());
        assert!(is_smooth(1, &c(0.5), &t).unwrap());
        assert!(is_smooth(1, &SmoothnessThreshold::log_scaled(1e-9).unwrap(), &t).unwrap());
        assert!(is_smooth(0, &c(3.0), &t).is_err());
        assert!(matches!(is_smooth(101, &c(3.0), &t), Err(Error::Range { .. })));
    }

    #[test]
    fn window_examples() {
        let t = FactorTable::build(100).unwrap();
        let w = friable_window(&c(5.0), 1, 30, &t).unwrap();
        assert_eq!(w.as_slice(), &[1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 15, 16, 18, 20, 24, 25, 27, 30]);
        assert_eq!(counting(&w, 30), 18);
        assert_eq!(friable_window(&c(2.0), 1, 100, &t).unwrap().as_slice(), &[1, 2, 4, 8, 16, 32, 64]);
        assert!(friable_window(&c(1.0), 2, 100, &t).unwrap().is_empty());
        assert!(friable_window(&c(5.0), 10, 3, &t).is_err());
        assert!(friable_window(&c(5.0), 0, 3, &t).is_err());
        assert!(matches!(friable_window(&c(5.0), 1, 101, &t), Err(Error::Range { .. })));
    }

    #[test]
    fn shifted_examples() {
        let t = FactorTable::build(100).unwrap();
        assert_eq!(shifted_friable_window(&c(2.0), 1, 20, &t).unwrap().as_slice(), &[2, 3, 5, 9, 17]);
        assert_eq!(shifted_friable_window(&c(5.0), 2, 10, &t).unwrap().as_slice(), &[2, 3, 4, 5, 6, 7, 9, 10]);
        assert!(shifted_friable_window(&c(1.0), 3, 50, &t).unwrap().is_empty());
        assert!(shifted_friable_window(&c(1.0), 1, 1, &t).unwrap().is_empty());
    }

    #[test]
    fn per_element_threshold() {
        // y(n) = n^0.5: 12 has p^+ = 3 <= 3.46, 14 has 7 > 3.74.
        let t = FactorTable::build(100).unwrap();
        let y = SmoothnessThreshold::power(0.5).unwrap();
        assert!(is_smooth(12, &y, &t).unwrap());
        assert!(!is_smooth(14, &y, &t).unwrap());
        let w = friable_window(&y, 1, 100, &t).unwrap();
        for n in w.iter() {
            assert!((t.greatest_prime_factor(n).unwrap() as f64) <= (n as f64).sqrt() || n == 1);
        }
    }

    #[test]
    fn power_at_least_one_accepts_everything() {
        let t = FactorTable::build(2000).unwrap();
        for eps in [1.0, 1.5, 3.0] {
            let y = SmoothnessThreshold::power(eps).unwrap();
            assert_eq!(friable_window(&y, 1, 2000, &t).unwrap().len(), 2000);
        }
    }
}
