use crate::smooth::{counting, SortedIntSet};

/// Every `D` in `[1, d_max]` with `A(mD) B(mD) < (m^2 + 1) A(D) B(D)`.
///
/// When no such `D` exists up to `d_max`, iterating the reverse inequality
/// gives `A(m^k D) B(m^k D) >= (m^2 + 1)^k A(D) B(D)` for every chain that
/// stays inside the range, which the trivial bound `A(x) B(x) <= x^2`
/// eventually contradicts for infinite sets.
pub fn growth_scales(a: &SortedIntSet, b: &SortedIntSet, m: u64, d_max: u64) -> Vec<u64> {
    let factor = u128::from(m) * u128::from(m) + 1;
    (1..=d_max)
        .filter(|&d| {
            let md = m.saturating_mul(d);
            let big = u128::from(counting(a, md)) * u128::from(counting(b, md));
            let small = u128::from(counting(a, d)) * u128::from(counting(b, d));
            big < factor.saturating_mul(small)
        })
        .collect()
}
