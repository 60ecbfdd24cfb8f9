//! Inputs shared by the benchmarks.

use friable_core::{Domain, PrimeSet, SUnitEquation, SortedIntSet, WindowSet};

/// `X - Y = 1` over the given primes, in the signed-rational box.
pub fn unit_difference(primes: &[u64]) -> (SUnitEquation, PrimeSet, Domain) {
    (
        SUnitEquation::from_ints(1, 1, -1, 1).expect("nonzero coefficients"),
        PrimeSet::new(primes.to_vec()).expect("valid primes"),
        Domain::SignedRationals,
    )
}

/// `{0, ..., n - 1}`: decomposable in many ways, so the search tree is wide.
pub fn interval(n: u64) -> WindowSet {
    WindowSet::spanning((0..n).collect()).expect("nonempty")
}

/// A set with no additive decomposition; the search has to exhaust the space.
pub fn primitive_target() -> WindowSet {
    let set: SortedIntSet = [0, 1, 3, 7, 12, 20, 30, 44].into_iter().collect();
    WindowSet::spanning(set).expect("nonempty")
}
