use std::sync::OnceLock;

use friable_core::smooth::TrialDivision;
use friable_core::*;
use proptest::prelude::*;

const LIMIT: u64 = 200_000;

fn table() -> &'static FactorTable {
    static TABLE: OnceLock<FactorTable> = OnceLock::new();
    TABLE.get_or_init(|| FactorTable::build(LIMIT).unwrap())
}

fn naive_gpf(mut n: u64) -> u64 {
    let mut g = 1;
    let mut p = 2;
    while p * p <= n {
        while n.is_multiple_of(p) {
            g = p;
            n /= p;
        }
        p += 1;
    }
    if n > 1 {
        g = n;
    }
    g
}

fn y_smooth(n: u64, y: f64) -> bool {
    naive_gpf(n) as f64 <= y
}

fn small_set(max: u64, len: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = SortedIntSet> {
    proptest::collection::btree_set(0..=max, len).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn gpf_matches_trial_division(n in 1..=LIMIT) {
        let g = greatest_prime_factor(n, table()).unwrap();
        prop_assert_eq!(g, naive_gpf(n));
        prop_assert_eq!(smooth::GpfSource::gpf(&TrialDivision, n).unwrap(), g);
    }

    #[test]
    fn gpf_of_product_is_max(a in 1..=400u64, b in 1..=400u64) {
        let t = table();
        prop_assert_eq!(
            greatest_prime_factor(a * b, t).unwrap(),
            greatest_prime_factor(a, t).unwrap().max(greatest_prime_factor(b, t).unwrap())
        );
    }

    #[test]
    fn smoothness_is_monotone_in_y(n in 1..=LIMIT, y1 in 1.0..200.0f64, dy in 0.0..200.0f64) {
        let lo = SmoothnessThreshold::constant(y1).unwrap();
        let hi = SmoothnessThreshold::constant(y1 + dy).unwrap();
        if is_smooth(n, &lo, table()).unwrap() {
            prop_assert!(is_smooth(n, &hi, table()).unwrap());
        }
        prop_assert_eq!(is_smooth(n, &lo, table()).unwrap(), y_smooth(n, y1));
    }

    #[test]
    fn divisors_of_smooth_numbers_are_smooth(a in 1..=400u64, b in 1..=400u64, y in 2.0..50.0f64) {
        let th = SmoothnessThreshold::constant(y).unwrap();
        if is_smooth(a * b, &th, table()).unwrap() {
            prop_assert!(is_smooth(a, &th, table()).unwrap());
            prop_assert!(is_smooth(b, &th, table()).unwrap());
        }
    }

    #[test]
    fn window_is_the_filtered_range(lo in 1..=5000u64, len in 0..=2000u64, y in 2.0..60.0f64) {
        let hi = lo + len;
        let th = SmoothnessThreshold::constant(y).unwrap();
        let got = friable_window(&th, lo, hi, table()).unwrap();
        let want: Vec<u64> = (lo..=hi).filter(|&n| y_smooth(n, y)).collect();
        prop_assert_eq!(got.as_slice(), &want[..]);
    }

    #[test]
    fn counting_is_monotone(set in small_set(1000, 0..=50), x in 0..=1000u64, dx in 0..=1000u64) {
        let (a, b) = (counting(&set, x), counting(&set, x + dx));
        prop_assert!(a <= b);
        prop_assert!(b - a <= dx);
        prop_assert_eq!(a, set.iter().filter(|&e| e <= x).count() as u64, "count at {}", x);
    }

    #[test]
    fn psi_is_monotone(x in 1..=50_000u64, dx in 0..=5000u64, y in 2.0..300.0f64, dy in 0.0..300.0f64) {
        let base = psi_exact(x, y).unwrap();
        prop_assert!(base <= x);
        prop_assert!(base <= psi_exact(x + dx, y).unwrap());
        prop_assert!(base <= psi_exact(x, y + dy).unwrap());
        prop_assert_eq!(psi_exact(x, x as f64).unwrap(), x);
    }

    #[test]
    fn psi_counts_the_window(x in 1..=20_000u64, y in 2.0..100.0f64) {
        let th = SmoothnessThreshold::constant(y).unwrap();
        let w = friable_window(&th, 1, x, table()).unwrap();
        prop_assert_eq!(psi_exact(x, y).unwrap(), w.len() as u64);
    }

    #[test]
    fn pair_window_agrees_with_box_enumeration(y in 2.0..8.0f64, d in 1..=12u64, hi in 2..=3000u64) {
        let pairs = smooth_pair_difference(y, d, 1, hi, table()).unwrap().integer_pairs();
        for &(x, small) in &pairs {
            prop_assert_eq!(x - small, d);
            prop_assert!(y_smooth(x, y) && y_smooth(small, y));
        }
        let brute: Vec<(u64, u64)> =
            (1..=hi.saturating_sub(d)).filter(|&s| y_smooth(s, y) && y_smooth(s + d, y)).map(|s| (s + d, s)).collect();
        prop_assert_eq!(&pairs, &brute);

        // The exponent box of size 11 covers every integer <= 3000 over these primes.
        let primes = PrimeSet::up_to(y).unwrap();
        let eq = SUnitEquation::from_ints(1, d as i64, -1, d as i64).unwrap();
        let boxed = enumerate_solutions(&eq, &primes, 11, Domain::PositiveIntegers).unwrap();
        let mut in_window: Vec<(u64, u64)> =
            boxed.integer_pairs().into_iter().filter(|&(x, s)| s >= 1 && x <= hi).collect();
        in_window.sort_unstable_by_key(|&(_, s)| s);
        prop_assert_eq!(in_window, pairs);
    }

    #[test]
    fn multiplicative_pairs_are_injective(a1 in 1..=6u64, gap in 1..=6u64, y in 2.0..20.0f64, n in 10..=5000u64) {
        let a2 = a1 + gap;
        let r = multiplicative_pairs(a1, a2, y, 1, n, table()).unwrap();
        let xs: Vec<u64> = r.b_values.iter().map(|b| a1 * b - 1).collect();
        let mut dedup = xs.clone();
        dedup.dedup();
        prop_assert_eq!(dedup.len(), xs.len());
        prop_assert_eq!(r.solutions.m(), r.b_values.len());
        for &b in &r.b_values {
            prop_assert!(a2 * b <= n);
            prop_assert!(y_smooth(a1 * b - 1, y) && y_smooth(a2 * b - 1, y));
        }
        prop_assert!(r.solutions.verify());
    }

    #[test]
    fn every_bounded_list_certifies(s_mask in 1u8..64, bound in 1..=3u32, un in -8..=8i64, ud in 1..=8i64) {
        prop_assume!(un != 0);
        let primes: Vec<u64> =
            [2u64, 3, 5, 7, 11, 13].iter().enumerate().filter(|(i, _)| s_mask >> i & 1 == 1).map(|(_, &p)| p).collect();
        let eq = SUnitEquation::from_ints(un, ud, -un, ud).unwrap();
        let list = enumerate_solutions(&eq, &PrimeSet::new(primes).unwrap(), bound, Domain::SignedRationals).unwrap();
        prop_assert!(list.verify());
        let report = certify_count(&list);
        prop_assert!(report.certified);
        prop_assert_eq!(report.bound_exponent, 8 * (2 * report.s + 2));
    }

    #[test]
    fn search_is_sound_and_symmetric(t in small_set(24, 3..=7), multiplicative in any::<bool>()) {
        let mode = if multiplicative { Mode::Multiplicative } else { Mode::Additive };
        let t: SortedIntSet = if multiplicative { t.iter().map(|x| x + 1).collect() } else { t };
        let w = WindowSet::spanning(t.clone()).unwrap();
        let out = search_decompositions(&w, mode, w.n(), &SearchLimits::default()).unwrap();
        prop_assert_eq!(out.status, SearchStatus::Exhausted);
        for c in &out.certificates {
            prop_assert!(verify_certificate(&w, c).unwrap());
            prop_assert!(c.b.smallest() <= c.c.smallest());
            let swapped = DecompositionCertificate { b: c.c.clone(), c: c.b.clone(), ..c.clone() };
            prop_assert!(verify_certificate(&w, &swapped).unwrap());
            prop_assert_eq!(combine(&c.b, &c.c, mode).unwrap(), t.clone());
        }
    }

    #[test]
    fn growth_scales_are_exactly_the_failures(a in small_set(400, 1..=40), b in small_set(400, 1..=40), m in 2..=5u64) {
        let scales = growth_scales(&a, &b, m, 100);
        for d in 1..=100u64 {
            let lhs = counting(&a, m * d) * counting(&b, m * d);
            let rhs = (m * m + 1) * counting(&a, d) * counting(&b, d);
            prop_assert_eq!(scales.contains(&d), lhs < rhs, "D = {}", d);
        }
    }

    #[test]
    fn growth_chain_without_scales(a in small_set(2000, 1..=60), m in 2..=3u64, d0 in 1..=20u64) {
        // With no qualifying scale, counts multiply by at least m^2 + 1 per step.
        let scales = growth_scales(&a, &a, m, 2000);
        let mut d = d0;
        let mut steps = 0u32;
        while m * d <= 2000 && !scales.contains(&d) {
            d *= m;
            steps += 1;
        }
        if steps > 0 {
            let base = counting(&a, d0).pow(2);
            let grown = counting(&a, d).pow(2);
            prop_assert!(grown >= (m * m + 1).pow(steps) * base);
        }
    }

    #[test]
    fn pipeline_rhs_tracks_prime_count(y in 2.0..60.0f64, n in 100..=20_000u64) {
        let r = theorem1_pipeline(y, 1, 2, 1, n, table()).unwrap();
        prop_assert_eq!(r.rhs_exponent, 8 * (2 * prime_count(y) + 2));
        prop_assert_eq!(r.s, prime_count(y));
        prop_assert!(!r.contradiction_reached);
        prop_assert_eq!(r.solution_count as usize, r.b_values.len());
    }

    #[test]
    fn sets_round_trip_through_json(set in small_set(1_000_000, 0..=30)) {
        let text = serde_json::to_string(&set).unwrap();
        let back: SortedIntSet = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(back, set.clone());
        prop_assert_eq!(SortedIntSet::parse_lines(&set.to_lines()).unwrap(), set);
    }
}

#[test]
fn unsorted_json_is_rejected() {
    assert!(serde_json::from_str::<SortedIntSet>("[3,1]").is_err());
    assert!(serde_json::from_str::<SortedIntSet>("[1,1]").is_err());
}

#[test]
fn solution_list_round_trips() {
    let eq = SUnitEquation::from_ints(1, 1, -1, 1).unwrap();
    let list = enumerate_solutions(&eq, &PrimeSet::new(vec![2, 3]).unwrap(), 3, Domain::SignedRationals).unwrap();
    let back: SolutionList = serde_json::from_str(&serde_json::to_string(&list).unwrap()).unwrap();
    assert_eq!(back, list);
    assert!(back.verify());
}
