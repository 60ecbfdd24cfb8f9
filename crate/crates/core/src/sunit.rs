//! S-units, bounded two-term S-unit equations and solution-count certificates.
//!
//! Everything that decides whether a pair solves `U X + V Y = 1` runs in exact
//! rational arithmetic: machine integers when the magnitudes provably fit,
//! arbitrary precision otherwise. Enumeration is exhaustive only
//! inside the stated box (exponents `|e_i| <= bound`) or window; nothing is
//! claimed about solutions outside it.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::smooth::{is_prime, is_smooth_below, primes_up_to, GpfSource};

/// Maximum number of S-units [`enumerate_sunits`] will materialize.
pub const UNIT_BUDGET: u64 = 2_000_000;

/// Strictly increasing set of primes `S = {p_1 < ... < p_s}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct PrimeSet(Vec<u64>);

impl PrimeSet {
    pub fn new(primes: Vec<u64>) -> Result<Self> {
        if let Some(&p) = primes.iter().find(|&&p| !is_prime(p)) {
            return Err(Error::argument(format!("{p} is not prime")));
        }
        if primes.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::argument("primes must be strictly increasing"));
        }
        Ok(PrimeSet(primes))
    }

    /// All primes `<= y`.
    pub fn up_to(y: f64) -> Result<Self> {
        let limit = if y.is_nan() || y < 2.0 { 0 } else { y.floor() as u64 };
        Ok(PrimeSet(primes_up_to(limit)?))
    }

    pub fn primes(&self) -> &[u64] {
        &self.0
    }

    /// `s = |S|`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl TryFrom<Vec<u64>> for PrimeSet {
    type Error = Error;

    fn try_from(v: Vec<u64>) -> Result<Self> {
        PrimeSet::new(v)
    }
}

impl From<PrimeSet> for Vec<u64> {
    fn from(s: PrimeSet) -> Self {
        s.0
    }
}

/// Where solutions are sought.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Domain {
    /// `X, Y` positive integers: sign `+1`, all exponents `>= 0`.
    PositiveIntegers,
    /// The full unit group `Z_S^*`.
    SignedRationals,
}

impl std::str::FromStr for Domain {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "positive-integers" | "positive" | "integers" => Ok(Domain::PositiveIntegers),
            "signed-rationals" | "signed" | "rationals" => Ok(Domain::SignedRationals),
            other => Err(Error::argument(format!("unknown domain {other:?}"))),
        }
    }
}

/// `sign * prod p_i^{e_i}`, an element of `Z_S^*`.
///
/// The reduced numerator and denominator are cached alongside the exponent
/// vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "SUnitWire", try_from = "SUnitWire")]
pub struct SUnit {
    sign: i8,
    exponents: Vec<i32>,
    numerator: BigInt,
    denominator: BigInt,
}

#[derive(Serialize, Deserialize)]
struct SUnitWire {
    sign: i8,
    exponents: Vec<i32>,
    numerator: String,
    denominator: String,
}

impl From<SUnit> for SUnitWire {
    fn from(u: SUnit) -> Self {
        SUnitWire {
            sign: u.sign,
            exponents: u.exponents,
            numerator: u.numerator.to_string(),
            denominator: u.denominator.to_string(),
        }
    }
}

impl TryFrom<SUnitWire> for SUnit {
    type Error = Error;

    fn try_from(w: SUnitWire) -> Result<Self> {
        let parse = |s: &str| s.parse::<BigInt>().map_err(|_| Error::argument(format!("bad integer {s:?}")));
        let numerator = parse(&w.numerator)?;
        let denominator = parse(&w.denominator)?;
        if w.sign != 1 && w.sign != -1 {
            return Err(Error::argument("sign must be +1 or -1"));
        }
        if !denominator.is_positive() || numerator.is_zero() || (numerator.is_negative() != (w.sign < 0)) {
            return Err(Error::argument("numerator/denominator inconsistent with sign"));
        }
        Ok(SUnit { sign: w.sign, exponents: w.exponents, numerator, denominator })
    }
}

impl SUnit {
    pub fn new(primes: &PrimeSet, sign: i8, exponents: Vec<i32>) -> Result<Self> {
        if sign != 1 && sign != -1 {
            return Err(Error::argument("sign must be +1 or -1"));
        }
        if exponents.len() != primes.len() {
            return Err(Error::argument(format!("expected {} exponents, got {}", primes.len(), exponents.len())));
        }
        let (mut numerator, denominator) = match small_parts(primes.primes(), &exponents) {
            Some((n, d)) => (BigInt::from(n), BigInt::from(d)),
            None => {
                let mut numerator = BigInt::one();
                let mut denominator = BigInt::one();
                for (&p, &e) in primes.primes().iter().zip(&exponents) {
                    let power = num_traits::pow(BigInt::from(p), e.unsigned_abs() as usize);
                    if e >= 0 {
                        numerator *= power;
                    } else {
                        denominator *= power;
                    }
                }
                (numerator, denominator)
            }
        };
        if sign < 0 {
            numerator = -numerator;
        }
        Ok(SUnit { sign, exponents, numerator, denominator })
    }

    /// Decomposes a rational over `primes`; `None` if it is zero or has a
    /// prime factor outside the set.
    pub fn from_rational(primes: &PrimeSet, value: &BigRational) -> Option<Self> {
        if value.is_zero() {
            return None;
        }
        let mut num = value.numer().abs();
        let mut den = value.denom().abs();
        let mut exponents = Vec::with_capacity(primes.len());
        for &p in primes.primes() {
            let p = BigInt::from(p);
            let mut e = 0i32;
            while (&num % &p).is_zero() {
                num /= &p;
                e += 1;
            }
            while (&den % &p).is_zero() {
                den /= &p;
                e -= 1;
            }
            exponents.push(e);
        }
        if !num.is_one() || !den.is_one() {
            return None;
        }
        let sign = if value.is_negative() { -1 } else { 1 };
        Some(SUnit { sign, exponents, numerator: value.numer().clone(), denominator: value.denom().clone() })
    }

    /// Factors a positive integer over `primes`.
    pub fn from_u64(primes: &PrimeSet, n: u64) -> Option<Self> {
        Self::from_rational(primes, &BigRational::from_integer(BigInt::from(n)))
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn exponents(&self) -> &[i32] {
        &self.exponents
    }

    pub fn numerator(&self) -> &BigInt {
        &self.numerator
    }

    pub fn denominator(&self) -> &BigInt {
        &self.denominator
    }

    pub fn value(&self) -> BigRational {
        BigRational::new_raw(self.numerator.clone(), self.denominator.clone())
    }

    pub fn max_abs_exponent(&self) -> u32 {
        self.exponents.iter().map(|e| e.unsigned_abs()).max().unwrap_or(0)
    }

    pub fn in_domain(&self, domain: Domain) -> bool {
        match domain {
            Domain::SignedRationals => true,
            Domain::PositiveIntegers => self.sign > 0 && self.exponents.iter().all(|&e| e >= 0),
        }
    }

    /// The value as a `u64`, when it is a positive integer that fits.
    pub fn as_u64(&self) -> Option<u64> {
        if self.denominator.is_one() {
            self.numerator.to_u64()
        } else {
            None
        }
    }
}

fn small_parts(primes: &[u64], exponents: &[i32]) -> Option<(u64, u64)> {
    let (mut num, mut den) = (1u64, 1u64);
    for (&p, &e) in primes.iter().zip(exponents) {
        let power = p.checked_pow(e.unsigned_abs())?;
        if e >= 0 {
            num = num.checked_mul(power)?;
        } else {
            den = den.checked_mul(power)?;
        }
    }
    Some((num, den))
}

impl PartialOrd for SUnit {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders by value; equal values over the same prime set have equal exponents.
impl Ord for SUnit {
    fn cmp(&self, other: &Self) -> Ordering {
        (&self.numerator * &other.denominator)
            .cmp(&(&other.numerator * &self.denominator))
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl fmt::Display for SUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.denominator.is_one() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/{}", self.numerator, self.denominator)
        }
    }
}

/// Parses `a`, `-a` or `a/b` into an exact rational.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::argument(format!("not a rational number: {s:?}"));
    let (n, d) = match s.trim().split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(n, d))
}

fn rational_to_string(r: &BigRational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// The equation `U X + V Y = 1` with `U V != 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "EquationWire", try_from = "EquationWire")]
pub struct SUnitEquation {
    u: BigRational,
    v: BigRational,
}

#[derive(Serialize, Deserialize)]
struct EquationWire {
    u: String,
    v: String,
}

impl From<SUnitEquation> for EquationWire {
    fn from(e: SUnitEquation) -> Self {
        EquationWire { u: rational_to_string(&e.u), v: rational_to_string(&e.v) }
    }
}

impl TryFrom<EquationWire> for SUnitEquation {
    type Error = Error;

    fn try_from(w: EquationWire) -> Result<Self> {
        SUnitEquation::new(parse_rational(&w.u)?, parse_rational(&w.v)?)
    }
}

impl SUnitEquation {
    pub fn new(u: BigRational, v: BigRational) -> Result<Self> {
        if u.is_zero() || v.is_zero() {
            return Err(Error::argument("S-unit equation needs U * V != 0"));
        }
        Ok(SUnitEquation { u, v })
    }

    pub fn from_ints(un: i64, ud: i64, vn: i64, vd: i64) -> Result<Self> {
        if ud == 0 || vd == 0 {
            return Err(Error::argument("zero denominator"));
        }
        Self::new(BigRational::new(un.into(), ud.into()), BigRational::new(vn.into(), vd.into()))
    }

    pub fn u(&self) -> &BigRational {
        &self.u
    }

    pub fn v(&self) -> &BigRational {
        &self.v
    }

    /// Exact check of `U x + V y == 1`.
    pub fn is_satisfied_by(&self, x: &BigRational, y: &BigRational) -> bool {
        (&self.u * x + &self.v * y).is_one()
    }

    /// The unique `Y = (1 - U x) / V`.
    pub fn solve_for_y(&self, x: &BigRational) -> BigRational {
        (BigRational::one() - &self.u * x) / &self.v
    }
}

/// The region a [`SolutionList`] is exhaustive over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SolutionBound {
    /// Every exponent satisfies `|e_i| <= max_abs_exponent`.
    ExponentBox { max_abs_exponent: u32 },
    /// Integer solutions with both coordinates in `[lo, hi]`.
    Window { lo: u64, hi: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub x: SUnit,
    pub y: SUnit,
}

/// Solutions of one equation, exhaustive within `bound`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionList {
    pub equation: SUnitEquation,
    pub primes: PrimeSet,
    pub domain: Domain,
    pub bound: SolutionBound,
    pub solutions: Vec<Solution>,
    #[serde(rename = "M")]
    pub count: usize,
}

impl SolutionList {
    fn new(
        equation: SUnitEquation,
        primes: PrimeSet,
        domain: Domain,
        bound: SolutionBound,
        solutions: Vec<Solution>,
    ) -> Self {
        let count = solutions.len();
        SolutionList { equation, primes, domain, bound, solutions, count }
    }

    /// `M`, the number of solutions.
    pub fn m(&self) -> usize {
        self.count
    }

    /// Re-checks every stored invariant: exact substitution, domain
    /// membership, no duplicates, `M` equal to the list length.
    pub fn verify(&self) -> bool {
        if self.count != self.solutions.len() {
            return false;
        }
        let mut seen = std::collections::HashSet::new();
        self.solutions.iter().all(|s| {
            self.equation.is_satisfied_by(&s.x.value(), &s.y.value())
                && s.x.in_domain(self.domain)
                && s.y.in_domain(self.domain)
                && seen.insert((s.x.clone(), s.y.clone()))
        })
    }

    /// Integer pairs `(X, Y)`, for lists over positive integers.
    pub fn integer_pairs(&self) -> Vec<(u64, u64)> {
        self.solutions.iter().filter_map(|s| Some((s.x.as_u64()?, s.y.as_u64()?))).collect()
    }
}

fn unit_count(s: usize, bound: u32, domain: Domain) -> u128 {
    let per = match domain {
        Domain::PositiveIntegers => u128::from(bound) + 1,
        Domain::SignedRationals => 2 * u128::from(bound) + 1,
    };
    let signs = if domain == Domain::SignedRationals { 2 } else { 1 };
    let mut total: u128 = signs;
    for _ in 0..s {
        total = total.saturating_mul(per);
    }
    total
}

/// Every S-unit in `domain` with all `|e_i| <= exponent_bound`, ascending by value.
pub fn enumerate_sunits(primes: &PrimeSet, exponent_bound: u32, domain: Domain) -> Result<Vec<SUnit>> {
    let mut out = units_in_box(primes, exponent_bound, domain)?;
    out.sort_unstable();
    Ok(out)
}

fn units_in_box(primes: &PrimeSet, exponent_bound: u32, domain: Domain) -> Result<Vec<SUnit>> {
    let total = unit_count(primes.len(), exponent_bound, domain);
    if total > u128::from(UNIT_BUDGET) {
        return Err(Error::capacity("S-unit enumeration", total, UNIT_BUDGET));
    }
    let lo = match domain {
        Domain::PositiveIntegers => 0,
        Domain::SignedRationals => -(exponent_bound as i32),
    };
    let hi = exponent_bound as i32;
    let signs: &[i8] = match domain {
        Domain::PositiveIntegers => &[1],
        Domain::SignedRationals => &[1, -1],
    };

    let mut out = Vec::with_capacity(total as usize);
    let mut exps = vec![lo; primes.len()];
    loop {
        for &sign in signs {
            out.push(SUnit::new(primes, sign, exps.clone())?);
        }
        // Odometer step.
        let mut i = 0;
        while i < exps.len() && exps[i] == hi {
            exps[i] = lo;
            i += 1;
        }
        if i == exps.len() {
            break;
        }
        exps[i] += 1;
    }
    Ok(out)
}

/// Reduced `(numerator, denominator)` with a positive denominator.
type SmallRational = (i128, i128);

fn reduce_small(n: i128, d: i128) -> SmallRational {
    let g = num_integer::gcd(n, d);
    let (n, d) = (n / g, d / g);
    if d < 0 {
        (-n, -d)
    } else {
        (n, d)
    }
}

fn small(n: &BigInt, limit: i128) -> Option<i128> {
    n.to_i128().filter(|v| v.abs() <= limit)
}

/// Solves over machine integers when every unit part is below `2^40` and
/// every coefficient part below `2^20`: the widest intermediate is then
/// below `2^83`. Returns `None` when those limits do not hold.
fn solve_small(eq: &SUnitEquation, units: &[SUnit]) -> Option<Vec<(usize, usize)>> {
    const UNIT_LIMIT: i128 = 1 << 40;
    const COEFF_LIMIT: i128 = 1 << 20;
    let un = small(eq.u.numer(), COEFF_LIMIT)?;
    let ud = small(eq.u.denom(), COEFF_LIMIT)?;
    let vn = small(eq.v.numer(), COEFF_LIMIT)?;
    let vd = small(eq.v.denom(), COEFF_LIMIT)?;
    let values: Vec<SmallRational> = units
        .iter()
        .map(|u| Some((small(&u.numerator, UNIT_LIMIT)?, small(&u.denominator, UNIT_LIMIT)?)))
        .collect::<Option<_>>()?;
    let index: HashMap<SmallRational, usize> = values.iter().enumerate().map(|(i, &v)| (v, i)).collect();

    Some(
        values
            .par_iter()
            .enumerate()
            .filter_map(|(i, &(xn, xd))| {
                // Y = (1 - U X) / V = (ud xd - un xn) vd / (ud xd vn)
                let num = (ud * xd - un * xn) * vd;
                let den = ud * xd * vn;
                if num == 0 {
                    return None;
                }
                index.get(&reduce_small(num, den)).map(|&j| (i, j))
            })
            .collect(),
    )
}

fn solve_big(eq: &SUnitEquation, units: &[SUnit]) -> Vec<(usize, usize)> {
    let index: HashMap<BigRational, usize> = units.iter().enumerate().map(|(i, u)| (u.value(), i)).collect();
    units.par_iter().enumerate().filter_map(|(i, x)| index.get(&eq.solve_for_y(&x.value())).map(|&j| (i, j))).collect()
}

/// All solutions of `eq` whose coordinates lie in the exponent box and domain.
///
/// For each candidate `X` the equation fixes `Y = (1 - U X) / V`; the pair is
/// kept iff `Y` is itself a unit of the box. Every hit is re-checked by exact
/// substitution and the output is sorted by `(X, Y)`.
pub fn enumerate_solutions(
    eq: &SUnitEquation,
    primes: &PrimeSet,
    exponent_bound: u32,
    domain: Domain,
) -> Result<SolutionList> {
    let units = units_in_box(primes, exponent_bound, domain)?;
    let hits = solve_small(eq, &units).unwrap_or_else(|| solve_big(eq, &units));
    let mut solutions: Vec<Solution> = hits
        .into_iter()
        .map(|(i, j)| {
            let (x, y) = (&units[i], &units[j]);
            assert!(eq.is_satisfied_by(&x.value(), &y.value()), "substitution check failed");
            Solution { x: x.clone(), y: y.clone() }
        })
        .collect();
    solutions.sort_unstable_by(|a, b| a.x.cmp(&b.x).then_with(|| a.y.cmp(&b.y)));

    Ok(SolutionList::new(
        eq.clone(),
        primes.clone(),
        domain,
        SolutionBound::ExponentBox { max_abs_exponent: exponent_bound },
        solutions,
    ))
}

fn smooth_flags<G: GpfSource + ?Sized>(lo: u64, hi: u64, cutoff: f64, src: &G) -> Result<Vec<bool>> {
    (lo..=hi).map(|n| is_smooth_below(n, cutoff, src)).collect()
}

/// Pairs `X - Y = d` of `y`-smooth integers with `lo <= Y < X <= hi`.
///
/// These are the integer solutions of `(1/d) X - (1/d) Y = 1` over the primes
/// `<= y`, restricted to the window. Sorted by `Y`.
pub fn smooth_pair_difference<G: GpfSource + ?Sized>(
    y: f64,
    d: u64,
    lo: u64,
    hi: u64,
    table: &G,
) -> Result<SolutionList> {
    if d == 0 {
        return Err(Error::argument("difference d must be positive"));
    }
    if lo == 0 || lo > hi {
        return Err(Error::argument(format!("invalid window [{lo}, {hi}]")));
    }
    if let Some(limit) = table.limit() {
        if hi > limit {
            return Err(Error::Range { what: "window end", value: hi, lo: 1, hi: limit });
        }
    }
    let primes = PrimeSet::up_to(y)?;
    let smooth = smooth_flags(lo, hi, y, table)?;
    let mut solutions = Vec::new();
    for (i, &ys) in smooth.iter().enumerate() {
        let j = i as u64 + d;
        if !ys || j as usize >= smooth.len() || !smooth[j as usize] {
            continue;
        }
        let small = lo + i as u64;
        let large = small + d;
        solutions.push(Solution {
            x: SUnit::from_u64(&primes, large).expect("smooth over S"),
            y: SUnit::from_u64(&primes, small).expect("smooth over S"),
        });
    }
    let d = BigRational::new(BigInt::one(), BigInt::from(d));
    let eq = SUnitEquation::new(d.clone(), -d)?;
    Ok(SolutionList::new(eq, primes, Domain::PositiveIntegers, SolutionBound::Window { lo, hi }, solutions))
}

/// Result of [`multiplicative_pairs`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultiplicativePairs {
    pub a1: u64,
    pub a2: u64,
    pub b_values: Vec<u64>,
    pub solutions: SolutionList,
}

/// Integers `b` in `(n0 / a1, N / a2]` with `a1 b - 1` and `a2 b - 1` both
/// `y`-smooth, with the induced solutions `X = a1 b - 1`, `Y = a2 b - 1` of
/// `(a2 / (a1 - a2)) X - (a1 / (a1 - a2)) Y = 1`.
pub fn multiplicative_pairs<G: GpfSource + ?Sized>(
    a1: u64,
    a2: u64,
    y: f64,
    n0: u64,
    n: u64,
    table: &G,
) -> Result<MultiplicativePairs> {
    if a1 == 0 || a1 >= a2 {
        return Err(Error::argument(format!("need 1 <= a1 < a2, got a1={a1}, a2={a2}")));
    }
    if n0 == 0 {
        return Err(Error::argument("n0 must be at least 1"));
    }
    let primes = PrimeSet::up_to(y)?;
    let b_lo = n0 / a1 + 1;
    let b_hi = n / a2;
    if b_lo <= b_hi {
        let top = a2 * b_hi - 1;
        if let Some(limit) = table.limit() {
            if top > limit {
                return Err(Error::Range { what: "a2*b-1", value: top, lo: 1, hi: limit });
            }
        }
    }

    let mut b_values = Vec::new();
    let mut solutions = Vec::new();
    for b in b_lo..=b_hi {
        let x = a1 * b - 1;
        let yv = a2 * b - 1;
        if is_smooth_below(x, y, table)? && is_smooth_below(yv, y, table)? {
            b_values.push(b);
            solutions.push(Solution {
                x: SUnit::from_u64(&primes, x).expect("smooth over S"),
                y: SUnit::from_u64(&primes, yv).expect("smooth over S"),
            });
        }
    }

    let diff = BigInt::from(a1) - BigInt::from(a2);
    let eq = SUnitEquation::new(
        BigRational::new(BigInt::from(a2), diff.clone()),
        BigRational::new(-BigInt::from(a1), diff),
    )?;
    let bound = SolutionBound::Window { lo: n0, hi: n.saturating_sub(1) };
    Ok(MultiplicativePairs {
        a1,
        a2,
        b_values,
        solutions: SolutionList::new(eq, primes, Domain::PositiveIntegers, bound, solutions),
    })
}

/// The solution-count bound `2^{8(2s+2)}` for an S-unit equation with `|S| = s`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BsBound {
    pub s: u64,
    pub exponent: u64,
}

impl BsBound {
    /// Materializes `2^exponent`.
    pub fn value(&self) -> BigUint {
        BigUint::one() << self.exponent
    }
}

pub fn bs_bound(s: u64) -> Result<BsBound> {
    if s == 0 {
        return Err(Error::argument("the bound needs a nonempty prime set (s >= 1)"));
    }
    let exponent = s
        .checked_mul(2)
        .and_then(|v| v.checked_add(2))
        .and_then(|v| v.checked_mul(8))
        .ok_or_else(|| Error::capacity("bound exponent", format!("8(2*{s}+2)"), u64::MAX))?;
    Ok(BsBound { s, exponent })
}

/// `M` checked against `2^{8(2s+2)}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificationReport {
    #[serde(rename = "M")]
    pub m: u64,
    pub s: u64,
    pub bound_exponent: u64,
    /// `false` would mean more solutions than the bound allows, which can only
    /// come from an enumeration bug.
    pub certified: bool,
}

impl CertificationReport {
    /// Uses the formula `8(2s+2)` directly, so `s = 0` is reported rather
    /// than rejected.
    pub fn new(m: u64, s: u64) -> Self {
        let bound_exponent = 8 * (2 * s + 2);
        let certified = bound_exponent >= 64 || m <= 1u64 << bound_exponent;
        CertificationReport { m, s, bound_exponent, certified }
    }
}

pub fn certify_count(sol: &SolutionList) -> CertificationReport {
    CertificationReport::new(sol.m() as u64, sol.primes.len() as u64)
}
