//! Finite-scale reports of the two contradiction arguments.
//!
//! Each pipeline takes a hypothetical decomposition's first two generators,
//! builds the largest admissible `B̃_N` inside `[n0, N]`, turns it into
//! S-unit solutions over the primes `<= y`, and puts both sides of the final
//! inequality `c Psi(N, y)^{1/2} < 2^{8(2 pi(y) + 2)}` next to each other.
//! The contradiction needs `ln N` of the order of `2^32 y`, so at any
//! computable `N` the report shows the inequality holding, together with the
//! size of the gap in bits.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::psi::psi_exact;
use crate::ser::compact_f64;
use crate::smooth::{prime_count, FactorTable};
use crate::sunit::{multiplicative_pairs, smooth_pair_difference};

/// Which regime of `y(N)` a parameter pair falls in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Case {
    /// `2 <= y <= ln ln N`.
    #[serde(rename = "CASE1")]
    Case1,
    /// `ln ln N < y < 2^{-32} ln N`.
    #[serde(rename = "CASE2")]
    Case2,
    /// Neither; the hypothesis `y(N) < 2^{-32} ln N` (or `y >= 2`) fails.
    #[serde(rename = "out-of-hypothesis")]
    OutOfHypothesis,
}

/// Classifies `(N, y)` given `ln N`, so that astronomically large `N` can be
/// described without materializing it.
pub fn case_classifier(log_n: f64, y: f64) -> Result<Case> {
    if !(log_n.is_finite() && log_n > std::f64::consts::E) {
        return Err(Error::argument(format!("ln N must exceed e so that ln ln N is positive, got {log_n}")));
    }
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::argument(format!("y must be a positive real, got {y}")));
    }
    let log_log_n = log_n.ln();
    let upper = log_n * 2f64.powi(-32);
    Ok(if (2.0..=log_log_n).contains(&y) {
        Case::Case1
    } else if y > log_log_n && y < upper && y >= 2.0 {
        Case::Case2
    } else {
        Case::OutOfHypothesis
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Pipeline {
    Theorem1,
    Theorem2,
}

/// Both sides of the final inequality for one parameter set.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PipelineReport {
    pub pipeline: Pipeline,
    #[serde(serialize_with = "compact_f64")]
    pub y_value: f64,
    pub a1: u64,
    pub a2: u64,
    pub n0: u64,
    #[serde(rename = "N")]
    pub n: u64,
    /// Constant-factor parameter `m`; only the multiplicative pipeline uses it.
    #[serde(rename = "m", skip_serializing_if = "Option::is_none", default)]
    pub multiplier: Option<u64>,
    /// `s = pi(y)`.
    pub s: u64,
    /// `Psi(N, y)`, exact.
    pub psi: u64,
    /// `Psi^{1/2} / 3` or `Psi^{1/2} / (3m)`.
    pub lhs: f64,
    pub log2_lhs: f64,
    /// `8(2s + 2)`; the right-hand side is `2^rhs_exponent`.
    pub rhs_exponent: u64,
    /// `rhs_exponent - log2_lhs`; positive means no contradiction.
    pub log2_gap: f64,
    /// Elements of the maximal `B̃_N`.
    pub b_values: Vec<u64>,
    /// Number of S-unit solutions produced from `B̃_N`.
    #[serde(rename = "M")]
    pub solution_count: u64,
    pub case_label: Case,
    pub contradiction_reached: bool,
}

fn check_common(y: f64, a1: u64, a2: u64, n0: u64, n: u64, table: &FactorTable) -> Result<()> {
    if !y.is_finite() || y <= 0.0 {
        return Err(Error::argument(format!("y must be a positive real, got {y}")));
    }
    if a1 >= a2 {
        return Err(Error::argument(format!("need a1 < a2, got a1={a1}, a2={a2}")));
    }
    if n0 > n {
        return Err(Error::argument(format!("inverted window [{n0}, {n}]")));
    }
    if n == 0 || n > table.limit() {
        return Err(Error::Range { what: "N", value: n, lo: 1, hi: table.limit() });
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    pipeline: Pipeline,
    y: f64,
    a1: u64,
    a2: u64,
    n0: u64,
    n: u64,
    multiplier: Option<u64>,
    b_values: Vec<u64>,
) -> Result<PipelineReport> {
    let s = prime_count(y);
    let psi = psi_exact(n, y)?;
    let divisor = 3.0 * multiplier.unwrap_or(1) as f64;
    let lhs = (psi as f64).sqrt() / divisor;
    let log2_lhs = 0.5 * (psi as f64).log2() - divisor.log2();
    let rhs_exponent = 8 * (2 * s + 2);
    let log_n = (n as f64).ln();
    let case_label = case_classifier(log_n, y).unwrap_or(Case::OutOfHypothesis);
    Ok(PipelineReport {
        pipeline,
        y_value: y,
        a1,
        a2,
        n0,
        n,
        multiplier,
        s,
        psi,
        lhs,
        log2_lhs,
        rhs_exponent,
        log2_gap: rhs_exponent as f64 - log2_lhs,
        solution_count: b_values.len() as u64,
        b_values,
        case_label,
        contradiction_reached: log2_lhs >= rhs_exponent as f64,
    })
}

/// Additive pipeline: `B̃_N = {b : n0 - a1 <= b <= N - a2}` with `a1 + b`,
/// `a2 + b` both `y`-smooth, i.e. the smooth pairs at distance `a2 - a1`.
pub fn theorem1_pipeline(y: f64, a1: u64, a2: u64, n0: u64, n: u64, table: &FactorTable) -> Result<PipelineReport> {
    check_common(y, a1, a2, n0, n, table)?;
    // Y = a1 + b must be a positive integer >= n0, and b >= 0.
    let lo = n0.max(a1).max(1);
    let b_values = if lo >= n {
        Vec::new()
    } else {
        smooth_pair_difference(y, a2 - a1, lo, n, table)?
            .integer_pairs()
            .into_iter()
            .map(|(_, small)| small - a1)
            .collect()
    };
    assemble(Pipeline::Theorem1, y, a1, a2, n0, n, None, b_values)
}

/// Multiplicative pipeline: `B̃_N = {b : n0/a1 < b <= N/a2}` with
/// `a1 b - 1`, `a2 b - 1` both `y`-smooth, and left-hand constant `1/(3m)`.
#[allow(clippy::too_many_arguments)]
pub fn theorem2_pipeline(
    y: f64,
    a1: u64,
    a2: u64,
    n0: u64,
    n: u64,
    m: u64,
    table: &FactorTable,
) -> Result<PipelineReport> {
    check_common(y, a1, a2, n0, n, table)?;
    if m == 0 {
        return Err(Error::argument("m must be at least 1"));
    }
    let pairs = multiplicative_pairs(a1, a2, y, n0, n, table)?;
    assemble(Pipeline::Theorem2, y, a1, a2, n0, n, Some(m), pairs.b_values)
}
