//! Additive and multiplicative decompositions of finite windows of integer sets.
//!
//! A set `A` is a-reducible when `A = B + C` and m-reducible when `A = B C`,
//! in both cases with `|B|, |C| >= 2`. Infinite sets are only ever seen
//! through a [`WindowSet`]: a truncation that is authoritative on `[n0, N]`.

mod growth;
mod pipeline;
mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::smooth::SortedIntSet;

pub use growth::growth_scales;
pub use pipeline::{case_classifier, theorem1_pipeline, theorem2_pipeline, Case, Pipeline, PipelineReport};
pub use search::{search_decompositions, SearchLimits, SearchOutcome, SearchSpace, SearchStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// `B + C = {b + c}`.
    Additive,
    /// `B C = {b c}`, over positive integers.
    Multiplicative,
}

impl Mode {
    pub(crate) fn apply(self, b: u64, c: u64) -> Option<u64> {
        match self {
            Mode::Additive => b.checked_add(c),
            Mode::Multiplicative => b.checked_mul(c),
        }
    }

    /// The `c` with `b ∘ c = t`, if there is one.
    pub(crate) fn solve(self, t: u64, b: u64) -> Option<u64> {
        match self {
            Mode::Additive => t.checked_sub(b),
            Mode::Multiplicative => (b != 0 && t.is_multiple_of(b)).then(|| t / b),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Additive => "additive",
            Mode::Multiplicative => "multiplicative",
        })
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "additive" | "a" | "add" => Ok(Mode::Additive),
            "multiplicative" | "m" | "mul" => Ok(Mode::Multiplicative),
            other => Err(Error::argument(format!("unknown mode {other:?}"))),
        }
    }
}

/// A finite set together with the window `[n0, N]` on which it is authoritative.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "WindowWire", into = "WindowWire")]
pub struct WindowSet {
    elements: SortedIntSet,
    n0: u64,
    n: u64,
}

#[derive(Serialize, Deserialize)]
struct WindowWire {
    elements: SortedIntSet,
    n0: u64,
    #[serde(rename = "N")]
    n: u64,
}

impl TryFrom<WindowWire> for WindowSet {
    type Error = Error;

    fn try_from(w: WindowWire) -> Result<Self> {
        WindowSet::new(w.elements, w.n0, w.n)
    }
}

impl From<WindowSet> for WindowWire {
    fn from(w: WindowSet) -> Self {
        WindowWire { elements: w.elements, n0: w.n0, n: w.n }
    }
}

impl WindowSet {
    pub fn new(elements: SortedIntSet, n0: u64, n: u64) -> Result<Self> {
        if n0 > n {
            return Err(Error::argument(format!("inverted window [{n0}, {n}]")));
        }
        if let (Some(lo), Some(hi)) = (elements.smallest(), elements.largest()) {
            if lo < n0 || hi > n {
                return Err(Error::argument(format!("elements span [{lo}, {hi}], outside the window [{n0}, {n}]")));
            }
        }
        Ok(WindowSet { elements, n0, n })
    }

    /// Truncates `set` to `[n0, N]`.
    pub fn truncate(set: &SortedIntSet, n0: u64, n: u64) -> Result<Self> {
        if n0 > n {
            return Err(Error::argument(format!("inverted window [{n0}, {n}]")));
        }
        Ok(WindowSet { elements: set.restrict(n0, n), n0, n })
    }

    /// The window `[min, max]` spanned by a nonempty set.
    pub fn spanning(elements: SortedIntSet) -> Result<Self> {
        match (elements.smallest(), elements.largest()) {
            (Some(lo), Some(hi)) => Ok(WindowSet { elements, n0: lo, n: hi }),
            _ => Err(Error::argument("cannot span an empty set")),
        }
    }

    pub fn elements(&self) -> &SortedIntSet {
        &self.elements
    }

    pub fn n0(&self) -> u64 {
        self.n0
    }

    pub fn n(&self) -> u64 {
        self.n
    }
}

/// A witnessing pair `(B, C)` checked on `[verify_lo, verify_hi]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DecompositionCertificate {
    pub b: SortedIntSet,
    pub c: SortedIntSet,
    pub mode: Mode,
    pub verify_lo: u64,
    pub verify_hi: u64,
}

impl DecompositionCertificate {
    /// Orders the pair so that `b <= c` lexicographically.
    pub fn canonical(mut self) -> Self {
        if self.b > self.c {
            std::mem::swap(&mut self.b, &mut self.c);
        }
        self
    }
}

fn check_mode_inputs(b: &SortedIntSet, c: &SortedIntSet, mode: Mode) -> Result<()> {
    if mode == Mode::Multiplicative && (b.contains(0) || c.contains(0)) {
        return Err(Error::argument("multiplicative decompositions are over positive integers; 0 is not allowed"));
    }
    Ok(())
}

/// `B + C` or `B C`, sorted and deduplicated.
pub fn combine(b: &SortedIntSet, c: &SortedIntSet, mode: Mode) -> Result<SortedIntSet> {
    check_mode_inputs(b, c, mode)?;
    let mut out = Vec::with_capacity(b.len() * c.len());
    for x in b {
        for y in c {
            let v = mode
                .apply(x, y)
                .ok_or_else(|| Error::capacity("combined element", format!("{x} {mode} {y}"), u64::MAX))?;
            out.push(v);
        }
    }
    Ok(out.into_iter().collect())
}

/// The part of `B ∘ C` inside `[lo, hi]`; overflowing combinations lie above
/// `hi` and are dropped.
pub(crate) fn combine_within(b: &SortedIntSet, c: &SortedIntSet, mode: Mode, lo: u64, hi: u64) -> BTreeSet<u64> {
    let mut out = BTreeSet::new();
    for x in b {
        for y in c {
            match mode.apply(x, y) {
                Some(v) if v > hi => break,
                Some(v) if v >= lo => {
                    out.insert(v);
                }
                Some(_) => {}
                None => break,
            }
        }
    }
    out
}

/// Whether `cert` witnesses a decomposition of `target` on its verify window.
///
/// Combined elements outside `[verify_lo, verify_hi]` are ignored on both
/// sides. A certificate with `|B| < 2` or `|C| < 2` is never valid.
pub fn verify_certificate(target: &WindowSet, cert: &DecompositionCertificate) -> Result<bool> {
    let (lo, hi) = (cert.verify_lo, cert.verify_hi);
    if lo > hi {
        return Err(Error::argument(format!("inverted verify window [{lo}, {hi}]")));
    }
    if lo < target.n0 || hi > target.n {
        return Err(Error::argument(format!(
            "verify window [{lo}, {hi}] is not inside the target window [{}, {}]",
            target.n0, target.n
        )));
    }
    check_mode_inputs(&cert.b, &cert.c, cert.mode)?;
    if cert.b.len() < 2 || cert.c.len() < 2 {
        return Ok(false);
    }
    let combined = combine_within(&cert.b, &cert.c, cert.mode, lo, hi);
    let expected = target.elements.restrict(lo, hi);
    Ok(combined.len() == expected.len() && combined.iter().copied().eq(expected.iter()))
}
