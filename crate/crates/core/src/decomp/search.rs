//! Exhaustive decomposition search over a finite target.
//!
//! The search looks for `(B, C)` with `|B|, |C| >= 2`, all elements at most
//! `max_element`, and `B ∘ C` equal to the target's elements. Equality is
//! exact: combined values outside the target are not tolerated anywhere,
//! including below `n0`, so the low segment of the window is never varied.
//!
//! Write `t1` for the smallest target element. Any solution has
//! `min B ∘ min C = t1`, so the search fixes `b1 = min B` (which fixes
//! `c1 = min C`) and then grows `B` from the pool of `b` with `b ∘ c1` in the
//! target. For a partial `B` every admissible `C` lies inside
//! `∩_{b in B} (T ⊖ b)`, which shrinks as `B` grows and prunes most branches.
//! For each complete `B` the subsets of that intersection which cover the
//! target are enumerated.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{DecompositionCertificate, Mode, WindowSet};
use crate::error::{Error, Result};
use crate::smooth::SortedIntSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Search-tree nodes to visit before giving up.
    pub max_nodes: u64,
    /// Stop after this many certificates; `None` collects them all.
    pub max_certificates: Option<usize>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits { max_nodes: 10_000_000, max_certificates: None }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchStatus {
    /// The whole space was searched; the certificate list is complete.
    Exhausted,
    /// The node budget ran out; the list is partial and proves nothing about
    /// absence.
    BudgetExceeded,
    /// Stopped early after reaching `max_certificates`.
    CertificateLimit,
}

/// What an exhaustive run covered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpace {
    pub mode: Mode,
    pub n0: u64,
    #[serde(rename = "N")]
    pub n: u64,
    pub target_size: usize,
    pub min_element: u64,
    pub max_element: u64,
    pub description: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    /// Canonical (`b <= c`), sorted by `(|B|, B, C)`.
    pub certificates: Vec<DecompositionCertificate>,
    pub nodes: u64,
    pub space: SearchSpace,
}

impl SearchOutcome {
    /// True when the search finished and found nothing.
    pub fn proves_primitive(&self) -> bool {
        self.status == SearchStatus::Exhausted && self.certificates.is_empty()
    }
}

pub fn search_decompositions(
    target: &WindowSet,
    mode: Mode,
    max_element: u64,
    limits: &SearchLimits,
) -> Result<SearchOutcome> {
    let t = target.elements().as_slice();
    if t.is_empty() {
        return Err(Error::argument("cannot decompose an empty target"));
    }
    if mode == Mode::Multiplicative && t[0] == 0 {
        return Err(Error::argument("multiplicative targets must not contain 0"));
    }
    let min_element = match mode {
        Mode::Additive => 0,
        Mode::Multiplicative => 1,
    };
    let space = SearchSpace {
        mode,
        n0: target.n0(),
        n: target.n(),
        target_size: t.len(),
        min_element,
        max_element,
        description: format!(
            "all B, C within [{min_element}, {max_element}] with |B| >= 2, |C| >= 2 and B {} C equal to the {} target elements",
            if mode == Mode::Additive { "+" } else { "*" },
            t.len()
        ),
    };

    let mut s = Searcher { t, mode, max_element, limits, nodes: 0, stop: None, found: BTreeSet::new() };
    s.run();

    let status = s.stop.unwrap_or(SearchStatus::Exhausted);
    let (n0, n) = (target.n0(), target.n());
    let mut certificates: Vec<DecompositionCertificate> = s
        .found
        .into_iter()
        .map(|(b, c)| DecompositionCertificate {
            b: SortedIntSet::from_sorted_unchecked(b),
            c: SortedIntSet::from_sorted_unchecked(c),
            mode,
            verify_lo: n0,
            verify_hi: n,
        })
        .collect();
    certificates.sort_by(|x, y| (x.b.len(), &x.b, &x.c).cmp(&(y.b.len(), &y.b, &y.c)));

    Ok(SearchOutcome { status, certificates, nodes: s.nodes, space })
}

type Bits = Vec<u64>;

struct Searcher<'a> {
    t: &'a [u64],
    mode: Mode,
    max_element: u64,
    limits: &'a SearchLimits,
    nodes: u64,
    stop: Option<SearchStatus>,
    found: BTreeSet<(Vec<u64>, Vec<u64>)>,
}

impl Searcher<'_> {
    fn index_of(&self, v: u64) -> Option<usize> {
        self.t.binary_search(&v).ok()
    }

    fn in_target(&self, v: Option<u64>) -> bool {
        v.is_some_and(|v| self.index_of(v).is_some())
    }

    /// Counts a node; false once any limit has been hit.
    fn tick(&mut self) -> bool {
        if self.stop.is_some() {
            return false;
        }
        self.nodes += 1;
        if self.nodes > self.limits.max_nodes {
            self.stop = Some(SearchStatus::BudgetExceeded);
            return false;
        }
        true
    }

    fn run(&mut self) {
        let t1 = self.t[0];
        // Canonical pairs have min B <= min C, so b1 <= c1.
        let firsts: Vec<(u64, u64)> = match self.mode {
            Mode::Additive => (0..=t1 / 2).map(|b1| (b1, t1 - b1)).collect(),
            Mode::Multiplicative => {
                (1..=t1.isqrt()).filter(|d| t1.is_multiple_of(*d)).map(|b1| (b1, t1 / b1)).collect()
            }
        };
        let max_size = self.t.len().saturating_sub(1);
        for size in 2..=max_size {
            for &(b1, c1) in &firsts {
                if c1 > self.max_element {
                    continue;
                }
                // All c >= c1 with b1 ∘ c in the target, ascending.
                let cmax: Vec<u64> = self
                    .t
                    .iter()
                    .filter_map(|&t| self.mode.solve(t, b1))
                    .filter(|&c| c >= c1 && c <= self.max_element)
                    .collect();
                if cmax.len() < 2 {
                    continue;
                }
                let pool: Vec<u64> = self
                    .t
                    .iter()
                    .filter_map(|&t| self.mode.solve(t, c1))
                    .filter(|&b| b > b1 && b <= self.max_element)
                    .collect();
                let mut b = vec![b1];
                self.grow_b(&mut b, &cmax, &pool, 0, size);
                if self.stop.is_some() {
                    return;
                }
            }
        }
    }

    fn grow_b(&mut self, b: &mut Vec<u64>, cmax: &[u64], pool: &[u64], start: usize, size: usize) {
        if !self.tick() {
            return;
        }
        if b.len() == size {
            self.choose_c(b, cmax);
            return;
        }
        let need = size - b.len();
        if pool.len() < start + need {
            return;
        }
        for i in start..=pool.len() - need {
            let next = pool[i];
            let narrowed: Vec<u64> =
                cmax.iter().copied().filter(|&c| self.in_target(self.mode.apply(next, c))).collect();
            if narrowed.len() < 2 {
                continue;
            }
            b.push(next);
            self.grow_b(b, &narrowed, pool, i + 1, size);
            b.pop();
            if self.stop.is_some() {
                return;
            }
        }
    }

    /// Enumerates `C ⊆ cmax` with `min C = cmax[0]`, `|C| >= 2` and `B ∘ C`
    /// covering the target. `B ∘ cmax` never leaves the target, so covering is
    /// the only remaining condition.
    fn choose_c(&mut self, b: &[u64], cmax: &[u64]) {
        let words = self.t.len().div_ceil(64);
        let cover: Vec<Bits> = cmax
            .iter()
            .map(|&c| {
                let mut bits = vec![0u64; words];
                for &x in b {
                    let i = self.index_of(self.mode.apply(x, c).unwrap()).unwrap();
                    bits[i / 64] |= 1 << (i % 64);
                }
                bits
            })
            .collect();
        let mut full = vec![u64::MAX; words];
        if !self.t.len().is_multiple_of(64) {
            full[words - 1] = (1u64 << (self.t.len() % 64)) - 1;
        }
        // suffix[i] = OR of cover[i..].
        let mut suffix = vec![vec![0u64; words]; cmax.len() + 1];
        for i in (0..cmax.len()).rev() {
            suffix[i] = or(&suffix[i + 1], &cover[i]);
        }
        if suffix[0] != full {
            return;
        }
        let mut chosen = vec![cmax[0]];
        let covered = cover[0].clone();
        let ctx = CoverCtx { b, cmax, cover: &cover, suffix: &suffix, full: &full };
        self.cover_dfs(&ctx, 1, &mut chosen, covered);
    }

    fn cover_dfs(&mut self, ctx: &CoverCtx<'_>, pos: usize, chosen: &mut Vec<u64>, covered: Bits) {
        if !self.tick() {
            return;
        }
        if or(&covered, &ctx.suffix[pos]) != *ctx.full {
            return;
        }
        if pos == ctx.cmax.len() {
            if chosen.len() >= 2 {
                self.emit(ctx.b, chosen);
            }
            return;
        }
        chosen.push(ctx.cmax[pos]);
        let with = or(&covered, &ctx.cover[pos]);
        self.cover_dfs(ctx, pos + 1, chosen, with);
        chosen.pop();
        self.cover_dfs(ctx, pos + 1, chosen, covered);
    }

    fn emit(&mut self, b: &[u64], c: &[u64]) {
        if b > c {
            return;
        }
        self.found.insert((b.to_vec(), c.to_vec()));
        if let Some(max) = self.limits.max_certificates {
            if self.found.len() >= max {
                self.stop = Some(SearchStatus::CertificateLimit);
            }
        }
    }
}

struct CoverCtx<'a> {
    b: &'a [u64],
    cmax: &'a [u64],
    cover: &'a [Bits],
    suffix: &'a [Bits],
    full: &'a Bits,
}

fn or(a: &[u64], b: &[u64]) -> Bits {
    a.iter().zip(b).map(|(x, y)| x | y).collect()
}
