//! Computational toolkit for smooth-number sets.
//!
//! * [`smooth`]: greatest-prime-factor tables, smoothness thresholds,
//!   friable windows and counting functions.
//! * [`psi`]: exact `Psi(x, y)` and de Bruijn's asymptotic comparison.
//! * [`sunit`]: S-unit arithmetic, bounded two-term S-unit equation solving
//!   and solution-count certification.
//! * [`decomp`]: additive and multiplicative decomposition search on finite
//!   windows, the growth-scale lemma and the two contradiction pipelines.

pub mod decomp;
pub mod error;
pub mod psi;
mod ser;
pub mod smooth;
pub mod sunit;

pub use decomp::{
    case_classifier, combine, growth_scales, search_decompositions, theorem1_pipeline, theorem2_pipeline,
    verify_certificate, Case, DecompositionCertificate, Mode, PipelineReport, SearchLimits, SearchOutcome,
    SearchStatus, WindowSet,
};
pub use error::{Error, Result};
pub use psi::{debruijn_ratio, debruijn_z, psi_base2, psi_exact, DeBruijnReport, PsiCounter};
pub use smooth::{
    counting, friable_window, greatest_prime_factor, is_smooth, prime_count, shifted_friable_window, FactorTable,
    SmoothnessThreshold, SortedIntSet,
};
pub use sunit::{
    bs_bound, certify_count, enumerate_solutions, enumerate_sunits, multiplicative_pairs, smooth_pair_difference,
    BsBound, CertificationReport, Domain, PrimeSet, SUnit, SUnitEquation, SolutionList,
};
