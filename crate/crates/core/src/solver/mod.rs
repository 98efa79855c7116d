//! Feasibility of abstract block-dimension profiles.
//!
//! A profile assigns a dimension to each block `B(n, d1, d2)`. [`feasible`]
//! decides whether some profile of total `N` with `|G| = r` satisfies the
//! constraints S0–S9 listed on [`Constraint`]; [`check_profile`] re-checks a
//! single profile independently of the search.

mod bounds;
mod profile;
mod search;

pub use bounds::{basic_block_dim, minimal_form_dim, no_skew_primitive_guard, theorem1_bound, Bounds};
pub use profile::{check_profile, Profile, ProfileViolation};
pub use search::{feasible, feasible_with, sweep, sweep_with, SearchStats, SweepRow, TraceEntry, Verdict};

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("arguments must be positive")]
    ZeroArgument,
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// Constraint identifiers, in checking order.
///
/// - S0: `B(0,1,1) = r`, no off-diagonal level-0 blocks, `lcm(d²,r) | B(0,d,d)`,
///   and every degree used at a level `≥ 1` has `B(0,d,d) > 0`.
/// - S1: divisibility at levels `≥ 1` (see [`basic_block_dim`]).
/// - S2: `B(n,d1,d2) = B(n,d2,d1)`.
/// - S3: `B(1,1,1) = 0`.
/// - S4: the necessary blocks `B(0,d,d)`, `B(1,d,1)`, `B(k,d,d)` (`k > 1`) for
///   one `d > 1`, and some `B(m,1,1)` with `m > 1`.
/// - S5: `B(m,1,1) = r` at the largest such `m`.
/// - S6: each `B(l,1,1) > 0` with `1 < l < m` is fed from some `l' > l`.
/// - S7: chains through every intermediate level.
/// - S8: off-diagonal blocks escalate on both sides.
/// - S9: the entries sum to `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Constraint {
    S0,
    S1,
    S2,
    S3,
    S4,
    S5,
    S6,
    S7,
    S8,
    S9,
}

impl std::fmt::Display for Constraint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self:?}")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SearchOrder {
    #[default]
    Ascending,
    Descending,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SolverOptions {
    /// Apply the `d·r | B(n,d,1)` divisibility only at `n = 1`; at higher
    /// levels use `lcm(d, r)`.
    pub strict_level1_divisibility: bool,
    pub use_s6: bool,
    /// Apply S6 only to the smallest `l` instead of every `l` in `(1, m)`.
    pub s6_min_only: bool,
    pub use_s7: bool,
    pub use_s8: bool,
    pub order: SearchOrder,
    /// Maximum number of trace entries kept for UNSAT verdicts.
    pub trace_cap: usize,
}

impl Default for SolverOptions {
    fn default() -> Self {
        SolverOptions {
            strict_level1_divisibility: false,
            use_s6: true,
            s6_min_only: false,
            use_s7: true,
            use_s8: true,
            order: SearchOrder::Ascending,
            trace_cap: 64,
        }
    }
}

pub(crate) fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

/// Divisibility quantum of a single block `B(n, a, b)`.
pub(crate) fn quantum(n: usize, a: u64, b: u64, r: u64, strict: bool) -> u64 {
    match (n, a, b) {
        (0, 1, 1) => r,
        (0, _, _) => lcm(a * a, r),
        (_, 1, 1) => r,
        (_, 1, d) | (_, d, 1) => {
            if strict && n >= 2 {
                lcm(d, r)
            } else {
                d * r
            }
        }
        _ => lcm(a * b, r),
    }
}
