//! Partition cut-weight distributions.
//!
//! For a graph on vertex set `V` the partition distribution `W'` counts, for
//! every `k`, the subsets `S ⊆ V` whose cut `(S, V \ S)` has exactly `k`
//! edges. Three engines compute it:
//!
//! * [`cutdist_bruteforce`] walks all `2^|V|` subsets (the oracle);
//! * [`cutdist_halfenum`] walks the `2^|V₁|` left subsets and extends each
//!   one across the right side with [`shift`];
//! * [`cutdist_split`] splits the left side into `(T₁, U₁)`, groups the
//!   subsets of `T₁` by their effect on `N(U₁)` and recombines each group
//!   with every subset of `U₁`.
//!
//! All three return identical vectors of length `m + 1`.

mod brute;
mod buffer;
mod halfenum;
mod split;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::Serialize;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::weights::WeightDistribution;

use buffer::{Buffer, Tally};

pub use brute::cutdist_bruteforce;
pub use halfenum::cutdist_halfenum;
pub use split::{classify, cutdist_split, plan_split, ClassAccumulator, SplitPlan, SplitStrategy};

/// Per-right-vertex shift amounts, applied in order by [`shift`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
pub struct ShiftSequence(pub Vec<i64>);

impl ShiftSequence {
    pub fn values(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `self` followed by `other`.
    pub fn concat(&self, other: &ShiftSequence) -> ShiftSequence {
        ShiftSequence(self.0.iter().chain(&other.0).copied().collect())
    }
}

impl From<Vec<i64>> for ShiftSequence {
    fn from(v: Vec<i64>) -> Self {
        ShiftSequence(v)
    }
}

/// Whether shifts verify that no mass falls off either end of the vector.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ShiftMode {
    Checked,
    #[default]
    Unchecked,
}

impl ShiftMode {
    fn checked(self) -> bool {
        self == ShiftMode::Checked
    }
}

/// Machine-independent work counters reported by the engines.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct OpCounts {
    pub sigma_applications: u64,
    pub vector_additions: u64,
    pub subsets_enumerated: u64,
    /// Number of classes `x` (split engine only).
    pub classes: Option<u64>,
    /// `Π (deg(v) + 1)` over `N(U₁)`, saturating (split engine only).
    pub class_bound: Option<u128>,
    pub u1_size: Option<usize>,
    pub h: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    BruteForce,
    HalfEnum,
    Split,
    Auto,
}

impl Engine {
    pub fn name(self) -> &'static str {
        match self {
            Engine::BruteForce => "bruteforce",
            Engine::HalfEnum => "halfenum",
            Engine::Split => "split",
            Engine::Auto => "auto",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Engine {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "bruteforce" => Ok(Engine::BruteForce),
            "halfenum" => Ok(Engine::HalfEnum),
            "split" => Ok(Engine::Split),
            "auto" => Ok(Engine::Auto),
            other => Err(Error::Contract(format!("unknown engine `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct EngineOptions {
    pub strategy: SplitStrategy,
    pub mode: ShiftMode,
    pub caps: Caps,
}

#[derive(Debug, Clone)]
pub struct CutDistOutput {
    pub distribution: WeightDistribution,
    pub ops: OpCounts,
    /// Engine that actually ran (never `Auto`).
    pub engine: Engine,
}

/// Runs `engine` on `g`, resolving `Auto` to split or half-enumeration.
pub fn cut_distribution(
    g: &BipartiteGraph,
    engine: Engine,
    opts: &EngineOptions,
) -> Result<CutDistOutput> {
    match engine {
        Engine::BruteForce => cutdist_bruteforce(g, &opts.caps),
        Engine::HalfEnum => cutdist_halfenum(g, opts.mode),
        Engine::Split => {
            let plan = plan_split(g, &opts.strategy)?;
            cutdist_split(g, &plan, opts.mode)
        }
        Engine::Auto => {
            let plan = plan_split(g, &opts.strategy)?;
            if plan.u1().len() >= 2 && plan.h() < g.right_count() {
                cutdist_split(g, &plan, opts.mode)
            } else {
                cutdist_halfenum(g, opts.mode)
            }
        }
    }
}

/// `sigma_x(w)`: every entry moves `x` places, the length stays fixed.
///
/// In checked mode, moving a nonzero entry past either end is an error;
/// unchecked, such entries are dropped.
pub fn sigma(w: &WeightDistribution, x: i64, mode: ShiftMode) -> Result<WeightDistribution> {
    check_nonempty(w)?;
    if x.unsigned_abs() as usize > w.max_weight() {
        return Err(Error::Contract(format!(
            "shift by {x} exceeds the maximum weight {}",
            w.max_weight()
        )));
    }
    let src = Buffer::from_values(w.counts().to_vec());
    let mut out = Buffer::<BigUint>::new(w.max_weight());
    out.load_shifted(&src, x, mode.checked())?;
    Ok(WeightDistribution::from_counts(out.into_values()))
}

/// Folds `W <- W + sigma_l(W)` over `seq` in order.
pub fn shift(w: &WeightDistribution, seq: &ShiftSequence, mode: ShiftMode) -> Result<WeightDistribution> {
    check_nonempty(w)?;
    let mut buf = Buffer::from_values(w.counts().to_vec());
    for &l in seq.values() {
        buf.add_shifted_self(l, mode.checked())?;
    }
    Ok(WeightDistribution::from_counts(buf.into_values()))
}

fn check_nonempty(w: &WeightDistribution) -> Result<()> {
    if w.is_empty() {
        Err(Error::Contract("distribution has no slots".into()))
    } else {
        Ok(())
    }
}

/// Shift amounts for the right vertices in `order` when `s ⊆ V₁` is on the
/// marked side: `|c(v, V₁ \ S)| - |c(v, S)|` for each `v`.
pub fn l_vector(g: &BipartiteGraph, s: &[usize], order: &[usize]) -> Result<ShiftSequence> {
    let mut in_s = vec![false; g.left_count()];
    for &u in s {
        *in_s
            .get_mut(u)
            .ok_or_else(|| Error::Contract(format!("left vertex {u} does not exist")))? = true;
    }
    order
        .iter()
        .map(|&v| {
            if v >= g.right_count() {
                return Err(Error::Contract(format!("right vertex {v} does not exist")));
            }
            let (inside, outside) = g
                .right_neighbors(v)
                .fold((0i64, 0i64), |(a, b), u| if in_s[u] { (a + 1, b) } else { (a, b + 1) });
            Ok(outside - inside)
        })
        .collect::<Result<Vec<_>>>()
        .map(ShiftSequence)
}

/// Converts an engine's raw tally into a public distribution.
fn finish<T: Tally>(values: Vec<T>) -> WeightDistribution {
    WeightDistribution::from_counts(values.into_iter().map(Tally::into_biguint).collect())
}

/// Number of subsets of an `n`-set as a `u64`, failing when it cannot be
/// represented (such a run could never finish anyway).
fn subset_count(n: usize, what: &'static str) -> Result<u64> {
    if n >= 63 {
        return Err(Error::CapExceeded {
            what,
            size: n,
            cap: 62,
        });
    }
    Ok(1u64 << n)
}

/// Per-vertex neighbour masks as `u64` bit sets over a position map.
fn masks_over(g: &BipartiteGraph, positions: &[Option<usize>], right: &[usize]) -> Vec<u64> {
    right
        .iter()
        .map(|&v| {
            g.right_neighbors(v)
                .filter_map(|u| positions[u])
                .fold(0u64, |m, p| m | (1 << p))
        })
        .collect()
}
