//! Exact counting of perfect matchings in bipartite graphs through the
//! weight distributions of the graph's cut and cycle spaces.
//!
//! The pipeline in [`matching::count_perfect_matchings`]:
//!
//! 1. [`graph::to_odd_graph`] adds four auxiliary vertices so that every
//!    degree is odd without changing the number of perfect matchings;
//! 2. a [`cutdist`] engine computes how many vertex subsets induce a cut
//!    of each size;
//! 3. dividing by `2^d` (one per connected component) gives the cut-space
//!    weight distribution, and [`codes::macwilliams_dual_distribution`]
//!    turns it into the cycle-space distribution;
//! 4. in an odd graph the perfect matchings are exactly the complements of
//!    the cycle-space words of weight `m - n`.
//!
//! [`matching::ryser_permanent`] and [`matching::enumerate_perfect_matchings`]
//! are independent oracles for the same number.

pub mod caps;
pub mod codes;
pub mod cutdist;
pub mod error;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod weights;

pub use caps::Caps;
pub use cutdist::{
    cut_distribution, cutdist_bruteforce, cutdist_halfenum, cutdist_split, plan_split, shift, sigma,
    CutDistOutput, Engine, EngineOptions, OpCounts, ShiftMode, ShiftSequence, SplitPlan,
    SplitStrategy,
};
pub use error::{Error, ParseError, Result};
pub use graph::{BipartiteGraph, GraphFormat, Vertex};
pub use matching::{count_perfect_matchings, CountMethod, CountOptions, CountResult};
pub use weights::WeightDistribution;
