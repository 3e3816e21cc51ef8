//! Perfect-matching counts: the cut-space pipeline and two independent
//! oracles (Ryser's formula and backtracking enumeration).

mod enumerate;
mod lemma;
mod pipeline;
mod ryser;

pub use enumerate::{enumerate_perfect_matchings, list_perfect_matchings};
pub use lemma::{verify_lemma1, BijectionReport};
pub use pipeline::{
    count_perfect_matchings, count_perfect_matchings_traced, count_with, CountMethod,
    CountOptions, CountResult, PipelineStages, PipelineTrace,
};
pub use ryser::ryser_permanent;
