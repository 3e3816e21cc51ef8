use std::collections::BTreeSet;

use serde::Serialize;

use super::list_perfect_matchings;
use crate::caps::Caps;
use crate::codes::{cycle_space_basis, enumerate_codewords};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub holds: bool,
    pub target_weight: usize,
    pub codewords_at_target: usize,
    pub matchings: usize,
    /// Codewords at the target weight whose complement is not a perfect
    /// matching.
    pub bad_complements: usize,
}

/// Checks, on an odd graph, that complementing the cycle-space words of
/// weight `m - n` yields exactly the perfect matchings found by enumeration.
pub fn verify_lemma1(g: &BipartiteGraph, caps: &Caps) -> Result<BijectionReport> {
    if !g.is_odd() {
        return Err(Error::Contract("matching/cycle correspondence needs an odd graph".into()));
    }
    let m = g.edge_count();
    let target = m - g.vertex_count() / 2;
    let basis = cycle_space_basis(g);

    let mut from_codes = BTreeSet::new();
    let mut at_target = 0;
    let mut bad = 0;
    enumerate_codewords(&basis, caps, |word| {
        if word.weight() != target {
            return;
        }
        at_target += 1;
        let complement: Vec<usize> = (0..m).filter(|&j| !word.get(j)).collect();
        if is_perfect_matching(g, &complement) {
            from_codes.insert(complement);
        } else {
            bad += 1;
        }
    })?;

    let matchings: BTreeSet<Vec<usize>> = list_perfect_matchings(g, caps)?.into_iter().collect();
    Ok(BijectionReport {
        holds: bad == 0 && from_codes == matchings && at_target == matchings.len(),
        target_weight: target,
        codewords_at_target: at_target,
        matchings: matchings.len(),
        bad_complements: bad,
    })
}

fn is_perfect_matching(g: &BipartiteGraph, edges: &[usize]) -> bool {
    let mut left = vec![0u32; g.left_count()];
    let mut right = vec![0u32; g.right_count()];
    for &j in edges {
        let (u, v) = g.edges()[j];
        left[u] += 1;
        right[v] += 1;
    }
    left.iter().chain(&right).all(|&c| c == 1)
}
