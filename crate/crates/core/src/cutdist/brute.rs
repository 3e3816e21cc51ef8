use super::{finish, subset_count, CutDistOutput, Engine, OpCounts};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

/// Tallies the cut weight of every subset of `V`, visiting subsets in
/// Gray-code order so each step updates the weight in `O(1)` word ops.
pub fn cutdist_bruteforce(g: &BipartiteGraph, caps: &Caps) -> Result<CutDistOutput> {
    let nv = g.vertex_count();
    if nv > caps.brute_vertices {
        return Err(Error::CapExceeded {
            what: "brute-force vertex count",
            size: nv,
            cap: caps.brute_vertices,
        });
    }
    let total = subset_count(nv, "brute-force vertex count")?;

    let nl = g.left_count();
    let mut nbr = vec![0u64; nv];
    for &(u, v) in g.edges() {
        nbr[u] |= 1 << (nl + v);
        nbr[nl + v] |= 1 << u;
    }
    let deg: Vec<i64> = nbr.iter().map(|m| m.count_ones() as i64).collect();

    let mut tally = vec![0u64; g.edge_count() + 1];
    let mut set = 0u64;
    let mut cut = 0i64;
    tally[0] += 1;
    for step in 1..total {
        let x = step.trailing_zeros() as usize;
        let inside = (nbr[x] & set).count_ones() as i64;
        let bit = 1u64 << x;
        if set & bit == 0 {
            cut += deg[x] - 2 * inside;
        } else {
            cut += 2 * inside - deg[x];
        }
        set ^= bit;
        tally[cut as usize] += 1;
    }

    Ok(CutDistOutput {
        distribution: finish(tally),
        ops: OpCounts {
            subsets_enumerated: total,
            ..OpCounts::default()
        },
        engine: Engine::BruteForce,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightDistribution;

    fn run(g: &BipartiteGraph) -> WeightDistribution {
        cutdist_bruteforce(g, &Caps::default()).unwrap().distribution
    }

    #[test]
    fn named_values() {
        assert_eq!(run(&BipartiteGraph::complete(1, 1)), WeightDistribution::from_u64s(&[2, 2]));
        assert_eq!(
            run(&BipartiteGraph::complete(2, 2)),
            WeightDistribution::from_u64s(&[2, 0, 12, 0, 2])
        );
        let empty = BipartiteGraph::new(1, 1, vec![]).unwrap();
        assert_eq!(run(&empty), WeightDistribution::from_u64s(&[4]));
    }

    #[test]
    fn cap_is_enforced() {
        let caps = Caps {
            brute_vertices: 3,
            ..Caps::default()
        };
        assert!(matches!(
            cutdist_bruteforce(&BipartiteGraph::complete(2, 2), &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
