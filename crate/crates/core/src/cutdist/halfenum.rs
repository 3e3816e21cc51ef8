use num_bigint::BigUint;
use rayon::prelude::*;

use super::buffer::{Buffer, Tally};
use super::{finish, masks_over, subset_count, CutDistOutput, Engine, OpCounts, ShiftMode};
use crate::error::Result;
use crate::graph::BipartiteGraph;

/// Sums `shift(unit(deg(S)), L(S))` over every `S ⊆ V₁`.
///
/// The unit distribution places all of `V₂` outside `S`, so its single
/// entry sits at the total degree of `S`; the shift then adds the right
/// vertices one by one in index order.
pub fn cutdist_halfenum(g: &BipartiteGraph, mode: ShiftMode) -> Result<CutDistOutput> {
    let total = subset_count(g.left_count(), "left side of half enumeration")?;
    let distribution = if g.vertex_count() < 64 {
        finish(run::<u64>(g, total, mode.checked())?)
    } else {
        finish(run::<BigUint>(g, total, mode.checked())?)
    };
    let nr = g.right_count() as u64;
    Ok(CutDistOutput {
        distribution,
        ops: OpCounts {
            sigma_applications: total * nr,
            vector_additions: total * (nr + 1),
            subsets_enumerated: total,
            ..OpCounts::default()
        },
        engine: Engine::HalfEnum,
    })
}

pub(super) fn run<T: Tally>(g: &BipartiteGraph, total: u64, checked: bool) -> Result<Vec<T>> {
    let m = g.edge_count();
    let positions: Vec<Option<usize>> = (0..g.left_count()).map(Some).collect();
    let right: Vec<usize> = (0..g.right_count()).collect();
    let masks = masks_over(g, &positions, &right);
    let rdeg: Vec<i64> = right.iter().map(|&v| g.right_degree(v) as i64).collect();
    let ldeg: Vec<usize> = (0..g.left_count()).map(|u| g.left_degree(u)).collect();

    let acc = chunks(total)
        .into_par_iter()
        .map(|(start, end)| -> Result<Buffer<T>> {
            let mut acc = Buffer::new(m);
            let mut w = Buffer::new(m);
            for s in start..end {
                w.set_unit(degree_sum(&ldeg, s));
                for (mask, &d) in masks.iter().zip(&rdeg) {
                    w.add_shifted_self(d - 2 * (mask & s).count_ones() as i64, checked)?;
                }
                w.accumulate_into(&mut acc);
            }
            Ok(acc)
        })
        .try_reduce(|| Buffer::new(m), |a, b| Ok(a.merge(b)))?;
    Ok(acc.into_values())
}

pub(super) fn degree_sum(deg: &[usize], mut set: u64) -> usize {
    let mut sum = 0;
    while set != 0 {
        sum += deg[set.trailing_zeros() as usize];
        set &= set - 1;
    }
    sum
}

/// Splits `0..total` into contiguous ranges for the parallel reduction.
pub(super) fn chunks(total: u64) -> Vec<(u64, u64)> {
    let pieces = total.clamp(1, 256);
    let step = total.div_ceil(pieces).max(1);
    (0..total.div_ceil(step))
        .map(|k| (k * step, ((k + 1) * step).min(total)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weights::WeightDistribution;

    fn run_checked(g: &BipartiteGraph) -> WeightDistribution {
        cutdist_halfenum(g, ShiftMode::Checked).unwrap().distribution
    }

    #[test]
    fn named_values() {
        assert_eq!(
            run_checked(&BipartiteGraph::complete(1, 1)),
            WeightDistribution::from_u64s(&[2, 2])
        );
        assert_eq!(
            run_checked(&BipartiteGraph::complete(2, 2)),
            WeightDistribution::from_u64s(&[2, 0, 12, 0, 2])
        );
        let empty = BipartiteGraph::new(1, 1, vec![]).unwrap();
        assert_eq!(run_checked(&empty), WeightDistribution::from_u64s(&[4]));
        let nothing = BipartiteGraph::new(0, 0, vec![]).unwrap();
        assert_eq!(run_checked(&nothing), WeightDistribution::from_u64s(&[1]));
    }

    #[test]
    fn bigint_path_agrees() {
        let g = BipartiteGraph::new(3, 4, vec![(0, 0), (0, 3), (1, 1), (2, 1), (2, 2), (1, 3)]).unwrap();
        let small = run::<u64>(&g, 8, true).unwrap();
        let big = run::<BigUint>(&g, 8, true).unwrap();
        assert_eq!(finish(small), finish(big));
    }

    #[test]
    fn chunking_covers_range() {
        for total in [1u64, 2, 7, 255, 256, 257, 1 << 12] {
            let c = chunks(total);
            assert_eq!(c.first().unwrap().0, 0);
            assert_eq!(c.last().unwrap().1, total);
            assert!(c.windows(2).all(|p| p[0].1 == p[1].0));
        }
    }
}
