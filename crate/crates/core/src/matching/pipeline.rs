//! Counting pipeline: make the graph odd, compute its partition cut-weight
//! distribution, normalize to the cut-space distribution, dualize to the
//! cycle space and read the count at weight `m - n`.
//!
//! In an odd graph the complement of a perfect matching leaves every vertex
//! with even degree, so matchings are exactly the complements of the
//! cycle-space words of weight `m - n`.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{enumerate_perfect_matchings, ryser_permanent};
use crate::codes::macwilliams_dual_distribution;
use crate::cutdist::{cut_distribution, Engine, EngineOptions, OpCounts};
use crate::error::{Error, Result};
use crate::graph::{connected_components, to_odd_graph, to_odd_graph_forced, BipartiteGraph, OddTransformResult};
use crate::weights::WeightDistribution;

#[derive(Debug, Clone, Default)]
pub struct CountOptions {
    pub engine: EngineOptions,
    /// Apply the odd-graph construction even to graphs that are already odd.
    pub force_transform: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountResult {
    #[serde(serialize_with = "decimal")]
    pub count: BigUint,
    pub algorithm: String,
    pub stats: OpCounts,
    pub transformed: bool,
    /// Cycle-space weight the count was read from; absent when the input
    /// was rejected as unbalanced before any computation.
    pub target_weight: Option<usize>,
}

fn decimal<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&x.to_str_radix(10))
}

/// Every intermediate of a pipeline run on a balanced graph.
#[derive(Debug, Clone)]
pub struct PipelineStages {
    pub transform: OddTransformResult,
    pub components: usize,
    /// Cut weights over all vertex subsets (`W'`).
    pub partition_distribution: WeightDistribution,
    /// Cut-space weight distribution, `W' / 2^d`.
    pub cut_distribution: WeightDistribution,
    pub cycle_distribution: WeightDistribution,
}

#[derive(Debug, Clone)]
pub struct PipelineTrace {
    pub result: CountResult,
    pub stages: Option<PipelineStages>,
}

pub fn count_perfect_matchings(
    g: &BipartiteGraph,
    engine: Engine,
    opts: &CountOptions,
) -> Result<CountResult> {
    count_perfect_matchings_traced(g, engine, opts).map(|t| t.result)
}

pub fn count_perfect_matchings_traced(
    g: &BipartiteGraph,
    engine: Engine,
    opts: &CountOptions,
) -> Result<PipelineTrace> {
    if !g.is_balanced() {
        return Ok(PipelineTrace {
            result: CountResult {
                count: BigUint::zero(),
                algorithm: engine.to_string(),
                stats: OpCounts::default(),
                transformed: false,
                target_weight: None,
            },
            stages: None,
        });
    }

    let transform = if opts.force_transform {
        to_odd_graph_forced(g)?
    } else {
        to_odd_graph(g)?
    };
    let odd = &transform.graph;
    let m = odd.edge_count();
    let nv = odd.vertex_count();
    let d = connected_components(odd);

    let run = cut_distribution(odd, engine, &opts.engine)?;
    let partition_distribution = run.distribution;
    if partition_distribution.total() != BigUint::one() << nv {
        return Err(Error::Integrity(format!(
            "partition distribution has mass {}, expected 2^{nv}",
            partition_distribution.total()
        )));
    }

    // Each cutset arises from exactly 2^d vertex subsets.
    let mask = (BigUint::one() << d) - 1u32;
    let mut cut_counts = Vec::with_capacity(m + 1);
    for (k, c) in partition_distribution.counts().iter().enumerate() {
        if !(c & &mask).is_zero() {
            return Err(Error::Integrity(format!(
                "{c} subsets at cut weight {k} is not a multiple of 2^{d}"
            )));
        }
        cut_counts.push(c >> d);
    }
    let cut_distribution = WeightDistribution::from_counts(cut_counts);

    let cycle_distribution = macwilliams_dual_distribution(&cut_distribution, m, nv - d)?;
    let target = m - nv / 2;
    let count = cycle_distribution[target].clone();

    Ok(PipelineTrace {
        result: CountResult {
            count,
            algorithm: run.engine.to_string(),
            stats: run.ops,
            transformed: !transform.was_already_odd,
            target_weight: Some(target),
        },
        stages: Some(PipelineStages {
            transform,
            components: d,
            partition_distribution,
            cut_distribution,
            cycle_distribution,
        }),
    })
}

/// A way of counting perfect matchings: the pipeline with some engine, or
/// one of the oracles.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CountMethod {
    Pipeline(Engine),
    Ryser,
    Enumerate,
}

impl CountMethod {
    pub const ALL: [CountMethod; 6] = [
        CountMethod::Pipeline(Engine::BruteForce),
        CountMethod::Pipeline(Engine::HalfEnum),
        CountMethod::Pipeline(Engine::Split),
        CountMethod::Pipeline(Engine::Auto),
        CountMethod::Ryser,
        CountMethod::Enumerate,
    ];
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountMethod::Pipeline(e) => e.fmt(f),
            CountMethod::Ryser => f.write_str("ryser"),
            CountMethod::Enumerate => f.write_str("enumerate"),
        }
    }
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ryser" => Ok(CountMethod::Ryser),
            "enumerate" => Ok(CountMethod::Enumerate),
            other => other.parse().map(CountMethod::Pipeline),
        }
    }
}

pub fn count_with(g: &BipartiteGraph, method: CountMethod, opts: &CountOptions) -> Result<CountResult> {
    let oracle = |count: BigUint| CountResult {
        count,
        algorithm: method.to_string(),
        stats: OpCounts::default(),
        transformed: false,
        target_weight: None,
    };
    match method {
        CountMethod::Pipeline(engine) => count_perfect_matchings(g, engine, opts),
        CountMethod::Ryser => {
            if !g.is_balanced() {
                return Ok(oracle(BigUint::zero()));
            }
            let perm = ryser_permanent(&g.biadjacency())?;
            let count = perm
                .to_biguint()
                .ok_or_else(|| Error::Integrity(format!("negative permanent {perm}")))?;
            Ok(oracle(count))
        }
        CountMethod::Enumerate => {
            enumerate_perfect_matchings(g, &opts.engine.caps).map(oracle)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(g: &BipartiteGraph, engine: Engine) -> u64 {
        let r = count_perfect_matchings(g, engine, &CountOptions::default()).unwrap();
        u64::try_from(r.count).unwrap()
    }

    #[test]
    fn named_values() {
        for engine in [Engine::BruteForce, Engine::HalfEnum, Engine::Split, Engine::Auto] {
            assert_eq!(count(&BipartiteGraph::complete(1, 1), engine), 1);
            assert_eq!(count(&BipartiteGraph::complete(2, 2), engine), 2);
            assert_eq!(count(&BipartiteGraph::complete(3, 3), engine), 6);
            assert_eq!(count(&BipartiteGraph::complete(2, 1), engine), 0);
            assert_eq!(count(&BipartiteGraph::new(0, 0, vec![]).unwrap(), engine), 1);
        }
    }

    #[test]
    fn isolated_vertex_gives_zero() {
        let g = BipartiteGraph::new(2, 2, vec![(0, 0), (0, 1)]).unwrap();
        assert_eq!(count(&g, Engine::HalfEnum), 0);
    }

    #[test]
    fn trace_records_each_stage() {
        let t = count_perfect_matchings_traced(
            &BipartiteGraph::complete(2, 2),
            Engine::HalfEnum,
            &CountOptions::default(),
        )
        .unwrap();
        let s = t.stages.unwrap();
        assert!(t.result.transformed);
        assert_eq!(s.components, 1);
        assert_eq!(t.result.target_weight, Some(6));
        assert!(s.cycle_distribution[0].is_one());
        // 10 edges, 8 vertices, connected: cycle space has rank 3
        assert_eq!(s.cycle_distribution.total(), BigUint::from(8u8));
        assert_eq!(s.partition_distribution.total(), BigUint::from(256u16));
    }

    #[test]
    fn forced_transform_keeps_count() {
        let opts = CountOptions {
            force_transform: true,
            ..CountOptions::default()
        };
        let r = count_perfect_matchings(&BipartiteGraph::complete(3, 3), Engine::HalfEnum, &opts).unwrap();
        assert!(r.transformed);
        assert_eq!(r.count, BigUint::from(6u8));
    }

    #[test]
    fn json_has_decimal_count() {
        let r = count_perfect_matchings(
            &BipartiteGraph::complete(3, 3),
            Engine::HalfEnum,
            &CountOptions::default(),
        )
        .unwrap();
        let v: serde_json::Value = serde_json::to_value(&r).unwrap();
        assert_eq!(v["count"], "6");
        assert_eq!(v["algorithm"], "halfenum");
        assert_eq!(v["target_weight"], 6);
    }

    #[test]
    fn methods_parse() {
        for m in CountMethod::ALL {
            assert_eq!(m.to_string().parse::<CountMethod>().unwrap(), m);
        }
    }
}
