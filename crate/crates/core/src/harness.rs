//! Seeded instance generation, the benchmark record format and the
//! cross-engine verification suite used by the command-line tool.
//!
//! # Random graphs
//!
//! [`gen_random_bipartite`] is reproducible across implementations:
//!
//! 1. `k = round(Δ · n)` edges, rounding half away from zero;
//! 2. the generator is ChaCha8 seeded through `SeedableRng::seed_from_u64`
//!    (the PCG32-based seed expansion of `rand_core`);
//! 3. cells `c = u · n + v` of the `n × n` grid start in order `0..n²`; for
//!    `i` in `0..k`, draw `r = next_u64()`, swap cell `i` with cell
//!    `i + r mod (n² - i)`;
//! 4. the first `k` cells, sorted ascending, become edges `(c / n, c % n)`.

use std::io::Write;
use std::time::Instant;

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde::Serialize;

use crate::caps::Caps;
use crate::codes::cycle_space_basis;
use crate::cutdist::{cut_distribution, Engine, EngineOptions, SplitStrategy};
use crate::error::{Error, Result};
use crate::graph::{to_odd_graph, BipartiteGraph};
use crate::matching::{count_with, verify_lemma1, CountMethod, CountOptions};

pub fn gen_random_bipartite(n: usize, target_degree: f64, seed: u64) -> Result<BipartiteGraph> {
    if !target_degree.is_finite() || target_degree < 0.0 {
        return Err(Error::Contract(format!("target degree {target_degree} is not a valid degree")));
    }
    let cells = n * n;
    let k = (target_degree * n as f64).round() as usize;
    if k > cells {
        return Err(Error::Contract(format!(
            "{k} edges requested but only {cells} fit in a {n}x{n} bipartite graph"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut grid: Vec<usize> = (0..cells).collect();
    for i in 0..k {
        let j = i + (rng.next_u64() % (cells - i) as u64) as usize;
        grid.swap(i, j);
    }
    let mut chosen = grid[..k].to_vec();
    chosen.sort_unstable();
    BipartiteGraph::new(n, n, chosen.into_iter().map(|c| (c / n, c % n)).collect())
}

/// One engine run on one benchmark instance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BenchRecord {
    pub instance: String,
    pub n: usize,
    pub m: usize,
    pub delta: f64,
    pub engine: String,
    pub u1_size: Option<usize>,
    pub h: Option<usize>,
    pub classes: Option<u64>,
    pub class_bound: Option<String>,
    pub sigma_applications: u64,
    pub vector_additions: u64,
    pub wall_ms: f64,
    /// Count modulo 2^64.
    pub digest_low64: u64,
    /// Number of decimal digits of the count.
    pub digest_digits: usize,
}

#[derive(Debug, Clone)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub degree: f64,
    pub seed: u64,
    /// Instances per size.
    pub instances: usize,
    pub methods: Vec<CountMethod>,
    pub options: CountOptions,
}

impl Default for BenchConfig {
    fn default() -> Self {
        Self {
            sizes: vec![8, 10, 12],
            degree: 3.0,
            seed: 1,
            instances: 3,
            methods: vec![
                CountMethod::Pipeline(Engine::HalfEnum),
                CountMethod::Pipeline(Engine::Split),
                CountMethod::Ryser,
            ],
            options: CountOptions::default(),
        }
    }
}

/// Runs every method on every instance. Instance `i` of size `n` uses seed
/// `seed + i` (wrapping), so the family is reproducible from the config.
/// Fails if two methods disagree on an instance.
pub fn run_bench(cfg: &BenchConfig) -> Result<Vec<BenchRecord>> {
    let mut records = Vec::new();
    for &n in &cfg.sizes {
        for i in 0..cfg.instances {
            let seed = cfg.seed.wrapping_add(i as u64);
            let g = gen_random_bipartite(n, cfg.degree, seed)?;
            let instance = format!("n{n}-d{}-s{seed}", cfg.degree);
            let mut first: Option<(u64, usize)> = None;
            for &method in &cfg.methods {
                let start = Instant::now();
                let result = count_with(&g, method, &cfg.options)?;
                let wall_ms = start.elapsed().as_secs_f64() * 1e3;
                let digest = digest(&result.count);
                match first {
                    None => first = Some(digest),
                    Some(d) if d != digest => {
                        return Err(Error::Integrity(format!(
                            "{instance}: {method} disagrees with {}",
                            cfg.methods[0]
                        )))
                    }
                    Some(_) => {}
                }
                let s = result.stats;
                records.push(BenchRecord {
                    instance: instance.clone(),
                    n,
                    m: g.edge_count(),
                    delta: g.average_degree(),
                    engine: result.algorithm,
                    u1_size: s.u1_size,
                    h: s.h,
                    classes: s.classes,
                    class_bound: s.class_bound.map(|b| b.to_string()),
                    sigma_applications: s.sigma_applications,
                    vector_additions: s.vector_additions,
                    wall_ms,
                    digest_low64: digest.0,
                    digest_digits: digest.1,
                });
            }
        }
    }
    Ok(records)
}

fn digest(count: &BigUint) -> (u64, usize) {
    let low = (count & BigUint::from(u64::MAX)).to_u64().unwrap_or_default();
    (low, count.to_str_radix(10).len())
}

pub fn write_csv<W: Write>(records: &[BenchRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    for r in records {
        w.serialize(r).map_err(|e| Error::Contract(format!("csv output failed: {e}")))?;
    }
    w.flush().map_err(|e| Error::Contract(format!("csv output failed: {e}")))
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub seed: u64,
    pub max_n: usize,
    pub trials: usize,
    pub caps: Caps,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct VerifyReport {
    pub trials: usize,
    pub checks: usize,
    pub failures: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Cross-checks every engine and oracle on seeded random graphs.
///
/// Trial `t` draws `n` uniformly from `1..=max_n` and an edge count
/// uniformly from `0..=n²` using ChaCha8 seeded with `seed`, then builds
/// the graph with [`gen_random_bipartite`] and seed `seed + t`.
pub fn run_verification(cfg: &VerifyConfig) -> VerifyReport {
    let mut report = VerifyReport::default();
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    for t in 0..cfg.trials {
        let n = 1 + (rng.next_u64() % cfg.max_n.max(1) as u64) as usize;
        let edges = rng.next_u64() % (n * n + 1) as u64;
        let seed = cfg.seed.wrapping_add(t as u64);
        let label = format!("trial {t} (n={n}, m={edges}, seed={seed})");
        report.trials += 1;
        match gen_random_bipartite(n, edges as f64 / n as f64, seed)
            .and_then(|g| verify_instance(&g, &cfg.caps))
        {
            Ok((checks, problems)) => {
                report.checks += checks;
                report.failures.extend(problems.into_iter().map(|p| format!("{label}: {p}")));
            }
            Err(e) => report.failures.push(format!("{label}: {e}")),
        }
    }
    report
}

/// Returns the number of checks performed and a description of each
/// failed one.
pub fn verify_instance(g: &BipartiteGraph, caps: &Caps) -> Result<(usize, Vec<String>)> {
    let mut checks = 0;
    let mut problems = Vec::new();
    let odd = to_odd_graph(g)?.graph;

    // counts
    let mut reference: Option<(CountMethod, BigUint)> = None;
    for method in CountMethod::ALL {
        let skip = match method {
            CountMethod::Pipeline(Engine::BruteForce) => odd.vertex_count() > caps.brute_vertices,
            CountMethod::Enumerate => g.left_count() > caps.enumerate_left,
            _ => false,
        };
        if skip {
            continue;
        }
        let opts = CountOptions {
            engine: EngineOptions {
                caps: *caps,
                ..EngineOptions::default()
            },
            ..CountOptions::default()
        };
        let count = count_with(g, method, &opts)?.count;
        checks += 1;
        match &reference {
            None => reference = Some((method, count)),
            Some((first, c)) if *c != count => {
                problems.push(format!("{method} counted {count}, {first} counted {c}"))
            }
            Some(_) => {}
        }
    }

    // cut-weight distributions of the raw graph
    let mass = BigUint::from(1u8) << g.vertex_count();
    let mut runs = Vec::new();
    for (engine, strategy) in [
        (Engine::HalfEnum, SplitStrategy::Paper),
        (Engine::Split, SplitStrategy::Paper),
        (Engine::Split, SplitStrategy::Greedy),
        (Engine::BruteForce, SplitStrategy::Paper),
    ] {
        if engine == Engine::BruteForce && g.vertex_count() > caps.brute_vertices {
            continue;
        }
        let opts = EngineOptions {
            strategy,
            caps: *caps,
            ..EngineOptions::default()
        };
        runs.push(cut_distribution(g, engine, &opts)?);
    }
    for run in &runs {
        checks += 2;
        if run.distribution != runs[0].distribution {
            problems.push(format!(
                "{} cut distribution {} differs from {}",
                run.engine, run.distribution, runs[0].distribution
            ));
        }
        if run.distribution.total() != mass {
            problems.push(format!("{} cut distribution has the wrong mass", run.engine));
        }
    }

    // matching/cycle correspondence on the odd graph
    if cycle_space_basis(&odd).row_count() <= caps.code_rows && odd.left_count() <= caps.enumerate_left {
        checks += 1;
        let report = verify_lemma1(&odd, caps)?;
        if !report.holds {
            problems.push(format!("matching/cycle correspondence failed: {report:?}"));
        }
    }
    Ok((checks, problems))
}
