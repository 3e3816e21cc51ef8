//! The class-based engine.
//!
//! Fix `U₁ ⊆ V₁`, let `T₁ = V₁ \ U₁` and order `V₂` so that the `h`
//! neighbours of `U₁` come last. For `X ⊆ T₁` and `Y ⊆ U₁` the shift
//! sequence of `X ∪ Y` splits as `L_T(X) ∘ L_U(X, Y)`, where `L_T` ignores
//! `Y` entirely and `L_U` is additive:
//!
//! ```text
//! L_U(X, Y) = L_U(X, ∅) + L_U(∅, Y) - L_U(∅, ∅)
//! ```
//!
//! So subsets of `T₁` sharing the key `L_U(X, ∅)` can be summed into one
//! class distribution `W_i` first, and each class then combined with every
//! `Y` at the cost of a single shift.

use std::collections::HashMap;

use num_bigint::BigUint;
use rayon::prelude::*;

use super::buffer::{Buffer, Tally};
use super::halfenum::{chunks, degree_sum};
use super::{finish, masks_over, subset_count, CutDistOutput, Engine, OpCounts, ShiftMode, ShiftSequence};
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::weights::WeightDistribution;

/// How [`plan_split`] chooses `U₁`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub enum SplitStrategy {
    /// The `k` lowest-degree left vertices, with
    /// `k = max(1, ⌊n / (5 Δ max(1, log₂ Δ))⌋)` and `Δ = m / n`.
    #[default]
    Paper,
    /// Grow `U₁` to the same size `k`, each time adding the vertex that
    /// enlarges `N(U₁)` the least.
    Greedy,
    /// Use exactly these left vertices.
    Explicit(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPlan {
    u1: Vec<usize>,
    t1: Vec<usize>,
    right_order: Vec<usize>,
    h: usize,
    shape: (usize, usize),
}

impl SplitPlan {
    pub fn u1(&self) -> &[usize] {
        &self.u1
    }

    pub fn t1(&self) -> &[usize] {
        &self.t1
    }

    /// Right vertices, with `N(U₁)` occupying the last `h` positions.
    pub fn right_order(&self) -> &[usize] {
        &self.right_order
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// The vertices `N(U₁)`, in processing order.
    pub fn neighborhood(&self) -> &[usize] {
        &self.right_order[self.right_order.len() - self.h..]
    }

    fn check_graph(&self, g: &BipartiteGraph) -> Result<()> {
        if self.shape != (g.left_count(), g.right_count()) {
            return Err(Error::Contract("split plan was built for a different graph".into()));
        }
        Ok(())
    }
}

/// A group of subsets `X ⊆ T₁` sharing `L_U(X, ∅)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassAccumulator {
    pub key: ShiftSequence,
    /// `Σ shift(unit(deg X), L_T(X))` over the members.
    pub weight_sum: WeightDistribution,
    pub member_count: u64,
}

/// `|U₁|` prescribed by the degree formula.
pub fn paper_u1_size(g: &BipartiteGraph) -> usize {
    let n = g.left_count();
    if n == 0 {
        return 0;
    }
    let delta = g.average_degree();
    let denom = 5.0 * delta * delta.log2().max(1.0);
    let k = if denom > 0.0 { (n as f64 / denom).floor() } else { n as f64 };
    (k as usize).clamp(1, n)
}

pub fn plan_split(g: &BipartiteGraph, strategy: &SplitStrategy) -> Result<SplitPlan> {
    let n = g.left_count();
    let mut u1 = match strategy {
        SplitStrategy::Paper => {
            let mut by_degree: Vec<usize> = (0..n).collect();
            by_degree.sort_by_key(|&u| (g.left_degree(u), u));
            by_degree.truncate(paper_u1_size(g));
            by_degree
        }
        SplitStrategy::Greedy => greedy(g, paper_u1_size(g)),
        SplitStrategy::Explicit(chosen) => {
            let mut seen = vec![false; n];
            for &u in chosen {
                match seen.get_mut(u) {
                    Some(s) if !*s => *s = true,
                    Some(_) => return Err(Error::Contract(format!("U1 lists vertex {u} twice"))),
                    None => {
                        return Err(Error::Contract(format!(
                            "U1 vertex {u} is not a left vertex (n = {n})"
                        )))
                    }
                }
            }
            chosen.clone()
        }
    };
    u1.sort_unstable();

    let mut in_u1 = vec![false; n];
    for &u in &u1 {
        in_u1[u] = true;
    }
    let t1 = (0..n).filter(|&u| !in_u1[u]).collect();
    let mut touched = vec![false; g.right_count()];
    for &u in &u1 {
        for v in g.left_neighbors(u) {
            touched[v] = true;
        }
    }
    let (near, far): (Vec<usize>, Vec<usize>) = (0..g.right_count()).partition(|&v| touched[v]);
    let h = near.len();
    let right_order = far.into_iter().chain(near).collect();
    Ok(SplitPlan {
        u1,
        t1,
        right_order,
        h,
        shape: (n, g.right_count()),
    })
}

fn greedy(g: &BipartiteGraph, k: usize) -> Vec<usize> {
    let mut covered = vec![false; g.right_count()];
    let mut chosen = vec![false; g.left_count()];
    let mut u1 = Vec::with_capacity(k);
    for _ in 0..k {
        let best = (0..g.left_count())
            .filter(|&u| !chosen[u])
            .min_by_key(|&u| {
                let fresh = g.left_neighbors(u).filter(|&v| !covered[v]).count();
                (fresh, g.left_degree(u), u)
            });
        let Some(u) = best else { break };
        chosen[u] = true;
        for v in g.left_neighbors(u) {
            covered[v] = true;
        }
        u1.push(u);
    }
    u1
}

type RawClass<T> = (Vec<i64>, Buffer<T>, u64);

/// Steps 1 and 2: group the subsets of `T₁` by key and sum their partial
/// distributions. Classes are returned in ascending key order.
pub fn classify(g: &BipartiteGraph, plan: &SplitPlan, mode: ShiftMode) -> Result<Vec<ClassAccumulator>> {
    plan.check_graph(g)?;
    let total = subset_count(plan.t1.len(), "T1 of the split engine")?;
    Ok(if g.vertex_count() < 64 {
        into_public(classify_raw::<u64>(g, plan, total, mode.checked())?)
    } else {
        into_public(classify_raw::<BigUint>(g, plan, total, mode.checked())?)
    })
}

fn into_public<T: Tally>(raw: Vec<RawClass<T>>) -> Vec<ClassAccumulator> {
    raw.into_iter()
        .map(|(key, w, count)| ClassAccumulator {
            key: ShiftSequence(key),
            weight_sum: finish(w.into_values()),
            member_count: count,
        })
        .collect()
}

fn classify_raw<T: Tally>(
    g: &BipartiteGraph,
    plan: &SplitPlan,
    total: u64,
    checked: bool,
) -> Result<Vec<RawClass<T>>> {
    let m = g.edge_count();
    let mut positions = vec![None; g.left_count()];
    for (p, &u) in plan.t1.iter().enumerate() {
        positions[u] = Some(p);
    }
    let masks = masks_over(g, &positions, &plan.right_order);
    let rdeg: Vec<i64> = plan.right_order.iter().map(|&v| g.right_degree(v) as i64).collect();
    let tdeg: Vec<usize> = plan.t1.iter().map(|&u| g.left_degree(u)).collect();
    let split_at = plan.right_order.len() - plan.h;

    let merged = chunks(total)
        .into_par_iter()
        .map(|(start, end)| -> Result<HashMap<Vec<i64>, (Buffer<T>, u64)>> {
            let mut classes: HashMap<Vec<i64>, (Buffer<T>, u64)> = HashMap::new();
            let mut w = Buffer::new(m);
            let mut key = Vec::with_capacity(plan.h);
            for x in start..end {
                w.set_unit(degree_sum(&tdeg, x));
                for (mask, &d) in masks[..split_at].iter().zip(&rdeg) {
                    w.add_shifted_self(d - 2 * (mask & x).count_ones() as i64, checked)?;
                }
                key.clear();
                key.extend(
                    masks[split_at..]
                        .iter()
                        .zip(&rdeg[split_at..])
                        .map(|(mask, &d)| d - 2 * (mask & x).count_ones() as i64),
                );
                let slot = match classes.get_mut(&key) {
                    Some(slot) => slot,
                    None => classes.entry(key.clone()).or_insert((Buffer::new(m), 0)),
                };
                w.accumulate_into(&mut slot.0);
                slot.1 += 1;
            }
            Ok(classes)
        })
        .try_reduce(HashMap::new, |mut a, b| {
            for (key, (w, count)) in b {
                match a.get_mut(&key) {
                    Some(slot) => {
                        w.accumulate_into(&mut slot.0);
                        slot.1 += count;
                    }
                    None => {
                        a.insert(key, (w, count));
                    }
                }
            }
            Ok(a)
        })?;

    let mut out: Vec<RawClass<T>> = merged.into_iter().map(|(k, (w, c))| (k, w, c)).collect();
    out.sort_by(|a, b| a.0.cmp(&b.0));
    Ok(out)
}

/// Step 3: for every class and every `Y ⊆ U₁`, shift the class sum by the
/// degree of `Y` and then by `L_U(i, Y)`, summing the results.
pub fn cutdist_split(g: &BipartiteGraph, plan: &SplitPlan, mode: ShiftMode) -> Result<CutDistOutput> {
    plan.check_graph(g)?;
    let t_total = subset_count(plan.t1.len(), "T1 of the split engine")?;
    let y_total = subset_count(plan.u1.len(), "U1 of the split engine")?;
    let checked = mode.checked();
    let (distribution, classes) = if g.vertex_count() < 64 {
        let classes = classify_raw::<u64>(g, plan, t_total, checked)?;
        (finish(combine(g, plan, &classes, y_total, checked)?.into_values()), classes.len())
    } else {
        let classes = classify_raw::<BigUint>(g, plan, t_total, checked)?;
        (finish(combine(g, plan, &classes, y_total, checked)?.into_values()), classes.len())
    };

    let x = classes as u64;
    let h = plan.h as u64;
    let head = (plan.right_order.len() - plan.h) as u64;
    let class_bound = plan
        .neighborhood()
        .iter()
        .fold(1u128, |acc, &v| acc.saturating_mul(g.right_degree(v) as u128 + 1));
    Ok(CutDistOutput {
        distribution,
        ops: OpCounts {
            sigma_applications: t_total * head + x * y_total * (1 + h),
            vector_additions: t_total * (head + 1) + x * y_total * (h + 1),
            subsets_enumerated: t_total + x * y_total,
            classes: Some(x),
            class_bound: Some(class_bound),
            u1_size: Some(plan.u1.len()),
            h: Some(plan.h),
        },
        engine: Engine::Split,
    })
}

fn combine<T: Tally>(
    g: &BipartiteGraph,
    plan: &SplitPlan,
    classes: &[RawClass<T>],
    y_total: u64,
    checked: bool,
) -> Result<Buffer<T>> {
    let m = g.edge_count();
    let mut positions = vec![None; g.left_count()];
    for (p, &u) in plan.u1.iter().enumerate() {
        positions[u] = Some(p);
    }
    let near = plan.neighborhood();
    let masks = masks_over(g, &positions, near);
    let base: Vec<i64> = near.iter().map(|&v| g.right_degree(v) as i64).collect();
    let udeg: Vec<usize> = plan.u1.iter().map(|&u| g.left_degree(u)).collect();

    // L_U(∅, Y) and c_Y for every Y ⊆ U₁; L_U(∅, ∅) is `base`.
    let per_y: Vec<(Vec<i64>, i64)> = (0..y_total)
        .map(|y| {
            let lu = masks
                .iter()
                .zip(&base)
                .map(|(mask, &d)| d - 2 * (mask & y).count_ones() as i64)
                .collect();
            (lu, degree_sum(&udeg, y) as i64)
        })
        .collect();

    classes
        .par_iter()
        .map(|(key, w_i, _)| -> Result<Buffer<T>> {
            let mut acc = Buffer::new(m);
            let mut tmp = Buffer::new(m);
            for (lu_y, c_y) in &per_y {
                tmp.load_shifted(w_i, *c_y, checked)?;
                for ((k, ly), b) in key.iter().zip(lu_y).zip(&base) {
                    tmp.add_shifted_self(k + ly - b, checked)?;
                }
                tmp.accumulate_into(&mut acc);
            }
            Ok(acc)
        })
        .try_reduce(|| Buffer::new(m), |a, b| Ok(a.merge(b)))
}
