use num_bigint::BigUint;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;

fn check_cap(g: &BipartiteGraph, caps: &Caps) -> Result<()> {
    if g.left_count() > caps.enumerate_left {
        return Err(Error::CapExceeded {
            what: "matching enumeration left side",
            size: g.left_count(),
            cap: caps.enumerate_left,
        });
    }
    Ok(())
}

/// Backtracks over left vertices in index order, assigning each an unused
/// right neighbour. `visit` receives the chosen edge indices.
fn backtrack(g: &BipartiteGraph, mut visit: impl FnMut(&[usize])) {
    if !g.is_balanced() {
        return;
    }
    fn go(
        g: &BipartiteGraph,
        u: usize,
        used: &mut [bool],
        chosen: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if u == g.left_count() {
            visit(chosen);
            return;
        }
        for &j in g.left_edges(u) {
            let v = g.edges()[j].1;
            if !used[v] {
                used[v] = true;
                chosen.push(j);
                go(g, u + 1, used, chosen, visit);
                chosen.pop();
                used[v] = false;
            }
        }
    }
    let mut used = vec![false; g.right_count()];
    go(g, 0, &mut used, &mut Vec::with_capacity(g.left_count()), &mut visit);
}

pub fn enumerate_perfect_matchings(g: &BipartiteGraph, caps: &Caps) -> Result<BigUint> {
    check_cap(g, caps)?;
    let mut count = 0u128;
    backtrack(g, |_| count += 1);
    Ok(BigUint::from(count))
}

/// Every perfect matching as a sorted list of edge indices.
pub fn list_perfect_matchings(g: &BipartiteGraph, caps: &Caps) -> Result<Vec<Vec<usize>>> {
    check_cap(g, caps)?;
    let mut all = Vec::new();
    backtrack(g, |m| {
        let mut m = m.to_vec();
        m.sort_unstable();
        all.push(m);
    });
    Ok(all)
}
