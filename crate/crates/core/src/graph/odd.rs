//! Reduction of a balanced bipartite graph to an odd one (every degree odd)
//! with the same number of perfect matchings.
//!
//! Four auxiliary vertices are appended, two per side, in the order
//! `aux1` then `aux2`:
//!
//! * every even-degree left vertex is joined to the right `aux1`, and every
//!   even-degree right vertex to the left `aux1`;
//! * the right `aux1` is joined to the pendant left `aux2`, and the left
//!   `aux1` to the pendant right `aux2`;
//! * if the two `aux1` vertices still have even degree they are joined.
//!
//! The pendants force both `aux1`–`aux2` edges into every perfect matching,
//! so matchings of the result correspond one-to-one to those of the input.

use serde::Serialize;

use super::BipartiteGraph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OddTransformResult {
    #[serde(skip)]
    pub graph: BipartiteGraph,
    /// Left indices of the two auxiliary left vertices (`aux1`, `aux2`).
    pub added_left: Option<[usize; 2]>,
    /// Right indices of the two auxiliary right vertices (`aux1`, `aux2`).
    pub added_right: Option<[usize; 2]>,
    pub added_edge_count: usize,
    pub bridge_edge_present: bool,
    pub was_already_odd: bool,
}

/// Returns an odd graph with the same perfect matchings as `g`. Graphs that
/// are already odd come back unchanged.
pub fn to_odd_graph(g: &BipartiteGraph) -> Result<OddTransformResult> {
    if !g.is_balanced() {
        return Err(Error::Unbalanced {
            left: g.left_count(),
            right: g.right_count(),
        });
    }
    if g.is_odd() {
        return Ok(OddTransformResult {
            graph: g.clone(),
            added_left: None,
            added_right: None,
            added_edge_count: 0,
            bridge_edge_present: false,
            was_already_odd: true,
        });
    }
    to_odd_graph_forced(g)
}

/// Applies the auxiliary-vertex construction even when `g` is already odd.
pub fn to_odd_graph_forced(g: &BipartiteGraph) -> Result<OddTransformResult> {
    if !g.is_balanced() {
        return Err(Error::Unbalanced {
            left: g.left_count(),
            right: g.right_count(),
        });
    }
    let n = g.left_count();
    let even_left: Vec<usize> = (0..n).filter(|&u| g.left_degree(u) % 2 == 0).collect();
    let even_right: Vec<usize> = (0..n).filter(|&v| g.right_degree(v) % 2 == 0).collect();
    if even_left.len() % 2 != even_right.len() % 2 {
        return Err(Error::Integrity(format!(
            "even-degree counts {} and {} differ in parity",
            even_left.len(),
            even_right.len()
        )));
    }

    let (l_aux1, l_aux2) = (n, n + 1);
    let (r_aux1, r_aux2) = (n, n + 1);
    let mut edges = g.edges().to_vec();
    edges.extend(even_left.iter().map(|&u| (u, r_aux1)));
    edges.push((l_aux2, r_aux1));
    edges.extend(even_right.iter().map(|&v| (l_aux1, v)));
    edges.push((l_aux1, r_aux2));

    let left_aux_deg = edges.iter().filter(|e| e.0 == l_aux1).count();
    let right_aux_deg = edges.iter().filter(|e| e.1 == r_aux1).count();
    debug_assert_eq!(left_aux_deg % 2, right_aux_deg % 2);
    let bridge = left_aux_deg % 2 == 0 && right_aux_deg % 2 == 0;
    if bridge {
        edges.push((l_aux1, r_aux1));
    }

    let added_edge_count = edges.len() - g.edge_count();
    let graph = BipartiteGraph::from_checked_edges(n + 2, n + 2, edges);
    if !graph.is_odd() {
        return Err(Error::Integrity("transformed graph has an even-degree vertex".into()));
    }
    Ok(OddTransformResult {
        graph,
        added_left: Some([l_aux1, l_aux2]),
        added_right: Some([r_aux1, r_aux2]),
        added_edge_count,
        bridge_edge_present: bridge,
        was_already_odd: false,
    })
}
