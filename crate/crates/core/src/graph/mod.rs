//! Bipartite graphs with a stable edge indexing.
//!
//! Edge `j` of a [`BipartiteGraph`] is the `j`-th `(left, right)` pair it was
//! built from. Every weight vector and GF(2) row elsewhere in the crate is
//! indexed by that position, so the edge order is part of a graph's identity.

mod io;
mod odd;

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use io::{parse_graph, to_edge_list, to_json, GraphFormat};
pub use odd::{to_odd_graph, to_odd_graph_forced, OddTransformResult};

/// A vertex named by its side and its index on that side.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Vertex {
    Left(usize),
    Right(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteGraph {
    left_count: usize,
    right_count: usize,
    edges: Vec<(usize, usize)>,
    left_adj: Vec<Vec<usize>>,
    right_adj: Vec<Vec<usize>>,
}

impl BipartiteGraph {
    /// Builds a graph, rejecting out-of-range endpoints and repeated edges.
    pub fn new(left_count: usize, right_count: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(edges.len());
        for (j, &(u, v)) in edges.iter().enumerate() {
            if u >= left_count || v >= right_count {
                return Err(Error::Contract(format!(
                    "edge {j} = ({u}, {v}) is outside a {left_count}x{right_count} graph"
                )));
            }
            if !seen.insert((u, v)) {
                return Err(Error::Contract(format!("edge {j} = ({u}, {v}) is repeated")));
            }
        }
        Ok(Self::from_checked_edges(left_count, right_count, edges))
    }

    pub(crate) fn from_checked_edges(
        left_count: usize,
        right_count: usize,
        edges: Vec<(usize, usize)>,
    ) -> Self {
        let mut left_adj = vec![Vec::new(); left_count];
        let mut right_adj = vec![Vec::new(); right_count];
        for (j, &(u, v)) in edges.iter().enumerate() {
            left_adj[u].push(j);
            right_adj[v].push(j);
        }
        Self {
            left_count,
            right_count,
            edges,
            left_adj,
            right_adj,
        }
    }

    /// The complete bipartite graph `K_{a,b}`, edges in row-major order.
    pub fn complete(a: usize, b: usize) -> Self {
        let edges = (0..a).flat_map(|u| (0..b).map(move |v| (u, v))).collect();
        Self::from_checked_edges(a, b, edges)
    }

    /// Graph whose edges are the nonzero cells of a 0/1 biadjacency matrix.
    pub fn from_biadjacency(rows: &[Vec<u8>]) -> Result<Self> {
        let right = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != right) {
            return Err(Error::Contract("biadjacency rows differ in length".into()));
        }
        let edges = rows
            .iter()
            .enumerate()
            .flat_map(|(u, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(move |(v, _)| (u, v))
            })
            .collect();
        Ok(Self::from_checked_edges(rows.len(), right, edges))
    }

    pub fn left_count(&self) -> usize {
        self.left_count
    }

    pub fn right_count(&self) -> usize {
        self.right_count
    }

    pub fn vertex_count(&self) -> usize {
        self.left_count + self.right_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_balanced(&self) -> bool {
        self.left_count == self.right_count
    }

    /// Edge indices incident to left vertex `u`.
    pub fn left_edges(&self, u: usize) -> &[usize] {
        &self.left_adj[u]
    }

    /// Edge indices incident to right vertex `v`.
    pub fn right_edges(&self, v: usize) -> &[usize] {
        &self.right_adj[v]
    }

    pub fn left_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.left_adj[u].iter().map(move |&j| self.edges[j].1)
    }

    pub fn right_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.right_adj[v].iter().map(move |&j| self.edges[j].0)
    }

    pub fn left_degree(&self, u: usize) -> usize {
        self.left_adj[u].len()
    }

    pub fn right_degree(&self, v: usize) -> usize {
        self.right_adj[v].len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        match v {
            Vertex::Left(u) => self.left_degree(u),
            Vertex::Right(w) => self.right_degree(w),
        }
    }

    /// Whether every vertex has odd degree. Vacuously true when empty.
    pub fn is_odd(&self) -> bool {
        self.left_adj.iter().chain(&self.right_adj).all(|a| a.len() % 2 == 1)
    }

    /// Average degree measured per left vertex, `m / |V₁|`.
    pub fn average_degree(&self) -> f64 {
        if self.left_count == 0 {
            0.0
        } else {
            self.edges.len() as f64 / self.left_count as f64
        }
    }

    /// Flat index used for incidence rows: left vertices first, then right.
    pub fn flat_index(&self, v: Vertex) -> usize {
        match v {
            Vertex::Left(u) => u,
            Vertex::Right(w) => self.left_count + w,
        }
    }

    /// 0/1 biadjacency matrix, rows indexed by left vertices.
    pub fn biadjacency(&self) -> Vec<Vec<u8>> {
        let mut rows = vec![vec![0u8; self.right_count]; self.left_count];
        for &(u, v) in &self.edges {
            rows[u][v] = 1;
        }
        rows
    }

    /// Same graph with its edge list reordered by `perm` (new edge `j` is old
    /// edge `perm[j]`).
    pub fn permute_edges(&self, perm: &[usize]) -> Result<Self> {
        if perm.len() != self.edges.len() {
            return Err(Error::Contract("edge permutation has the wrong length".into()));
        }
        Self::new(
            self.left_count,
            self.right_count,
            perm.iter().map(|&j| self.edges[j]).collect(),
        )
    }

    /// Renames vertices: left `u` becomes `left_perm[u]`, right `v` becomes
    /// `right_perm[v]`.
    pub fn relabel(&self, left_perm: &[usize], right_perm: &[usize]) -> Result<Self> {
        if left_perm.len() != self.left_count || right_perm.len() != self.right_count {
            return Err(Error::Contract("relabelling has the wrong length".into()));
        }
        Self::new(
            self.left_count,
            self.right_count,
            self.edges.iter().map(|&(u, v)| (left_perm[u], right_perm[v])).collect(),
        )
    }
}

/// Number of connected components, counting isolated vertices.
pub fn connected_components(g: &BipartiteGraph) -> usize {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut components = n;
    for &(u, v) in g.edges() {
        let a = find(&mut parent, u);
        let b = find(&mut parent, g.left_count + v);
        if a != b {
            parent[a] = b;
            components -= 1;
        }
    }
    components
}

/// Number of edges with one endpoint in `s` and the other in `t`.
///
/// Fails when the two sets share a vertex.
pub fn cut_count(g: &BipartiteGraph, s: &[Vertex], t: &[Vertex]) -> Result<usize> {
    let mut side = vec![0u8; g.vertex_count()];
    for &v in s {
        check_vertex(g, v)?;
        side[g.flat_index(v)] = 1;
    }
    for &v in t {
        check_vertex(g, v)?;
        let slot = &mut side[g.flat_index(v)];
        if *slot == 1 {
            return Err(Error::Contract(format!("{v:?} is in both vertex sets")));
        }
        *slot = 2;
    }
    Ok(g
        .edges()
        .iter()
        .filter(|&&(u, v)| {
            let a = side[u];
            let b = side[g.left_count + v];
            (a == 1 && b == 2) || (a == 2 && b == 1)
        })
        .count())
}

fn check_vertex(g: &BipartiteGraph, v: Vertex) -> Result<()> {
    let ok = match v {
        Vertex::Left(u) => u < g.left_count,
        Vertex::Right(w) => w < g.right_count,
    };
    if ok {
        Ok(())
    } else {
        Err(Error::Contract(format!("{v:?} is not a vertex of the graph")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Vertex::{Left, Right};

    #[test]
    fn rejects_bad_edges() {
        assert!(BipartiteGraph::new(1, 1, vec![(0, 1)]).is_err());
        assert!(BipartiteGraph::new(2, 2, vec![(0, 1), (0, 1)]).is_err());
    }

    #[test]
    fn components() {
        assert_eq!(connected_components(&BipartiteGraph::complete(2, 2)), 1);
        let two = BipartiteGraph::new(2, 2, vec![(0, 0), (1, 1)]).unwrap();
        assert_eq!(connected_components(&two), 2);
        assert_eq!(connected_components(&BipartiteGraph::new(1, 1, vec![]).unwrap()), 2);
        assert_eq!(connected_components(&BipartiteGraph::new(0, 0, vec![]).unwrap()), 0);
    }

    #[test]
    fn cuts() {
        let k22 = BipartiteGraph::complete(2, 2);
        assert_eq!(cut_count(&k22, &[Left(0)], &[Right(0), Right(1)]).unwrap(), 2);
        assert_eq!(cut_count(&k22, &[], &[Right(0), Left(1)]).unwrap(), 0);
        let k33 = BipartiteGraph::complete(3, 3);
        assert_eq!(cut_count(&k33, &[Left(0), Left(1)], &[Right(0)]).unwrap(), 2);
        // same-side sets never share an edge
        assert_eq!(cut_count(&k33, &[Left(0)], &[Left(1)]).unwrap(), 0);
    }

    #[test]
    fn cut_rejects_overlap() {
        let k22 = BipartiteGraph::complete(2, 2);
        assert!(cut_count(&k22, &[Left(0)], &[Left(0)]).is_err());
        assert!(cut_count(&k22, &[Left(5)], &[]).is_err());
    }

    #[test]
    fn relabel_and_permute_preserve_shape() {
        let g = BipartiteGraph::new(2, 3, vec![(0, 0), (1, 2), (0, 1)]).unwrap();
        let p = g.permute_edges(&[2, 0, 1]).unwrap();
        assert_eq!(p.edges(), &[(0, 1), (0, 0), (1, 2)]);
        let r = g.relabel(&[1, 0], &[2, 1, 0]).unwrap();
        assert_eq!(r.edges(), &[(1, 2), (0, 0), (1, 1)]);
        assert_eq!(r.left_degree(1), 2);
    }
}
