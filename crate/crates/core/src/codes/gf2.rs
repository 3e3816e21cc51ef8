use std::collections::VecDeque;
use std::fmt;

use num_bigint::BigUint;

use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::graph::BipartiteGraph;
use crate::weights::WeightDistribution;

/// Fixed-length bit vector over GF(2), packed into 64-bit words.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        Self {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn from_bits(bits: &[bool]) -> Self {
        let mut row = Self::zeros(bits.len());
        for (i, _) in bits.iter().enumerate().filter(|(_, &b)| b) {
            row.set(i);
        }
        row
    }

    pub fn from_indices(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut row = Self::zeros(len);
        for i in ones {
            row.set(i);
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        (self.words[i / 64] >> (i % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / 64] |= 1 << (i % 64);
    }

    pub fn toggle(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range for length {}", self.len);
        self.words[i / 64] ^= 1 << (i % 64);
    }

    pub fn xor_assign(&mut self, other: &BitRow) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// GF(2) inner product.
    pub fn dot(&self, other: &BitRow) -> bool {
        let ones: u32 = self
            .words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        ones % 2 == 1
    }

    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len).filter(move |&i| self.get(i))
    }

    fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(k, w)| k * 64 + w.trailing_zeros() as usize)
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

/// Rows of equal-length bit vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gf2Matrix {
    rows: Vec<BitRow>,
    cols: usize,
}

impl Gf2Matrix {
    pub fn new(cols: usize, rows: Vec<BitRow>) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Contract(format!(
                "row of length {} in a matrix with {cols} columns",
                r.len()
            )));
        }
        Ok(Self { rows, cols })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n).map(|i| BitRow::from_indices(n, [i])).collect();
        Self { rows, cols: n }
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn row_count(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }
}

pub fn gf2_rank(m: &Gf2Matrix) -> usize {
    // pivots[k] = reduced row whose lowest set bit is k
    let mut pivots: Vec<Option<BitRow>> = vec![None; m.cols];
    let mut rank = 0;
    for row in m.rows() {
        let mut r = row.clone();
        while let Some(lead) = r.lowest_one() {
            match &pivots[lead] {
                Some(p) => r.xor_assign(p),
                None => {
                    pivots[lead] = Some(r);
                    rank += 1;
                    break;
                }
            }
        }
    }
    rank
}

/// Vertex-by-edge incidence matrix: left vertices first, then right.
pub fn incidence_matrix(g: &BipartiteGraph) -> Gf2Matrix {
    let m = g.edge_count();
    let left = (0..g.left_count()).map(|u| BitRow::from_indices(m, g.left_edges(u).iter().copied()));
    let right =
        (0..g.right_count()).map(|v| BitRow::from_indices(m, g.right_edges(v).iter().copied()));
    Gf2Matrix {
        rows: left.chain(right).collect(),
        cols: m,
    }
}

/// Fundamental cycles of a BFS spanning forest, one per non-tree edge in
/// edge order. Yields `m - |V| + components` independent rows.
pub fn cycle_space_basis(g: &BipartiteGraph) -> Gf2Matrix {
    let nv = g.vertex_count();
    let m = g.edge_count();
    let nl = g.left_count();
    let endpoints = |j: usize| {
        let (u, v) = g.edges()[j];
        (u, nl + v)
    };
    let incident = |x: usize| -> &[usize] {
        if x < nl {
            g.left_edges(x)
        } else {
            g.right_edges(x - nl)
        }
    };

    let mut parent_edge: Vec<Option<usize>> = vec![None; nv];
    let mut visited = vec![false; nv];
    let mut tree_edge = vec![false; m];
    let mut queue = VecDeque::new();
    for root in 0..nv {
        if visited[root] {
            continue;
        }
        visited[root] = true;
        queue.push_back(root);
        while let Some(x) = queue.pop_front() {
            for &j in incident(x) {
                let (a, b) = endpoints(j);
                let y = if a == x { b } else { a };
                if !visited[y] {
                    visited[y] = true;
                    parent_edge[y] = Some(j);
                    tree_edge[j] = true;
                    queue.push_back(y);
                }
            }
        }
    }

    let mut rows = Vec::new();
    for j in (0..m).filter(|&j| !tree_edge[j]) {
        let mut row = BitRow::zeros(m);
        row.set(j);
        let (a, b) = endpoints(j);
        // Toggling both root paths leaves exactly the tree path a..b.
        for start in [a, b] {
            let mut x = start;
            while let Some(pe) = parent_edge[x] {
                row.toggle(pe);
                let (p, q) = endpoints(pe);
                x = if p == x { q } else { p };
            }
        }
        rows.push(row);
    }
    Gf2Matrix { rows, cols: m }
}

/// Visits every element of the row span, in Gray-code order over the row
/// combinations. Rows are assumed independent.
pub fn enumerate_codewords(
    basis: &Gf2Matrix,
    caps: &Caps,
    mut visit: impl FnMut(&BitRow),
) -> Result<()> {
    let k = basis.row_count();
    if k > caps.code_rows || k >= 64 {
        return Err(Error::CapExceeded {
            what: "code enumeration rows",
            size: k,
            cap: caps.code_rows.min(63),
        });
    }
    let mut word = BitRow::zeros(basis.cols());
    visit(&word);
    for step in 1u64..(1u64 << k) {
        word.xor_assign(&basis.rows[step.trailing_zeros() as usize]);
        visit(&word);
    }
    Ok(())
}

/// Brute-force weight distribution of the span of `basis` over words of
/// length `m`.
pub fn enumerate_weight_distribution(
    basis: &Gf2Matrix,
    m: usize,
    caps: &Caps,
) -> Result<WeightDistribution> {
    if basis.cols() != m {
        return Err(Error::Contract(format!(
            "basis has {} columns, expected {m}",
            basis.cols()
        )));
    }
    let mut tally = vec![0u64; m + 1];
    enumerate_codewords(basis, caps, |w| tally[w.weight()] += 1)?;
    Ok(WeightDistribution::from_counts(
        tally.into_iter().map(BigUint::from).collect(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::connected_components;

    fn row(s: &str) -> BitRow {
        BitRow::from_bits(&s.bytes().map(|b| b == b'1').collect::<Vec<_>>())
    }

    #[test]
    fn ranks() {
        assert_eq!(gf2_rank(&Gf2Matrix::identity(3)), 3);
        let zero = Gf2Matrix::new(5, vec![BitRow::zeros(5); 4]).unwrap();
        assert_eq!(gf2_rank(&zero), 0);
        let k11 = incidence_matrix(&BipartiteGraph::complete(1, 1));
        assert_eq!(k11.row_count(), 2);
        assert_eq!(gf2_rank(&k11), 1);
        let dep = Gf2Matrix::new(3, vec![row("110"), row("011"), row("101")]).unwrap();
        assert_eq!(gf2_rank(&dep), 2);
    }

    #[test]
    fn wide_rows_span_words() {
        let a = BitRow::from_indices(130, [0, 64, 129]);
        let b = BitRow::from_indices(130, [64]);
        assert_eq!(a.weight(), 3);
        assert!(a.dot(&b));
        let m = Gf2Matrix::new(130, vec![a.clone(), b, a]).unwrap();
        assert_eq!(gf2_rank(&m), 2);
    }

    #[test]
    fn small_cycle_bases() {
        assert_eq!(cycle_space_basis(&BipartiteGraph::complete(1, 1)).row_count(), 0);
        let k22 = cycle_space_basis(&BipartiteGraph::complete(2, 2));
        assert_eq!(k22.rows(), &[row("1111")]);
        let k33g = BipartiteGraph::complete(3, 3);
        let k33 = cycle_space_basis(&k33g);
        assert_eq!(k33.row_count(), 4);
        assert_eq!(gf2_rank(&k33), 4);
        for r in k33.rows() {
            assert_eq!(r.weight(), 4);
        }
    }

    #[test]
    fn cycles_are_orthogonal_to_cuts() {
        let g = BipartiteGraph::new(
            3,
            4,
            vec![(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (0, 3), (2, 0)],
        )
        .unwrap();
        let cycles = cycle_space_basis(&g);
        let cuts = incidence_matrix(&g);
        let d = connected_components(&g);
        assert_eq!(cycles.row_count(), g.edge_count() - g.vertex_count() + d);
        assert_eq!(gf2_rank(&cuts), g.vertex_count() - d);
        for c in cycles.rows() {
            for a in cuts.rows() {
                assert!(!c.dot(a));
            }
        }
    }

    #[test]
    fn small_distributions() {
        let caps = Caps::default();
        let empty = Gf2Matrix::new(4, vec![]).unwrap();
        assert_eq!(
            enumerate_weight_distribution(&empty, 4, &caps).unwrap(),
            WeightDistribution::from_u64s(&[1, 0, 0, 0, 0])
        );
        let ones = Gf2Matrix::new(4, vec![row("1111")]).unwrap();
        assert_eq!(
            enumerate_weight_distribution(&ones, 4, &caps).unwrap(),
            WeightDistribution::from_u64s(&[1, 0, 0, 0, 1])
        );
        let tri = Gf2Matrix::new(3, vec![row("111")]).unwrap();
        assert_eq!(
            enumerate_weight_distribution(&tri, 3, &caps).unwrap(),
            WeightDistribution::from_u64s(&[1, 0, 0, 1])
        );
    }

    #[test]
    fn enumeration_cap() {
        let caps = Caps {
            code_rows: 2,
            ..Caps::default()
        };
        let m = Gf2Matrix::identity(3);
        assert!(matches!(
            enumerate_weight_distribution(&m, 3, &caps),
            Err(Error::CapExceeded { .. })
        ));
    }
}
