//! Fixtures shared by the criterion benches.

use matchspectrum::harness::gen_random_bipartite;
use matchspectrum::BipartiteGraph;

/// Seeded sparse balanced graph with `n` vertices per side and average
/// degree `degree`.
pub fn sparse(n: usize, degree: f64, seed: u64) -> BipartiteGraph {
    gen_random_bipartite(n, degree, seed).expect("valid generator parameters")
}

/// Sizes used by the engine comparison.
pub const SIZES: &[usize] = &[10, 12, 14];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixtures_are_balanced_and_reproducible() {
        let a = sparse(10, 3.0, 4);
        assert!(a.is_balanced());
        assert_eq!(a.edge_count(), 30);
        assert_eq!(a.edges(), sparse(10, 3.0, 4).edges());
    }
}
