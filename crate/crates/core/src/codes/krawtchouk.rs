//! Exact Krawtchouk coefficients and the MacWilliams transform between a
//! binary code's weight distribution and that of its dual.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::weights::WeightDistribution;

/// `entries[i][j]` is the coefficient of `x^i` in `(1 - x)^j (1 + x)^(m - j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KrawtchoukTable {
    m: usize,
    entries: Vec<Vec<BigInt>>,
}

impl KrawtchoukTable {
    pub fn build(m: usize) -> Self {
        let binom = pascal(m);
        let mut entries = vec![vec![BigInt::zero(); m + 1]; m + 1];
        for (i, row) in entries.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                // sum over k of (-1)^k C(j, k) C(m - j, i - k)
                let mut acc = BigInt::zero();
                for k in i.saturating_sub(m - j)..=i.min(j) {
                    let term = &binom[j][k] * &binom[m - j][i - k];
                    if k % 2 == 0 {
                        acc += BigInt::from(term);
                    } else {
                        acc -= BigInt::from(term);
                    }
                }
                *cell = acc;
            }
        }
        Self { m, entries }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.entries
    }
}

fn pascal(m: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(m + 1);
    for n in 0..=m {
        let mut row = vec![BigUint::one(); n + 1];
        for k in 1..n {
            row[k] = &rows[n - 1][k - 1] + &rows[n - 1][k];
        }
        rows.push(row);
    }
    rows
}

/// Shared, memoized table for length `m`.
pub fn krawtchouk_table(m: usize) -> Arc<KrawtchoukTable> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<KrawtchoukTable>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.lock().expect("table cache poisoned").get(&m) {
        return Arc::clone(t);
    }
    let table = Arc::new(KrawtchoukTable::build(m));
    cache
        .lock()
        .expect("table cache poisoned")
        .entry(m)
        .or_insert(table)
        .clone()
}

/// Weight distribution of the dual of a rank-`input_rank` code of length `m`
/// whose own distribution is `w`.
///
/// Every division is checked to be exact; a remainder, a negative
/// coefficient or a wrong total is reported as [`Error::Integrity`].
pub fn macwilliams_dual_distribution(
    w: &WeightDistribution,
    m: usize,
    input_rank: usize,
) -> Result<WeightDistribution> {
    if w.len() != m + 1 {
        return Err(Error::Contract(format!(
            "distribution has {} slots, expected {}",
            w.len(),
            m + 1
        )));
    }
    if input_rank > m {
        return Err(Error::Contract(format!("rank {input_rank} exceeds length {m}")));
    }
    let size = BigUint::one() << input_rank;
    if w.total() != size {
        return Err(Error::Integrity(format!(
            "distribution total {} is not 2^{input_rank}",
            w.total()
        )));
    }

    let table = krawtchouk_table(m);
    let mut out = Vec::with_capacity(m + 1);
    for (i, coeffs) in table.rows().iter().enumerate() {
        let mut acc = BigInt::zero();
        for (coef, count) in coeffs.iter().zip(w.counts()) {
            if !count.is_zero() {
                acc += coef * BigInt::from(count.clone());
            }
        }
        if acc.is_negative() {
            return Err(Error::Integrity(format!("dual weight {i} has a negative sum {acc}")));
        }
        let (quot, rem) = (acc.magnitude() >> input_rank, acc.magnitude() % &size);
        if !rem.is_zero() {
            return Err(Error::Integrity(format!(
                "dual weight {i}: {acc} is not divisible by 2^{input_rank}"
            )));
        }
        out.push(quot);
    }

    let dual = WeightDistribution::from_counts(out);
    if !dual[0].is_one() || dual.total() != BigUint::one() << (m - input_rank) {
        return Err(Error::Integrity(format!(
            "dual distribution {dual} is not a rank-{} code",
            m - input_rank
        )));
    }
    Ok(dual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::Caps;
    use crate::codes::{enumerate_weight_distribution, BitRow, Gf2Matrix};

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    /// Coefficients of (1-x)^j (1+x)^(m-j) by repeated polynomial products.
    fn expand(m: usize, j: usize) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for t in 0..m {
            let sign = if t < j { -1 } else { 1 };
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d] += c;
                next[d + 1] += c * sign;
            }
            poly = next;
        }
        poly
    }

    #[test]
    fn m1_table() {
        let t = KrawtchoukTable::build(1);
        assert_eq!(t.rows(), &[ints(&[1, 1]), ints(&[1, -1])]);
    }

    #[test]
    fn m4_entry() {
        assert_eq!(*krawtchouk_table(4).get(1, 1), BigInt::from(2));
    }

    #[test]
    fn table_matches_polynomial_expansion() {
        for m in 0..=10 {
            let t = KrawtchoukTable::build(m);
            for j in 0..=m {
                let col = expand(m, j);
                for i in 0..=m {
                    assert_eq!(t.get(i, j), &col[i], "m={m} i={i} j={j}");
                }
            }
        }
    }

    #[test]
    fn table_invariants() {
        for m in 0..=16 {
            let t = krawtchouk_table(m);
            let binom = pascal(m);
            for j in 0..=m {
                assert!(t.get(0, j).is_one());
                let col: BigInt = (0..=m).map(|i| t.get(i, j)).sum();
                let expected = if j == 0 { BigInt::one() << m } else { BigInt::zero() };
                assert_eq!(col, expected);
            }
            for i in 0..=m {
                assert_eq!(*t.get(i, 0), BigInt::from(binom[m][i].clone()));
            }
        }
    }

    #[test]
    fn repetition_code_is_self_dual() {
        let w = WeightDistribution::from_u64s(&[1, 0, 1]);
        assert_eq!(macwilliams_dual_distribution(&w, 2, 1).unwrap(), w);
    }

    #[test]
    fn triangle_cut_space_to_cycle_space() {
        let caps = Caps::default();
        let bits = |s: &str| BitRow::from_bits(&s.bytes().map(|b| b == b'1').collect::<Vec<_>>());
        // Incidence rows of a triangle; any two generate the cut space.
        let cuts = Gf2Matrix::new(3, vec![bits("110"), bits("101")]).unwrap();
        let cycles = Gf2Matrix::new(3, vec![bits("111")]).unwrap();
        let w_cut = enumerate_weight_distribution(&cuts, 3, &caps).unwrap();
        let w_cyc = enumerate_weight_distribution(&cycles, 3, &caps).unwrap();
        assert_eq!(w_cut, WeightDistribution::from_u64s(&[1, 0, 3, 0]));
        assert_eq!(w_cyc, WeightDistribution::from_u64s(&[1, 0, 0, 1]));
        assert_eq!(macwilliams_dual_distribution(&w_cut, 3, 2).unwrap(), w_cyc);
        assert_eq!(macwilliams_dual_distribution(&w_cyc, 3, 1).unwrap(), w_cut);
    }

    #[test]
    fn full_space_dualizes_to_zero_code() {
        for m in 0..=9 {
            let binom = pascal(m);
            let w = WeightDistribution::from_counts(binom[m].clone());
            let dual = macwilliams_dual_distribution(&w, m, m).unwrap();
            let mut zero = vec![0u64; m + 1];
            zero[0] = 1;
            assert_eq!(dual, WeightDistribution::from_u64s(&zero));
        }
    }

    #[test]
    fn rejects_non_codes() {
        // correct total, but not a linear code
        let w = WeightDistribution::from_u64s(&[1, 1, 2]);
        assert!(matches!(
            macwilliams_dual_distribution(&w, 2, 2),
            Err(Error::Integrity(_))
        ));
        // wrong rank for the total
        let w = WeightDistribution::from_u64s(&[1, 0, 1]);
        assert!(matches!(
            macwilliams_dual_distribution(&w, 2, 2),
            Err(Error::Integrity(_))
        ));
        assert!(matches!(
            macwilliams_dual_distribution(&w, 3, 1),
            Err(Error::Contract(_))
        ));
    }
}
