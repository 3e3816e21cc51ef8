use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Permanent of a square 0/1 matrix by Ryser's inclusion–exclusion formula,
///
/// `perm(A) = (-1)^n Σ_{S ⊆ cols} (-1)^{|S|} Π_i Σ_{j ∈ S} a_ij`,
///
/// visiting column subsets in Gray-code order so each step adds or removes
/// one column from the running row sums.
pub fn ryser_permanent(a: &[Vec<u8>]) -> Result<BigInt> {
    let n = a.len();
    if a.iter().any(|row| row.len() != n) {
        return Err(Error::Contract("permanent needs a square matrix".into()));
    }
    if n >= 63 {
        return Err(Error::CapExceeded {
            what: "permanent dimension",
            size: n,
            cap: 62,
        });
    }
    if n == 0 {
        return Ok(BigInt::from(1));
    }

    let mut row_sums = vec![0i64; n];
    let mut total = BigInt::zero();
    let mut gray = 0u64;
    for step in 1u64..(1u64 << n) {
        let j = step.trailing_zeros() as usize;
        let bit = 1u64 << j;
        let delta = if gray & bit == 0 { 1 } else { -1 };
        gray ^= bit;
        for (s, row) in row_sums.iter_mut().zip(a) {
            if row[j] != 0 {
                *s += delta;
            }
        }
        let term = product(&row_sums);
        if term.is_zero() {
            continue;
        }
        if gray.count_ones() % 2 == 1 {
            total -= term;
        } else {
            total += term;
        }
    }
    if n % 2 == 1 {
        total = -total;
    }
    Ok(total)
}

fn product(values: &[i64]) -> BigInt {
    let mut acc: i128 = 1;
    for (k, &v) in values.iter().enumerate() {
        if v == 0 {
            return BigInt::zero();
        }
        match acc.checked_mul(v as i128) {
            Some(p) => acc = p,
            None => {
                return values[k..].iter().fold(BigInt::from(acc), |p, &x| p * x);
            }
        }
    }
    BigInt::from(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ones(n: usize) -> Vec<Vec<u8>> {
        vec![vec![1; n]; n]
    }

    /// Sum over all permutations, for comparison.
    fn permutation_sum(a: &[Vec<u8>]) -> u64 {
        fn go(a: &[Vec<u8>], row: usize, used: &mut Vec<bool>) -> u64 {
            if row == a.len() {
                return 1;
            }
            let mut total = 0;
            for j in 0..a.len() {
                if !used[j] && a[row][j] != 0 {
                    used[j] = true;
                    total += go(a, row + 1, used);
                    used[j] = false;
                }
            }
            total
        }
        go(a, 0, &mut vec![false; a.len()])
    }

    #[test]
    fn named_values() {
        let id: Vec<Vec<u8>> = (0..3).map(|i| (0..3).map(|j| u8::from(i == j)).collect()).collect();
        assert_eq!(ryser_permanent(&id).unwrap(), BigInt::from(1));
        assert_eq!(ryser_permanent(&ones(3)).unwrap(), BigInt::from(6));
        assert_eq!(ryser_permanent(&ones(8)).unwrap(), BigInt::from(40320));
        let mut zero_row = ones(4);
        zero_row[2] = vec![0; 4];
        assert_eq!(ryser_permanent(&zero_row).unwrap(), BigInt::zero());
        assert_eq!(ryser_permanent(&[]).unwrap(), BigInt::from(1));
    }

    #[test]
    fn large_products_fall_back_to_bigint() {
        // 21! overflows i64 but the per-subset products must stay exact
        let expected: BigInt = (1..=21u32).map(BigInt::from).product();
        assert_eq!(ryser_permanent(&ones(21)).unwrap(), expected);
        let big = product(&[i64::MAX, i64::MAX, 3]);
        assert_eq!(big, BigInt::from(i64::MAX) * i64::MAX * 3);
    }

    #[test]
    fn agrees_with_permutation_sum() {
        let mut state = 0x9e37_79b9_7f4a_7c15u64;
        for n in 1..=6 {
            for _ in 0..20 {
                let a: Vec<Vec<u8>> = (0..n)
                    .map(|_| {
                        (0..n)
                            .map(|_| {
                                state ^= state << 13;
                                state ^= state >> 7;
                                state ^= state << 17;
                                u8::from(state % 3 != 0)
                            })
                            .collect()
                    })
                    .collect();
                assert_eq!(ryser_permanent(&a).unwrap(), BigInt::from(permutation_sum(&a)));
            }
        }
    }

    #[test]
    fn rejects_non_square() {
        assert!(ryser_permanent(&[vec![1, 1]]).is_err());
    }
}
