use std::fmt;
use std::ops::{Add, Index};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Counts indexed by weight: `counts[k]` objects have weight `k`.
///
/// Serializes as a JSON array of decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct WeightDistribution {
    counts: Vec<BigUint>,
}

impl WeightDistribution {
    /// All-zero distribution over weights `0..=max_weight`.
    pub fn zeros(max_weight: usize) -> Self {
        Self {
            counts: vec![BigUint::zero(); max_weight + 1],
        }
    }

    /// A single object of weight `at`.
    pub fn unit(max_weight: usize, at: usize) -> Self {
        let mut w = Self::zeros(max_weight);
        w.counts[at] = BigUint::one();
        w
    }

    pub fn from_counts(counts: Vec<BigUint>) -> Self {
        Self { counts }
    }

    pub fn from_u64s(counts: &[u64]) -> Self {
        Self {
            counts: counts.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn counts(&self) -> &[BigUint] {
        &self.counts
    }

    pub fn into_counts(self) -> Vec<BigUint> {
        self.counts
    }

    /// Number of slots, `m + 1` for length-`m` words.
    pub fn len(&self) -> usize {
        self.counts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn max_weight(&self) -> usize {
        self.counts.len().saturating_sub(1)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().sum()
    }

    pub fn get(&self, k: usize) -> Option<&BigUint> {
        self.counts.get(k)
    }
}

impl Index<usize> for WeightDistribution {
    type Output = BigUint;

    fn index(&self, k: usize) -> &BigUint {
        &self.counts[k]
    }
}

impl Add for &WeightDistribution {
    type Output = WeightDistribution;

    /// Entrywise sum; the shorter operand is zero-extended.
    fn add(self, rhs: &WeightDistribution) -> WeightDistribution {
        let (long, short) = if self.len() >= rhs.len() { (self, rhs) } else { (rhs, self) };
        let mut out = long.clone();
        for (a, b) in out.counts.iter_mut().zip(&short.counts) {
            *a += b;
        }
        out
    }
}

impl fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, c) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str("]")
    }
}

impl Serialize for WeightDistribution {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.counts.iter().map(|c| c.to_str_radix(10)))
    }
}

impl<'de> Deserialize<'de> for WeightDistribution {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        let counts = raw
            .iter()
            .map(|s| {
                BigUint::parse_bytes(s.as_bytes(), 10)
                    .ok_or_else(|| D::Error::custom(format!("`{s}` is not a decimal count")))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { counts })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_uses_decimal_strings() {
        let big = BigUint::one() << 80u32;
        let w = WeightDistribution::from_counts(vec![BigUint::from(2u8), big.clone()]);
        let text = serde_json::to_string(&w).unwrap();
        assert_eq!(text, format!("[\"2\",\"{big}\"]"));
        let back: WeightDistribution = serde_json::from_str(&text).unwrap();
        assert_eq!(back, w);
        assert!(serde_json::from_str::<WeightDistribution>("[\"-1\"]").is_err());
        assert!(serde_json::from_str::<WeightDistribution>("[3]").is_err());
    }

    #[test]
    fn sums() {
        let a = WeightDistribution::from_u64s(&[1, 2]);
        let b = WeightDistribution::from_u64s(&[1, 0, 5]);
        assert_eq!(&a + &b, WeightDistribution::from_u64s(&[2, 2, 5]));
        assert_eq!(b.total(), BigUint::from(6u8));
        assert_eq!(WeightDistribution::unit(2, 1).to_string(), "[0, 1, 0]");
    }
}
