//! Dense distribution buffers with a tracked support window, and the
//! in-place `W <- W + sigma_l(W)` kernel every engine is built on.

use std::ops::AddAssign;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Counter type for engine arithmetic. `u64` is used whenever the total mass
/// `2^|V|` fits, `BigUint` otherwise.
pub(crate) trait Tally: Clone + Send + Sync + Zero + One + for<'a> AddAssign<&'a Self> {
    fn into_biguint(self) -> BigUint;
}

impl Tally for u64 {
    fn into_biguint(self) -> BigUint {
        BigUint::from(self)
    }
}

impl Tally for BigUint {
    fn into_biguint(self) -> BigUint {
        self
    }
}

/// `values[k]` for `k` in `0..=max_weight`; every nonzero entry lies inside
/// `span` (the window may be wider than the true support, never narrower).
#[derive(Debug, Clone)]
pub(crate) struct Buffer<T> {
    values: Vec<T>,
    span: Option<(usize, usize)>,
}

impl<T: Tally> Buffer<T> {
    pub fn new(max_weight: usize) -> Self {
        Self {
            values: vec![T::zero(); max_weight + 1],
            span: None,
        }
    }

    pub fn from_values(values: Vec<T>) -> Self {
        let lo = values.iter().position(|x| !x.is_zero());
        let hi = values.iter().rposition(|x| !x.is_zero());
        Self {
            span: lo.zip(hi),
            values,
        }
    }

    fn max_weight(&self) -> usize {
        self.values.len() - 1
    }

    pub fn clear(&mut self) {
        if let Some((lo, hi)) = self.span.take() {
            for x in &mut self.values[lo..=hi] {
                x.set_zero();
            }
        }
    }

    pub fn set_unit(&mut self, at: usize) {
        self.clear();
        self.values[at] = T::one();
        self.span = Some((at, at));
    }

    /// `self <- self + sigma_l(self)`.
    pub fn add_shifted_self(&mut self, l: i64, checked: bool) -> Result<()> {
        let Some((lo, hi)) = self.span else {
            return Ok(());
        };
        let top = self.max_weight();
        let step = l.unsigned_abs() as usize;
        if checked {
            self.check_shift(lo, hi, l)?;
        }
        if l == 0 {
            for i in lo..=hi {
                let v = self.values[i].clone();
                self.values[i] += &v;
            }
        } else if l > 0 {
            if lo + step > top {
                return Ok(());
            }
            let new_hi = (hi + step).min(top);
            // descending, so each source is read before it is updated
            for i in (lo + step..=new_hi).rev() {
                let (head, tail) = self.values.split_at_mut(i);
                tail[0] += &head[i - step];
            }
            self.span = Some((lo, new_hi));
        } else {
            if hi < step {
                return Ok(());
            }
            let new_lo = lo.saturating_sub(step);
            for i in new_lo..=hi - step {
                let (head, tail) = self.values.split_at_mut(i + step);
                head[i] += &tail[0];
            }
            self.span = Some((new_lo, hi));
        }
        Ok(())
    }

    /// `self <- sigma_x(src)`.
    pub fn load_shifted(&mut self, src: &Buffer<T>, x: i64, checked: bool) -> Result<()> {
        self.clear();
        let Some((lo, hi)) = src.span else {
            return Ok(());
        };
        if checked {
            src.check_shift(lo, hi, x)?;
        }
        let top = self.max_weight() as i64;
        let mut new_span: Option<(usize, usize)> = None;
        for i in lo..=hi {
            let j = i as i64 + x;
            if (0..=top).contains(&j) {
                let j = j as usize;
                self.values[j] = src.values[i].clone();
                new_span = Some(new_span.map_or((j, j), |(a, _)| (a, j)));
            }
        }
        self.span = new_span;
        Ok(())
    }

    pub fn accumulate_into(&self, acc: &mut Buffer<T>) {
        let Some((lo, hi)) = self.span else {
            return;
        };
        for i in lo..=hi {
            acc.values[i] += &self.values[i];
        }
        acc.span = Some(match acc.span {
            Some((a, b)) => (a.min(lo), b.max(hi)),
            None => (lo, hi),
        });
    }

    pub fn merge(mut self, other: Buffer<T>) -> Buffer<T> {
        other.accumulate_into(&mut self);
        self
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    fn check_shift(&self, lo: usize, hi: usize, x: i64) -> Result<()> {
        let top = self.max_weight() as i64;
        let lost = (lo..=hi)
            .find(|&i| !self.values[i].is_zero() && !(0..=top).contains(&(i as i64 + x)));
        match lost {
            Some(i) => Err(Error::Integrity(format!(
                "shift by {x} moves weight {i} outside 0..={top}"
            ))),
            None => Ok(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense(v: &[u64]) -> Buffer<u64> {
        Buffer::from_values(v.to_vec())
    }

    /// Straight transcription of the definition, for comparison.
    fn reference(w: &[u64], l: i64) -> Vec<u64> {
        let n = w.len() as i64;
        (0..n)
            .map(|i| {
                let src = i - l;
                w[i as usize] + if (0..n).contains(&src) { w[src as usize] } else { 0 }
            })
            .collect()
    }

    #[test]
    fn kernel_matches_definition() {
        let base = [0u64, 3, 0, 5, 1, 0, 0];
        for l in -7..=7 {
            let mut b = dense(&base);
            b.add_shifted_self(l, false).unwrap();
            assert_eq!(b.into_values(), reference(&base, l), "l={l}");
        }
    }

    #[test]
    fn checked_mode_detects_loss() {
        let mut b = dense(&[0, 0, 1]);
        assert!(b.add_shifted_self(1, true).is_err());
        let mut b = dense(&[1, 0, 0]);
        assert!(b.add_shifted_self(-1, true).is_err());
        let mut b = dense(&[0, 1, 0]);
        b.add_shifted_self(1, true).unwrap();
        assert_eq!(b.into_values(), vec![0, 1, 1]);
    }

    #[test]
    fn span_survives_clear_and_reuse() {
        let mut b = Buffer::<u64>::new(4);
        b.set_unit(1);
        b.add_shifted_self(2, true).unwrap();
        b.set_unit(4);
        b.add_shifted_self(-4, true).unwrap();
        assert_eq!(b.into_values(), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn load_and_accumulate() {
        let src = dense(&[1, 2, 0, 0]);
        let mut dst = Buffer::new(3);
        dst.load_shifted(&src, 2, true).unwrap();
        let mut acc = dense(&[5, 0, 0, 0]);
        dst.accumulate_into(&mut acc);
        assert_eq!(acc.into_values(), vec![5, 0, 1, 2]);
        assert!(dst.load_shifted(&src, 3, true).is_err());
    }
}
