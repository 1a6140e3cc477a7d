//! Sign vectors, their prefix sums, and subsets of `[n]`.
//!
//! A [`SignVector`] of length `n` is stored as a bitmask: entry `i` (1-based)
//! is `+1` exactly when bit `i - 1` is set. Subsets map onto sign vectors by
//! marking members with `+1`.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vector length.
pub const MAX_LEN: usize = 64;

fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A length-`n` vector over `{+1, -1}`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector {
    n: u8,
    bits: u64,
}

impl SignVector {
    /// Builds a vector from its bitmask. Bits at or above `n` must be clear.
    pub fn new(n: usize, bits: u64) -> Result<Self> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        if bits & !full_mask(n) != 0 {
            return Err(Error::InvalidSubset(format!(
                "bitmask {bits:#x} has bits beyond length {n}"
            )));
        }
        Ok(SignVector { n: n as u8, bits })
    }

    pub(crate) fn from_bits_unchecked(n: usize, bits: u64) -> Self {
        debug_assert!((1..=MAX_LEN).contains(&n) && bits & !full_mask(n) == 0);
        SignVector { n: n as u8, bits }
    }

    /// Builds a vector from explicit `+1`/`-1` entries.
    pub fn from_entries(entries: &[i8]) -> Result<Self> {
        let n = entries.len();
        if n == 0 || n > MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        let mut bits = 0u64;
        for (i, &e) in entries.iter().enumerate() {
            match e {
                1 => bits |= 1 << i,
                -1 => {}
                other => {
                    return Err(Error::InvalidSubset(format!(
                        "entry {} is {other}, expected +1 or -1",
                        i + 1
                    )))
                }
            }
        }
        Ok(SignVector { n: n as u8, bits })
    }

    /// The all `-1` vector, the least element of `P(n)`.
    pub fn bottom(n: usize) -> Result<Self> {
        Self::new(n, 0)
    }

    /// The all `+1` vector, the greatest element of `P(n)`.
    pub fn top(n: usize) -> Result<Self> {
        Self::new(n, full_mask(n.min(MAX_LEN)))
    }

    /// Sign vector of a subset: entry `i` is `+1` iff `i` is a member.
    pub fn from_subset(s: &SubsetRef) -> Self {
        let bits = s.indices.iter().fold(0u64, |acc, &i| acc | 1 << (i - 1));
        SignVector::from_bits_unchecked(s.n, bits)
    }

    /// Parses a sign string such as `"+-+--"`.
    pub fn parse_signs(s: &str) -> Result<Self> {
        let entries = s
            .chars()
            .map(|ch| match ch {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::InvalidSubset(format!("unexpected character {other:?}"))),
            })
            .collect::<Result<Vec<i8>>>()?;
        Self::from_entries(&entries)
    }

    #[inline]
    #[allow(clippy::len_without_is_empty)] // never empty
    pub fn len(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    /// Entry `i` (1-based).
    #[inline]
    pub fn entry(&self, i: usize) -> i8 {
        debug_assert!(i >= 1 && i <= self.len());
        if self.bits >> (i - 1) & 1 == 1 {
            1
        } else {
            -1
        }
    }

    pub fn entries(&self) -> Vec<i8> {
        (1..=self.len()).map(|i| self.entry(i)).collect()
    }

    /// Number of `+1` entries.
    #[inline]
    pub fn plus_count(&self) -> usize {
        self.bits.count_ones() as usize
    }

    /// Entrywise negation; corresponds to taking the complement subset.
    #[inline]
    pub fn negate(&self) -> Self {
        SignVector {
            n: self.n,
            bits: !self.bits & full_mask(self.len()),
        }
    }

    pub fn prefix_sums(&self) -> PrefixSums {
        let mut acc = 0i32;
        let sums = (1..=self.len())
            .map(|i| {
                acc += self.entry(i) as i32;
                acc
            })
            .collect();
        PrefixSums(sums)
    }

    /// `self ⪯ other`: every prefix sum of `self` is at most the matching
    /// prefix sum of `other`.
    pub fn leq(&self, other: &SignVector) -> Result<bool> {
        if self.n != other.n {
            return Err(Error::LengthMismatch {
                left: self.len(),
                right: other.len(),
            });
        }
        Ok(self.leq_same_len(other))
    }

    #[inline]
    pub(crate) fn leq_same_len(&self, other: &SignVector) -> bool {
        // The difference of prefix sums moves by 0 or ±2 per step.
        let mut diff = 0i32;
        let mut up = other.bits & !self.bits;
        let mut down = self.bits & !other.bits;
        if up | down == 0 {
            return true;
        }
        // Walk only the positions where the vectors differ, in order.
        while up | down != 0 {
            let next_up = if up == 0 { 64 } else { up.trailing_zeros() };
            let next_down = if down == 0 { 64 } else { down.trailing_zeros() };
            if next_up < next_down {
                diff += 2;
                up &= up - 1;
            } else {
                diff -= 2;
                if diff < 0 {
                    return false;
                }
                down &= down - 1;
            }
        }
        true
    }

    /// Strict order `self ≺ other`.
    pub fn lt(&self, other: &SignVector) -> Result<bool> {
        Ok(self != other && self.leq(other)?)
    }

    /// The members of the subset `{i : entry i = +1}`.
    pub fn to_subset(&self) -> SubsetRef {
        SubsetRef {
            n: self.len(),
            indices: (1..=self.len()).filter(|&i| self.entry(i) == 1).collect(),
        }
    }

    /// Inner product with an integer vector of the same length.
    pub(crate) fn dot(&self, weights: &[i64]) -> i64 {
        debug_assert_eq!(weights.len(), self.len());
        weights
            .iter()
            .enumerate()
            .map(|(i, &w)| if self.bits >> i & 1 == 1 { w } else { -w })
            .sum()
    }

    /// Image under the order isomorphism onto `M(n)`: `i ∈ f(v)` iff
    /// `v_{n+1-i} = +1`. Indices are listed in decreasing order of position,
    /// i.e. increasing order of value.
    pub fn iso_f(&self) -> SubsetRef {
        let n = self.len();
        SubsetRef {
            n,
            indices: (1..=n).filter(|&i| self.entry(n + 1 - i) == 1).collect(),
        }
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 1..=self.len() {
            f.write_str(if self.entry(i) == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SignVector({self})")
    }
}

/// Running sums `r_i = v_1 + … + v_i` of a sign vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrefixSums(Vec<i32>);

impl PrefixSums {
    pub fn as_slice(&self) -> &[i32] {
        &self.0
    }

    #[allow(clippy::len_without_is_empty)] // never empty
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn last(&self) -> i32 {
        *self.0.last().expect("prefix sums are never empty")
    }

    /// Checks the walk invariants and rebuilds the sign vector.
    pub fn from_sums(sums: Vec<i32>) -> Result<Self> {
        if sums.is_empty() || sums.len() > MAX_LEN {
            return Err(Error::InvalidLength(sums.len()));
        }
        let mut prev = 0;
        for (i, &s) in sums.iter().enumerate() {
            if (s - prev).abs() != 1 {
                return Err(Error::InvalidSubset(format!(
                    "prefix sum {} jumps from {prev} to {s}",
                    i + 1
                )));
            }
            prev = s;
        }
        Ok(PrefixSums(sums))
    }

    pub fn to_sign_vector(&self) -> SignVector {
        let mut prev = 0;
        let mut bits = 0u64;
        for (i, &s) in self.0.iter().enumerate() {
            if s > prev {
                bits |= 1 << i;
            }
            prev = s;
        }
        SignVector::from_bits_unchecked(self.0.len(), bits)
    }

    /// Dot product with a vector of 63-bit integers.
    pub fn dot(&self, other: &[i64]) -> i64 {
        self.0
            .iter()
            .zip(other)
            .map(|(&r, &d)| r as i64 * d)
            .sum()
    }
}

/// A subset of `[n]`, held as strictly increasing 1-based indices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SubsetRef {
    n: usize,
    indices: Vec<usize>,
}

impl SubsetRef {
    /// Validates and sorts the given indices.
    pub fn new(n: usize, mut indices: Vec<usize>) -> Result<Self> {
        if n == 0 || n > MAX_LEN {
            return Err(Error::InvalidLength(n));
        }
        indices.sort_unstable();
        for w in indices.windows(2) {
            if w[0] == w[1] {
                return Err(Error::InvalidSubset(format!("duplicate index {}", w[0])));
            }
        }
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > n) {
            return Err(Error::InvalidSubset(format!("index {bad} outside [1, {n}]")));
        }
        Ok(SubsetRef { n, indices })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.indices.binary_search(&i).is_ok()
    }

    /// `[n] ∖ self`.
    pub fn complement(&self) -> SubsetRef {
        SubsetRef {
            n: self.n,
            indices: (1..=self.n).filter(|i| !self.contains(*i)).collect(),
        }
    }

    /// Dominance order of `M(n)`: with both sets listed in decreasing order,
    /// `A ⩽ B` iff `|A| ≤ |B|` and `a_i ≤ b_i` for every `i ≤ |A|`.
    pub fn dominance_leq(&self, other: &SubsetRef) -> bool {
        self.len() <= other.len()
            && self
                .indices
                .iter()
                .rev()
                .zip(other.indices.iter().rev())
                .all(|(a, b)| a <= b)
    }

    /// Sum of the member indices (the rank in `M(n)`).
    pub fn element_sum(&self) -> usize {
        self.indices.iter().sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sv(e: &[i8]) -> SignVector {
        SignVector::from_entries(e).unwrap()
    }

    fn subset(n: usize, idx: &[usize]) -> SubsetRef {
        SubsetRef::new(n, idx.to_vec()).unwrap()
    }

    #[test]
    fn from_subset_examples() {
        assert_eq!(SignVector::from_subset(&subset(3, &[1])), sv(&[1, -1, -1]));
        assert_eq!(SignVector::from_subset(&subset(3, &[2, 3])), sv(&[-1, 1, 1]));
        assert_eq!(
            SignVector::from_subset(&subset(4, &[])),
            sv(&[-1, -1, -1, -1])
        );
    }

    #[test]
    fn negation() {
        assert_eq!(sv(&[1, -1, -1]).negate(), sv(&[-1, 1, 1]));
        for bits in 0..16 {
            let v = SignVector::new(4, bits).unwrap();
            assert_eq!(v.negate().negate(), v);
        }
        let s = subset(4, &[1, 3]);
        assert_eq!(
            SignVector::from_subset(&s).negate().to_subset(),
            subset(4, &[2, 4])
        );
        assert_eq!(s.complement(), subset(4, &[2, 4]));
    }

    #[test]
    fn prefix_sum_examples() {
        assert_eq!(sv(&[1, -1, 1, -1, -1]).prefix_sums().as_slice(), &[1, 0, 1, 0, -1]);
        assert_eq!(sv(&[1, 1, 1]).prefix_sums().as_slice(), &[1, 2, 3]);
        assert_eq!(sv(&[-1, 1, 1]).prefix_sums().as_slice(), &[-1, 0, 1]);
    }

    #[test]
    fn prefix_sum_roundtrip_and_last_entry() {
        for bits in 0..64u64 {
            let v = SignVector::new(6, bits).unwrap();
            let r = v.prefix_sums();
            assert_eq!(r.last(), 2 * v.plus_count() as i32 - 6);
            assert_eq!(r.to_sign_vector(), v);
            for (i, s) in r.as_slice().iter().enumerate() {
                assert_eq!((s - (i as i32 + 1)).rem_euclid(2), 0);
            }
        }
        assert!(PrefixSums::from_sums(vec![1, 3]).is_err());
    }

    #[test]
    fn leq_examples() {
        let a = sv(&[1, -1, -1]);
        let b = sv(&[-1, 1, 1]);
        assert!(!a.leq(&b).unwrap());
        assert!(!b.leq(&a).unwrap());
        let bottom = SignVector::bottom(4).unwrap();
        for bits in 0..16 {
            let w = SignVector::new(4, bits).unwrap();
            assert!(bottom.leq(&w).unwrap());
        }
        assert!(matches!(
            a.leq(&SignVector::bottom(4).unwrap()),
            Err(Error::LengthMismatch { left: 3, right: 4 })
        ));
    }

    #[test]
    fn leq_matches_prefix_sum_definition() {
        for n in 1..=6 {
            for x in 0..1u64 << n {
                for y in 0..1u64 << n {
                    let v = SignVector::new(n, x).unwrap();
                    let w = SignVector::new(n, y).unwrap();
                    let direct = v
                        .prefix_sums()
                        .as_slice()
                        .iter()
                        .zip(w.prefix_sums().as_slice())
                        .all(|(a, b)| a <= b);
                    assert_eq!(v.leq(&w).unwrap(), direct, "{v} vs {w}");
                }
            }
        }
    }

    #[test]
    fn iso_f_examples() {
        assert_eq!(sv(&[1, -1, 1, -1, -1]).iso_f(), subset(5, &[3, 5]));
        assert!(SignVector::bottom(7).unwrap().iso_f().is_empty());
        assert_eq!(sv(&[1, 1, 1]).iso_f(), subset(3, &[1, 2, 3]));
    }

    #[test]
    fn dominance_order() {
        // {5,3} vs {5,4}: 5≤5, 3≤4
        assert!(subset(5, &[3, 5]).dominance_leq(&subset(5, &[4, 5])));
        assert!(!subset(5, &[4, 5]).dominance_leq(&subset(5, &[3, 5])));
        // larger sets cannot lie below smaller ones
        assert!(!subset(5, &[1, 2]).dominance_leq(&subset(5, &[5])));
        assert!(subset(5, &[]).dominance_leq(&subset(5, &[1])));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(SignVector::new(0, 0).is_err());
        assert!(SignVector::new(65, 0).is_err());
        assert!(SignVector::new(3, 8).is_err());
        assert!(SignVector::from_entries(&[1, 0]).is_err());
        assert!(SubsetRef::new(3, vec![1, 1]).is_err());
        assert!(SubsetRef::new(3, vec![4]).is_err());
        assert!(SubsetRef::new(3, vec![0]).is_err());
        assert_eq!(SignVector::top(64).unwrap().plus_count(), 64);
    }

    #[test]
    fn display_and_parse() {
        let v = sv(&[1, -1, 1, -1, -1]);
        assert_eq!(v.to_string(), "+-+--");
        assert_eq!(SignVector::parse_signs("+-+--").unwrap(), v);
        assert!(SignVector::parse_signs("+x").is_err());
    }
}
