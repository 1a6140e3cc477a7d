//! Partition-problem instances and the arithmetic tying subsets to the
//! signed difference `Δ(S) = Σ_{i∈S} c_i − Σ_{i∉S} c_i`.

use crate::error::{Error, Result};
use crate::sign::{SignVector, MAX_LEN};

/// A normalized instance: values sorted non-increasingly, with `perm[j]`
/// giving the original (0-based) position of sorted entry `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    c: Vec<i64>,
    perm: Vec<usize>,
    total: i64,
}

impl Instance {
    /// Sorts `raw` non-increasingly (stable, so equal values keep their
    /// input order) and records the permutation back to input positions.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if raw.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some((position, &value)) = raw.iter().enumerate().find(|(_, v)| **v < 0) {
            return Err(Error::NegativeValue { position, value });
        }
        let total = raw
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("sum of instance values exceeds 63 bits"))?;
        let mut perm: Vec<usize> = (0..raw.len()).collect();
        perm.sort_by(|&a, &b| raw[b].cmp(&raw[a]));
        let c = perm.iter().map(|&p| raw[p]).collect();
        Ok(Instance { c, perm, total })
    }

    /// Sorted values `c_1 ≥ … ≥ c_n`.
    pub fn values(&self) -> &[i64] {
        &self.c
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn total(&self) -> i64 {
        self.total
    }

    pub fn len(&self) -> usize {
        self.c.len()
    }

    pub fn is_empty(&self) -> bool {
        self.c.is_empty()
    }

    /// Values in their original input order.
    pub fn raw_values(&self) -> Vec<i64> {
        let mut raw = vec![0; self.len()];
        for (j, &p) in self.perm.iter().enumerate() {
            raw[p] = self.c[j];
        }
        raw
    }

    /// Maps a sorted-position subset (1-based) to original input indices
    /// (1-based, ascending).
    pub fn to_original_indices(&self, sorted: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = sorted.iter().map(|&j| self.perm[j - 1] + 1).collect();
        out.sort_unstable();
        out
    }

    pub(crate) fn check_len(&self, v: &SignVector) -> Result<()> {
        if v.len() != self.len() {
            return Err(Error::LengthMismatch {
                left: v.len(),
                right: self.len(),
            });
        }
        Ok(())
    }

    pub(crate) fn check_bitmask_len(&self) -> Result<()> {
        if self.len() > MAX_LEN {
            return Err(Error::TooLarge {
                what: "sign-vector length",
                n: self.len() as u64,
                limit: MAX_LEN as u64,
            });
        }
        Ok(())
    }
}

/// `Δ = v·c` for a vector of the matching length.
pub fn delta(v: &SignVector, inst: &Instance) -> Result<i64> {
    inst.check_len(v)?;
    Ok(v.dot(&inst.c))
}

/// Consecutive differences `d_i = c_i − c_{i+1}` with `c_{n+1} = 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiffVector(Vec<i64>);

impl DiffVector {
    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }
}

pub fn diff_vector(inst: &Instance) -> DiffVector {
    let c = &inst.c;
    DiffVector(
        (0..c.len())
            .map(|i| c[i] - c.get(i + 1).copied().unwrap_or(0))
            .collect(),
    )
}
