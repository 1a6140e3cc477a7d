//! Exact level counts of the graded posets, computed without enumeration.
//!
//! Counts are 128-bit and every addition, subtraction and multiplication is
//! checked. All functions accept `n ≤ MAX_COUNT_N`, where the largest value
//! involved (`2^n`) still fits.

use std::fmt;

use crate::error::{Error, Result};
use crate::poset::PosetKind;

/// Largest `n` accepted by the counting functions.
pub const MAX_COUNT_N: usize = 120;

/// An exact count. Arithmetic never wraps.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BigCount(pub u128);

impl BigCount {
    pub const ZERO: BigCount = BigCount(0);
    pub const ONE: BigCount = BigCount(1);

    pub fn value(self) -> u128 {
        self.0
    }

    pub fn checked_add(self, other: BigCount) -> Result<BigCount> {
        self.0
            .checked_add(other.0)
            .map(BigCount)
            .ok_or(Error::Overflow("count addition"))
    }

    pub fn checked_sub(self, other: BigCount) -> Result<BigCount> {
        self.0
            .checked_sub(other.0)
            .map(BigCount)
            .ok_or(Error::Overflow("count subtraction went negative"))
    }

    pub fn checked_mul(self, other: BigCount) -> Result<BigCount> {
        self.0
            .checked_mul(other.0)
            .map(BigCount)
            .ok_or(Error::Overflow("count multiplication"))
    }
}

impl fmt::Display for BigCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<u128> for BigCount {
    fn from(v: u128) -> Self {
        BigCount(v)
    }
}

fn add(a: u128, b: u128) -> Result<u128> {
    a.checked_add(b).ok_or(Error::Overflow("count addition"))
}

fn guard(n: usize, what: &'static str) -> Result<()> {
    if n > MAX_COUNT_N {
        return Err(Error::TooLarge {
            what,
            n: n as u64,
            limit: MAX_COUNT_N as u64,
        });
    }
    Ok(())
}

fn guard_positive(n: usize, what: &'static str) -> Result<()> {
    guard(n, what)?;
    if n == 0 {
        return Err(Error::TooSmall { what, n, min: 1 });
    }
    Ok(())
}

/// Number of elements at each rank.
///
/// For `P`, `R₊` and `R₋` the index is the `P(n)` rank, `0..=n(n+1)/2`. For
/// `Q` it is the shifted rank (`P`-rank minus `n`), `0..=n(n+1)/2 − 2n`, and
/// the profile is empty for `n < 3`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    pub kind: PosetKind,
    pub n: usize,
    pub counts: Vec<u128>,
}

impl RankProfile {
    pub fn total(&self) -> Result<BigCount> {
        self.counts
            .iter()
            .try_fold(0u128, |acc, &c| add(acc, c))
            .map(BigCount)
    }

    pub fn summary(&self) -> ProfileSummary {
        profile_checks(&self.counts)
    }
}

fn triangle(n: usize) -> usize {
    n * (n + 1) / 2
}

/// Coefficients of `∏_{i=1..n} (1 + q^i)`: `counts[t]` is the number of
/// subsets of `[n]` whose elements sum to `t`.
pub fn p_rank_profile(n: usize) -> Result<RankProfile> {
    guard_positive(n, "rank profile")?;
    let mut counts = vec![0u128; triangle(n) + 1];
    counts[0] = 1;
    let mut top = 0;
    for i in 1..=n {
        for t in (0..=top).rev() {
            let c = counts[t];
            if c != 0 {
                counts[t + i] = add(counts[t + i], c)?;
            }
        }
        top += i;
    }
    Ok(RankProfile {
        kind: PosetKind::P,
        n,
        counts,
    })
}

/// Rank profile of `R₊(n)`: walks of `n` unit steps from 0 that never go
/// below 0, binned by the total weight `n + 1 − i` of their up-steps `i`.
pub fn rplus_rank_profile(n: usize) -> Result<RankProfile> {
    guard_positive(n, "R+ rank profile")?;
    let stride = triangle(n) + 1;
    // Weights reachable after `step` steps ending at height `h`: the walk has
    // u = (step + h) / 2 up-steps among weights n, n−1, …, n−step+1.
    let window = |step: usize, h: usize| -> (usize, usize) {
        let u = (step + h) / 2;
        if u == 0 {
            return (0, 0);
        }
        let hi = u * n - u * (u - 1) / 2;
        let smallest = n + 1 - step;
        let lo = u * smallest + u * (u - 1) / 2;
        (lo, hi)
    };
    let mut cur = vec![0u128; (n + 2) * stride];
    let mut next = vec![0u128; (n + 2) * stride];
    cur[0] = 1;
    for i in 1..=n {
        let c = n + 1 - i;
        for h in (i % 2..=i).step_by(2) {
            let (lo, hi) = window(i, h);
            next[h * stride + lo..=h * stride + hi].fill(0);
        }
        // heights after i-1 steps share the parity of i-1
        for h in ((i - 1) % 2..i).step_by(2) {
            let (lo, hi) = window(i - 1, h);
            for w in lo..=hi {
                let val = cur[h * stride + w];
                if val == 0 {
                    continue;
                }
                if h >= 1 {
                    let dst = (h - 1) * stride + w;
                    next[dst] = add(next[dst], val)?;
                }
                let dst = (h + 1) * stride + w + c;
                next[dst] = add(next[dst], val)?;
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    let mut counts = vec![0u128; stride];
    for h in (n % 2..=n).step_by(2) {
        let (lo, hi) = window(n, h);
        for w in lo..=hi {
            counts[w] = add(counts[w], cur[h * stride + w])?;
        }
    }
    Ok(RankProfile {
        kind: PosetKind::RPlus,
        n,
        counts,
    })
}

/// Rank profile of `R₋(n)`, the mirror image of `R₊(n)`.
pub fn rminus_rank_profile(n: usize) -> Result<RankProfile> {
    let mut p = rplus_rank_profile(n)?;
    p.counts.reverse();
    p.kind = PosetKind::RMinus;
    Ok(p)
}

/// Rank profile of `Q(n)` as `P − R₊ − R₋` level by level, re-indexed so
/// the lowest `Q` rank is 0.
pub fn q_rank_profile(n: usize) -> Result<RankProfile> {
    let unshifted = q_rank_profile_unshifted(n)?;
    Ok(shift_q_profile(n, unshifted))
}

/// Drops the empty `P`-rank levels below `n` and above `n(n+1)/2 − n`.
fn shift_q_profile(n: usize, unshifted: Vec<u128>) -> RankProfile {
    let r = triangle(n);
    let counts = if n < 3 {
        debug_assert!(unshifted.iter().all(|&c| c == 0));
        Vec::new()
    } else {
        debug_assert!(unshifted[..n].iter().all(|&c| c == 0));
        debug_assert!(unshifted[r - n + 1..].iter().all(|&c| c == 0));
        unshifted[n..=r - n].to_vec()
    };
    RankProfile {
        kind: PosetKind::Q,
        n,
        counts,
    }
}

/// `Q(n)` level counts indexed by the `P(n)` rank.
pub fn q_rank_profile_unshifted(n: usize) -> Result<Vec<u128>> {
    let p = p_rank_profile(n)?;
    let plus = rplus_rank_profile(n)?;
    q_levels(&p, &plus)
}

fn q_levels(p: &RankProfile, plus: &RankProfile) -> Result<Vec<u128>> {
    let r = triangle(p.n);
    p.counts
        .iter()
        .enumerate()
        .map(|(rho, &total)| {
            let minus = plus.counts[r - rho];
            total
                .checked_sub(plus.counts[rho])
                .and_then(|x| x.checked_sub(minus))
                .ok_or(Error::Overflow("Q level count went negative"))
        })
        .collect()
}

/// The `P`, `R₊`, `R₋` and `Q` profiles of one `n`, sharing the work.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AllProfiles {
    pub p: RankProfile,
    pub rplus: RankProfile,
    pub rminus: RankProfile,
    /// `Q(n)` counts indexed by `P(n)` rank.
    pub q_unshifted: Vec<u128>,
    pub q: RankProfile,
}

pub fn all_profiles(n: usize) -> Result<AllProfiles> {
    let p = p_rank_profile(n)?;
    let rplus = rplus_rank_profile(n)?;
    let q_unshifted = q_levels(&p, &rplus)?;
    let q = shift_q_profile(n, q_unshifted.clone());
    let mut rminus = rplus.clone();
    rminus.counts.reverse();
    rminus.kind = PosetKind::RMinus;
    Ok(AllProfiles {
        p,
        rplus,
        rminus,
        q_unshifted,
        q,
    })
}

/// `N([n], ⌊n(n+1)/4⌋)`, the middle level of `P(n)` and its width.
pub fn width_value(n: usize) -> Result<BigCount> {
    let p = p_rank_profile(n)?;
    Ok(BigCount(p.counts[triangle(n) / 2]))
}

/// `C(n, k)` exactly.
pub fn binomial(n: usize, k: usize) -> Result<BigCount> {
    guard(n, "binomial")?;
    if k > n {
        return Ok(BigCount::ZERO);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc = C(n, i) here, so acc·(n−i) is divisible by i+1
        acc = acc
            .checked_mul((n - i) as u128)
            .ok_or(Error::Overflow("binomial"))?
            / (i as u128 + 1);
    }
    Ok(BigCount(acc))
}

/// `2^n − 2·C(n, ⌊n/2⌋)`.
pub fn q_size(n: usize) -> Result<BigCount> {
    guard_positive(n, "size of Q(n)")?;
    let two = BigCount(2);
    let pow = BigCount(1u128 << n);
    pow.checked_sub(two.checked_mul(binomial(n, n / 2)?)?)
}

/// `C_m = C(2m, m) / (m + 1)`.
pub fn catalan(m: usize) -> Result<BigCount> {
    guard(2 * m, "Catalan number")?;
    Ok(BigCount(binomial(2 * m, m)?.0 / (m as u128 + 1)))
}

/// `X_n` from the recurrence `X_0 = 1`, `X_n = 2X_{n−1} − C_{(n−1)/2}` for
/// odd `n` and `2X_{n−1}` for even `n`.
pub fn ballot_recurrence(n: usize) -> Result<BigCount> {
    guard(n, "ballot count")?;
    let mut x = BigCount::ONE;
    for i in 1..=n {
        x = x.checked_mul(BigCount(2))?;
        if i % 2 == 1 {
            x = x.checked_sub(catalan((i - 1) / 2)?)?;
        }
    }
    Ok(x)
}

/// Number of `n`-step walks from 0 that never go below 0, i.e. `#R₊(n)`.
/// Equal to `C(n, ⌊n/2⌋)`.
pub fn ballot_count(n: usize) -> Result<BigCount> {
    let x = ballot_recurrence(n)?;
    debug_assert_eq!(x, binomial(n, n / 2)?);
    Ok(x)
}

/// Closed-form height (largest chain size).
pub fn height_formula(n: usize, kind: PosetKind) -> Result<u64> {
    let n64 = n as u64;
    match kind {
        PosetKind::P => Ok(n64 * (n64 + 1) / 2 + 1),
        PosetKind::Q => {
            if n < 3 {
                return Err(Error::TooSmall {
                    what: "height of Q(n)",
                    n,
                    min: 3,
                });
            }
            if n <= 7 {
                let ell = (n64 - 1) / 2;
                // n(n−1)/2 − (n − 3ℓ/2)(ℓ+1) + 1, kept in integers
                Ok((n64 * (n64 - 1) - (2 * n64 - 3 * ell) * (ell + 1)) / 2 + 1)
            } else {
                Ok((n64 - 2) * (n64 - 3) / 2 + 1)
            }
        }
        other => Err(Error::UnsupportedKind(other.to_string())),
    }
}

/// Symmetry, unimodality and peak of a level sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProfileSummary {
    pub symmetric: bool,
    pub unimodal: bool,
    pub max_level: BigCount,
}

/// Checks `s_i = s_{r−i}` and `s_0 ≤ … ≤ s_j ≥ … ≥ s_r` after dropping
/// empty levels at both ends.
pub fn profile_checks(counts: &[u128]) -> ProfileSummary {
    let start = counts.iter().position(|&c| c != 0).unwrap_or(counts.len());
    let end = counts.iter().rposition(|&c| c != 0).map_or(start, |e| e + 1);
    let levels = &counts[start..end];
    let symmetric = levels.iter().eq(levels.iter().rev());
    let mut i = 0;
    while i + 1 < levels.len() && levels[i] <= levels[i + 1] {
        i += 1;
    }
    while i + 1 < levels.len() && levels[i] >= levels[i + 1] {
        i += 1;
    }
    let unimodal = i + 1 >= levels.len();
    ProfileSummary {
        symmetric,
        unimodal,
        max_level: BigCount(levels.iter().copied().max().unwrap_or(0)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rank histogram by enumerating subsets.
    fn subset_sum_histogram(n: usize) -> Vec<u128> {
        let mut h = vec![0u128; triangle(n) + 1];
        for mask in 0u32..1 << n {
            let s: usize = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).sum();
            h[s] += 1;
        }
        h
    }

    #[test]
    fn p_profile_examples() {
        assert_eq!(p_rank_profile(5).unwrap().counts[7], 3);
        assert_eq!(p_rank_profile(3).unwrap().counts, vec![1, 1, 1, 2, 1, 1, 1]);
        for n in 1..=40 {
            let c = p_rank_profile(n).unwrap().counts;
            assert_eq!(c[0], 1);
            assert_eq!(*c.last().unwrap(), 1);
        }
        for n in 1..=12 {
            assert_eq!(p_rank_profile(n).unwrap().counts, subset_sum_histogram(n));
        }
    }

    #[test]
    fn width_examples() {
        assert_eq!(width_value(5).unwrap(), BigCount(3));
        assert_eq!(width_value(6).unwrap(), BigCount(5));
        assert_eq!(width_value(3).unwrap(), BigCount(2));
    }

    #[test]
    fn q_size_examples() {
        let q = |n| q_size(n).unwrap().0;
        assert_eq!((q(4), q(5), q(6)), (4, 12, 24));
        assert_eq!((q(1), q(2), q(3)), (0, 0, 2));
        assert!(q_size(121).is_err());
        assert!(q_size(0).is_err());
    }

    #[test]
    fn catalan_matches_path_count() {
        // 2m-step walks from 0 back to 0 that never dip below 0
        for m in 0..=6usize {
            let steps = 2 * m;
            let count = (0u32..1 << steps)
                .filter(|mask| {
                    let mut h = 0i32;
                    (0..steps).all(|i| {
                        h += if mask >> i & 1 == 1 { 1 } else { -1 };
                        h >= 0
                    }) && h == 0
                })
                .count() as u128;
            assert_eq!(catalan(m).unwrap().0, count, "m = {m}");
        }
        assert_eq!(catalan(2).unwrap().0, 2);
        assert_eq!(catalan(3).unwrap().0, 5);
    }

    #[test]
    fn ballot_examples() {
        assert_eq!(ballot_count(4).unwrap().0, 6);
        assert_eq!(binomial(4, 2).unwrap().0, 6);
        let x5 = ballot_count(4).unwrap().0 * 2 - catalan(2).unwrap().0;
        assert_eq!(x5, 10);
        assert_eq!(ballot_count(5).unwrap().0, 10);
        assert_eq!(ballot_count(0).unwrap().0, 1);
    }

    #[test]
    fn rplus_examples() {
        let p = rplus_rank_profile(2).unwrap();
        assert_eq!(p.counts, vec![0, 0, 1, 1]);
        let p = rplus_rank_profile(5).unwrap();
        assert_eq!(p.total().unwrap().0, 10);
        assert_eq!(p.counts.iter().position(|&c| c != 0), Some(9));
    }

    #[test]
    fn q_profile_examples() {
        assert_eq!(q_rank_profile(3).unwrap().counts, vec![2]);
        let q5 = q_rank_profile(5).unwrap();
        assert_eq!(q5.total().unwrap().0, 12);
        assert!(q5.summary().symmetric);
        assert!(q_rank_profile(1).unwrap().counts.is_empty());
        assert!(q_rank_profile(2).unwrap().counts.is_empty());
    }

    #[test]
    fn height_examples() {
        assert_eq!(height_formula(5, PosetKind::Q).unwrap(), 5);
        assert_eq!(height_formula(8, PosetKind::Q).unwrap(), 16);
        assert_eq!(height_formula(3, PosetKind::Q).unwrap(), 1);
        assert_eq!(height_formula(4, PosetKind::Q).unwrap(), 2);
        assert_eq!(height_formula(6, PosetKind::P).unwrap(), 22);
        assert!(matches!(
            height_formula(2, PosetKind::Q),
            Err(Error::TooSmall { .. })
        ));
        assert!(height_formula(5, PosetKind::RPlus).is_err());
    }

    #[test]
    fn profile_check_examples() {
        let s = p_rank_profile(6).unwrap().summary();
        assert!(s.symmetric && s.unimodal);
        assert_eq!(s.max_level, BigCount(5));
        let s = profile_checks(&[1, 2, 1, 2, 1]);
        assert!(!s.unimodal);
        assert!(s.symmetric);
        let s = profile_checks(&[0, 0, 1, 3, 2, 0]);
        assert!(s.unimodal && !s.symmetric);
        assert_eq!(s.max_level, BigCount(3));
        let s = profile_checks(&[]);
        assert!(s.unimodal && s.symmetric);
    }

    #[test]
    fn q21_is_unimodal() {
        assert!(q_rank_profile(21).unwrap().summary().unimodal);
    }

    #[test]
    fn limits() {
        assert!(p_rank_profile(120).is_ok());
        assert!(matches!(p_rank_profile(121), Err(Error::TooLarge { .. })));
        assert!(matches!(rplus_rank_profile(121), Err(Error::TooLarge { .. })));
        assert!(matches!(ballot_count(121), Err(Error::TooLarge { .. })));
        assert!(matches!(width_value(121), Err(Error::TooLarge { .. })));
        assert!(matches!(catalan(61), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn bigcount_arithmetic_is_checked() {
        assert!(BigCount(u128::MAX).checked_add(BigCount::ONE).is_err());
        assert!(BigCount::ZERO.checked_sub(BigCount::ONE).is_err());
        assert!(BigCount(u128::MAX).checked_mul(BigCount(2)).is_err());
        assert_eq!(BigCount(2).checked_mul(BigCount(3)).unwrap(), BigCount(6));
    }
}
