//! The posets `P(n)`, `Q(n)`, `R₊(n)` and `R₋(n)` on sign vectors.
//!
//! `P(n)` is every sign vector under the prefix-sum order. `R₊(n)` and
//! `R₋(n)` are the vectors strictly above and strictly below the zero vector,
//! and `Q(n)` is what is left: the vectors incomparable with zero.

mod hasse;
mod verify;

pub use hasse::{
    build_hasse, build_hasse_unbounded, transitive_reduction, HasseDag, MAX_DAG_N_P,
    MAX_DAG_N_Q, MAX_WIDTH_NODES,
};
pub use verify::{verify_structure, Check, CheckOutcome, CheckStatus, VerifyReport};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::sign::{SignVector, MAX_LEN};

/// Largest `n` accepted by [`enumerate`].
pub const MAX_ENUM_N: usize = 24;

/// Which of the related posets an operation refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PosetKind {
    P,
    Q,
    RPlus,
    RMinus,
}

impl PosetKind {
    /// The kind whose elements are the negations of this kind's elements.
    pub fn mirror(self) -> PosetKind {
        match self {
            PosetKind::RPlus => PosetKind::RMinus,
            PosetKind::RMinus => PosetKind::RPlus,
            other => other,
        }
    }

    pub fn contains(self, v: &SignVector) -> bool {
        self == PosetKind::P || membership(v) == self
    }
}

impl fmt::Display for PosetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PosetKind::P => "P",
            PosetKind::Q => "Q",
            PosetKind::RPlus => "R+",
            PosetKind::RMinus => "R-",
        })
    }
}

impl FromStr for PosetKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s {
            "P" | "p" => Ok(PosetKind::P),
            "Q" | "q" => Ok(PosetKind::Q),
            "R+" | "r+" | "RPlus" | "rplus" => Ok(PosetKind::RPlus),
            "R-" | "r-" | "RMinus" | "rminus" => Ok(PosetKind::RMinus),
            other => Err(format!("unknown poset `{other}` (expected P, Q, R+ or R-)")),
        }
    }
}

fn not_in(v: &SignVector, kind: PosetKind) -> Error {
    Error::NotInPoset {
        vector: v.to_string(),
        kind: kind.to_string(),
    }
}

/// Addition operator `A^(k)`: sets entry `k` (1-based) from `-1` to `+1`.
pub fn apply_addition(v: &SignVector, k: usize) -> Result<SignVector> {
    if k == 0 || k > v.len() || v.entry(k) != -1 {
        return Err(Error::OperatorUndefined(format!("A^({k}) on {v}")));
    }
    Ok(SignVector::from_bits_unchecked(v.len(), v.bits() | 1 << (k - 1)))
}

/// Swap operator `S^(j,k)`: exchanges a `-1` at `j` with a `+1` at `k > j`.
pub fn apply_swap(v: &SignVector, j: usize, k: usize) -> Result<SignVector> {
    if j == 0 || j >= k || k > v.len() || v.entry(j) != -1 || v.entry(k) != 1 {
        return Err(Error::OperatorUndefined(format!("S^({j},{k}) on {v}")));
    }
    let flip = 1u64 << (j - 1) | 1u64 << (k - 1);
    Ok(SignVector::from_bits_unchecked(v.len(), v.bits() ^ flip))
}

/// Covers of `v` in `P(n)`, ascending by bitmask: `A^(n) v` when the last
/// entry is `-1`, plus `S^(k,k+1) v` for every adjacent `(-1, +1)` pair.
pub(crate) fn p_upper_covers(v: &SignVector) -> impl Iterator<Item = SignVector> + '_ {
    let n = v.len();
    let bits = v.bits();
    let addition = (bits >> (n - 1) & 1 == 0).then(|| bits | 1 << (n - 1));
    // bit k-1 set: entry k is -1 and entry k+1 is +1
    let mut pairs = !bits & (bits >> 1) & ((1u64 << (n - 1)) - 1);
    let swaps = std::iter::from_fn(move || {
        if pairs == 0 {
            return None;
        }
        let k = pairs.trailing_zeros();
        pairs &= pairs - 1;
        Some(bits ^ (0b11 << k))
    });
    let mut all: Vec<u64> = swaps.chain(addition).collect();
    all.sort_unstable();
    all.into_iter()
        .map(move |b| SignVector::from_bits_unchecked(n, b))
}

/// Elements covering `v` within the poset named by `kind`, in ascending
/// bitmask order. Covers in `Q`, `R₊` and `R₋` are the `P` covers that stay
/// inside the poset.
pub fn upper_covers(v: &SignVector, kind: PosetKind) -> Result<Vec<SignVector>> {
    if !kind.contains(v) {
        return Err(not_in(v, kind));
    }
    Ok(p_upper_covers(v).filter(|w| kind.contains(w)).collect())
}

/// Elements covered by `v`, obtained as negated upper covers of `-v`.
pub fn lower_covers(v: &SignVector, kind: PosetKind) -> Result<Vec<SignVector>> {
    let mut out: Vec<SignVector> = upper_covers(&v.negate(), kind.mirror())?
        .into_iter()
        .map(|w| w.negate())
        .collect();
    out.sort();
    Ok(out)
}

/// Classifies `v` as `RPlus` (all prefix sums ≥ 0), `RMinus` (all ≤ 0) or
/// `Q` (neither). Never returns `P`.
pub fn membership(v: &SignVector) -> PosetKind {
    let (mut lo, mut hi, mut acc) = (0i32, 0i32, 0i32);
    for i in 1..=v.len() {
        acc += v.entry(i) as i32;
        lo = lo.min(acc);
        hi = hi.max(acc);
    }
    if lo >= 0 {
        PosetKind::RPlus
    } else if hi <= 0 {
        PosetKind::RMinus
    } else {
        PosetKind::Q
    }
}

/// Rank of `v` in `P(n)`: `(v·c₀ + n(n+1)/2) / 2` with `c₀ = (n, …, 1)`,
/// which is the sum of `n + 1 - i` over the `+1` positions `i`.
pub fn p_rank(v: &SignVector) -> i64 {
    let n = v.len() as i64;
    (1..=v.len())
        .filter(|&i| v.entry(i) == 1)
        .map(|i| n + 1 - i as i64)
        .sum()
}

/// Rank within `kind`. `Q(n)` is shifted down by `n` so its minimum rank is
/// 0; the other kinds use the `P(n)` rank.
pub fn rank(v: &SignVector, kind: PosetKind) -> Result<i64> {
    if !kind.contains(v) {
        return Err(not_in(v, kind));
    }
    let r = p_rank(v);
    Ok(match kind {
        PosetKind::Q => r - v.len() as i64,
        _ => r,
    })
}

/// Weight vector `c₀ = (n, n−1, …, 1)` of the rank function.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PosetContext {
    pub n: usize,
    pub c0: Vec<i64>,
}

impl PosetContext {
    pub fn new(n: usize) -> Self {
        PosetContext {
            n,
            c0: (1..=n).rev().map(|i| i as i64).collect(),
        }
    }
}

/// Maximal and minimal elements of `Q(n)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Extremes {
    pub n: usize,
    pub ell: usize,
    /// `m_k` for `k = 0..=ell`.
    pub maximal: Vec<SignVector>,
    /// `-m_k` for `k = 0..=ell`.
    pub minimal: Vec<SignVector>,
}

/// `m_k = (+1 × k, −1 × (k+1), +1 × (n−2k−1))`.
pub fn m_k(n: usize, k: usize) -> SignVector {
    debug_assert!(2 * k < n);
    let head = (1u64 << k) - 1;
    let tail = if 2 * k + 1 == n {
        0
    } else {
        let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        full & !((1u64 << (2 * k + 1)) - 1)
    };
    SignVector::from_bits_unchecked(n, head | tail)
}

pub fn extremes(n: usize) -> Result<Extremes> {
    if n < 3 {
        return Err(Error::TooSmall {
            what: "extremes of Q(n)",
            n,
            min: 3,
        });
    }
    if n > MAX_LEN {
        return Err(Error::InvalidLength(n));
    }
    let ell = (n - 1) / 2;
    let maximal: Vec<SignVector> = (0..=ell).map(|k| m_k(n, k)).collect();
    let minimal = maximal.iter().map(SignVector::negate).collect();
    Ok(Extremes {
        n,
        ell,
        maximal,
        minimal,
    })
}

/// Meet and join in the lattice `P(n)`: pointwise min and max of the
/// prefix-sum walks.
pub fn meet_join(v: &SignVector, w: &SignVector) -> Result<(SignVector, SignVector)> {
    if v.len() != w.len() {
        return Err(Error::LengthMismatch {
            left: v.len(),
            right: w.len(),
        });
    }
    let n = v.len();
    let (mut a, mut b) = (0i32, 0i32);
    let (mut lo, mut hi) = (0i32, 0i32);
    let (mut meet, mut join) = (0u64, 0u64);
    for i in 1..=n {
        a += v.entry(i) as i32;
        b += w.entry(i) as i32;
        let (nlo, nhi) = (a.min(b), a.max(b));
        if nlo > lo {
            meet |= 1 << (i - 1);
        }
        if nhi > hi {
            join |= 1 << (i - 1);
        }
        lo = nlo;
        hi = nhi;
    }
    Ok((
        SignVector::from_bits_unchecked(n, meet),
        SignVector::from_bits_unchecked(n, join),
    ))
}

fn check_enum_len(n: usize, limit: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidLength(0));
    }
    if n > limit {
        return Err(Error::TooLarge {
            what: "enumeration",
            n: n as u64,
            limit: limit as u64,
        });
    }
    Ok(())
}

/// Members of `kind` in ascending bitmask order, for `n ≤ MAX_ENUM_N`.
pub fn enumerate(n: usize, kind: PosetKind) -> Result<impl Iterator<Item = SignVector>> {
    check_enum_len(n, MAX_ENUM_N)?;
    Ok(enumerate_raw(n, kind))
}

/// As [`enumerate`] without the size guard (still capped by the bitmask
/// width; anything near 64 will never finish).
pub fn enumerate_unbounded(
    n: usize,
    kind: PosetKind,
) -> Result<impl Iterator<Item = SignVector>> {
    check_enum_len(n, 63)?;
    Ok(enumerate_raw(n, kind))
}

fn enumerate_raw(n: usize, kind: PosetKind) -> impl Iterator<Item = SignVector> {
    (0..1u64 << n)
        .map(move |b| SignVector::from_bits_unchecked(n, b))
        .filter(move |v| kind.contains(v))
}
