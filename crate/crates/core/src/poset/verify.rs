//! Exhaustive structural checks on `P(n)` and `Q(n)`.

use std::fmt;
use std::str::FromStr;

use super::{build_hasse_unbounded, extremes, membership, p_rank, transitive_reduction, PosetKind};
use crate::error::{Error, Result};
use crate::sign::SignVector;

/// A named structural check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Operator covers equal the brute-force transitive reduction (P and Q).
    Covers,
    /// `f` is an order isomorphism onto `M(n)` with the dominance order.
    Iso,
    /// `v ⪯ w ⟺ −w ⪯ −v`.
    Symmetry,
    /// `−m_k ≺ m_k'` for all `k ≠ k'` (needs `n ≥ 4`).
    Chain,
    /// Each minimal element lies below exactly `2^(n−1)` vectors and below
    /// `v` or `−v` for every `v`.
    Compara,
    /// Every cover in `Q(n)` raises rank by exactly one.
    Graded,
    /// Formula extremes equal the sinks and sources of the `Q(n)` diagram.
    Extremes,
}

impl Check {
    pub const ALL: [Check; 7] = [
        Check::Covers,
        Check::Iso,
        Check::Symmetry,
        Check::Chain,
        Check::Compara,
        Check::Graded,
        Check::Extremes,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Covers => "covers",
            Check::Iso => "iso",
            Check::Symmetry => "symmetry",
            Check::Chain => "chain",
            Check::Compara => "compara",
            Check::Graded => "graded",
            Check::Extremes => "extremes",
        }
    }

    /// Largest `n` the check runs at without forcing.
    pub fn max_n(self) -> usize {
        match self {
            Check::Covers | Check::Iso | Check::Symmetry => 10,
            Check::Chain | Check::Compara | Check::Graded | Check::Extremes => 16,
        }
    }

    fn min_n(self) -> usize {
        match self {
            Check::Chain => 4,
            Check::Compara | Check::Extremes => 3,
            _ => 1,
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::UnknownCheck(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CheckStatus {
    Pass,
    Fail { counterexample: String },
    Skipped { reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckOutcome {
    pub check: Check,
    pub status: CheckStatus,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub n: usize,
    pub outcomes: Vec<CheckOutcome>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.outcomes
            .iter()
            .all(|o| !matches!(o.status, CheckStatus::Fail { .. }))
    }
}

/// Runs the requested checks at size `n`, in the order given.
///
/// Checks beyond their size limit fail with `TooLarge` unless `force` is
/// set. Checks below their minimum size (e.g. `chain` at `n = 3`) are
/// reported as skipped.
pub fn verify_structure(n: usize, checks: &[Check], force: bool) -> Result<VerifyReport> {
    if n == 0 || n > 63 {
        return Err(Error::InvalidLength(n));
    }
    if !force {
        if let Some(c) = checks.iter().find(|c| n > c.max_n()) {
            return Err(Error::TooLarge {
                what: c.name(),
                n: n as u64,
                limit: c.max_n() as u64,
            });
        }
    }
    let mut outcomes = Vec::with_capacity(checks.len());
    for &check in checks {
        let status = if n < check.min_n() {
            CheckStatus::Skipped {
                reason: format!("requires n >= {}", check.min_n()),
            }
        } else {
            let result = match check {
                Check::Covers => check_covers(n),
                Check::Iso => check_iso(n),
                Check::Symmetry => check_symmetry(n),
                Check::Chain => check_chain(n),
                Check::Compara => check_compara(n),
                Check::Graded => check_graded(n),
                Check::Extremes => check_extremes(n),
            }?;
            match result {
                None => CheckStatus::Pass,
                Some(counterexample) => CheckStatus::Fail { counterexample },
            }
        };
        outcomes.push(CheckOutcome { check, status });
    }
    Ok(VerifyReport { n, outcomes })
}

type Outcome = Result<Option<String>>;

fn all_vectors(n: usize) -> impl Iterator<Item = SignVector> {
    (0..1u64 << n).map(move |b| SignVector::from_bits_unchecked(n, b))
}

fn check_covers(n: usize) -> Outcome {
    for kind in [PosetKind::P, PosetKind::Q] {
        let dag = build_hasse_unbounded(n, kind)?;
        let brute = transitive_reduction(dag.nodes(), |a, b| a.leq_same_len(b));
        if dag.edge_indices() != brute.as_slice() {
            let nodes = dag.nodes();
            let ops: std::collections::BTreeSet<_> = dag.edge_indices().iter().collect();
            let red: std::collections::BTreeSet<_> = brute.iter().collect();
            let diff = ops.symmetric_difference(&red).next().expect("sets differ");
            return Ok(Some(format!(
                "{kind}({n}): edge {} -> {} in only one of operator covers / reduction",
                nodes[diff.0], nodes[diff.1]
            )));
        }
    }
    Ok(None)
}

fn check_iso(n: usize) -> Outcome {
    let images: Vec<_> = all_vectors(n).map(|v| (v, v.iso_f())).collect();
    let mut seen = std::collections::HashSet::new();
    for (v, img) in &images {
        if !seen.insert(img.indices().to_vec()) {
            return Ok(Some(format!("f is not injective at {v}")));
        }
    }
    for (v, fv) in &images {
        for (w, fw) in &images {
            if v.leq_same_len(w) != fv.dominance_leq(fw) {
                return Ok(Some(format!(
                    "{v} vs {w}: order {} but dominance {}",
                    v.leq_same_len(w),
                    fv.dominance_leq(fw)
                )));
            }
        }
    }
    Ok(None)
}

fn check_symmetry(n: usize) -> Outcome {
    let all: Vec<_> = all_vectors(n).collect();
    for v in &all {
        for w in &all {
            if v.leq_same_len(w) != w.negate().leq_same_len(&v.negate()) {
                return Ok(Some(format!("{v} vs {w}")));
            }
        }
    }
    Ok(None)
}

fn check_chain(n: usize) -> Outcome {
    let e = extremes(n)?;
    for (k, lo) in e.minimal.iter().enumerate() {
        for (k2, hi) in e.maximal.iter().enumerate() {
            if k != k2 && !(lo != hi && lo.leq_same_len(hi)) {
                return Ok(Some(format!("-m_{k} = {lo} is not below m_{k2} = {hi}")));
            }
        }
    }
    Ok(None)
}

fn check_compara(n: usize) -> Outcome {
    let e = extremes(n)?;
    let expected = 1u64 << (n - 1);
    for (k, low) in e.minimal.iter().enumerate() {
        let mut above = 0u64;
        for v in all_vectors(n) {
            let up = low.leq_same_len(&v);
            if up {
                above += 1;
            }
            if !up && !low.leq_same_len(&v.negate()) {
                return Ok(Some(format!("-m_{k} = {low} is below neither {v} nor its negation")));
            }
        }
        if above != expected {
            return Ok(Some(format!(
                "-m_{k} = {low} lies below {above} vectors, expected {expected}"
            )));
        }
    }
    Ok(None)
}

fn check_graded(n: usize) -> Outcome {
    let dag = build_hasse_unbounded(n, PosetKind::Q)?;
    for (v, w) in dag.edges() {
        if membership(&v) != PosetKind::Q || membership(&w) != PosetKind::Q {
            return Ok(Some(format!("edge {v} -> {w} leaves Q({n})")));
        }
        if p_rank(&w) != p_rank(&v) + 1 {
            return Ok(Some(format!("edge {v} -> {w} does not raise rank by one")));
        }
    }
    Ok(None)
}

fn check_extremes(n: usize) -> Outcome {
    let dag = build_hasse_unbounded(n, PosetKind::Q)?;
    let e = extremes(n)?;
    let mut want_max = e.maximal.clone();
    want_max.sort();
    let mut want_min = e.minimal.clone();
    want_min.sort();
    let got_max = dag.maximal_nodes();
    let got_min = dag.minimal_nodes();
    if got_max != want_max {
        return Ok(Some(format!("maximal elements {got_max:?}, formula {want_max:?}")));
    }
    if got_min != want_min {
        return Ok(Some(format!("minimal elements {got_min:?}, formula {want_min:?}")));
    }
    Ok(None)
}
