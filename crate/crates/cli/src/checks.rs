//! Check selection and the checks that live outside the structural suite.

use std::fmt;

use qposet_core::counting::{
    p_rank_profile, q_rank_profile, rminus_rank_profile, rplus_rank_profile,
};
use qposet_core::poset::{enumerate_unbounded, membership, p_rank, verify_structure, Check, CheckStatus};
use qposet_core::solver::{solve_brute, solve_corollary, solve_min_fastpath, Algorithm};
use qposet_core::{solve, Error, Instance, PosetKind};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// Largest `n` for the `profile` check (exhaustive enumeration of `P(n)`).
pub const PROFILE_MAX_N: usize = 14;
/// Largest `n` for the `solvers` check (brute-force oracle).
pub const SOLVERS_MAX_N: usize = 16;
/// Random instances per `solvers` run.
const SOLVER_SAMPLES: usize = 50;

/// A check runnable from `verify`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CliCheck {
    Structure(Check),
    /// Counting profiles against enumeration.
    Profile,
    /// Every solver against the brute-force oracle on seeded instances.
    Solvers,
}

impl CliCheck {
    pub fn all() -> Vec<CliCheck> {
        Check::ALL
            .into_iter()
            .map(CliCheck::Structure)
            .chain([CliCheck::Profile, CliCheck::Solvers])
            .collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            CliCheck::Structure(c) => c.name(),
            CliCheck::Profile => "profile",
            CliCheck::Solvers => "solvers",
        }
    }

    pub fn max_n(self) -> usize {
        match self {
            CliCheck::Structure(c) => c.max_n(),
            CliCheck::Profile => PROFILE_MAX_N,
            CliCheck::Solvers => SOLVERS_MAX_N,
        }
    }
}

impl fmt::Display for CliCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses `all` or a comma-separated list of check names. Returns the checks
/// and whether `all` was requested.
pub fn parse_checks(list: &str) -> Result<(Vec<CliCheck>, bool), Error> {
    if list.trim() == "all" {
        return Ok((CliCheck::all(), true));
    }
    let mut checks = Vec::new();
    for name in list.split(',').map(str::trim) {
        let check = match name {
            "profile" => CliCheck::Profile,
            "solvers" => CliCheck::Solvers,
            other => CliCheck::Structure(other.parse()?),
        };
        if !checks.contains(&check) {
            checks.push(check);
        }
    }
    Ok((checks, false))
}

/// Runs one check at size `n`. Size guards are the caller's concern.
pub fn run(check: CliCheck, n: usize) -> Result<CheckStatus, Error> {
    let failure = match check {
        CliCheck::Structure(c) => {
            let report = verify_structure(n, &[c], true)?;
            return Ok(report.outcomes.into_iter().next().expect("one check requested").status);
        }
        CliCheck::Profile => check_profile(n)?,
        CliCheck::Solvers => check_solvers(n)?,
    };
    Ok(match failure {
        None => CheckStatus::Pass,
        Some(counterexample) => CheckStatus::Fail { counterexample },
    })
}

fn histogram(levels: usize, ranks: impl Iterator<Item = usize>) -> Vec<u128> {
    let mut h = vec![0u128; levels];
    for r in ranks {
        h[r] += 1;
    }
    h
}

/// Level counts from the closed-form DPs against direct enumeration.
fn check_profile(n: usize) -> Result<Option<String>, Error> {
    let levels = n * (n + 1) / 2 + 1;
    let all: Vec<_> = enumerate_unbounded(n, PosetKind::P)?.collect();
    let by_kind = |kind: PosetKind| {
        histogram(
            levels,
            all.iter()
                .filter(|v| kind == PosetKind::P || membership(v) == kind)
                .map(|v| p_rank(v) as usize),
        )
    };
    let computed = [
        (PosetKind::P, p_rank_profile(n)?.counts),
        (PosetKind::RPlus, rplus_rank_profile(n)?.counts),
        (PosetKind::RMinus, rminus_rank_profile(n)?.counts),
    ];
    for (kind, counts) in computed {
        let expected = by_kind(kind);
        if counts != expected {
            return Ok(Some(format!("{kind}({n}) profile {counts:?}, enumeration {expected:?}")));
        }
    }
    // Q(n) occupies P ranks n..=r-n, reported from Q rank 0.
    let q = q_rank_profile(n)?.counts;
    let expected = if n < 3 {
        Vec::new()
    } else {
        by_kind(PosetKind::Q)[n..levels - n].to_vec()
    };
    if q != expected {
        return Ok(Some(format!("Q({n}) profile {q:?}, enumeration {expected:?}")));
    }
    Ok(None)
}

/// Every named algorithm reaches the brute-force optimum, and every reported
/// subset re-evaluates to the reported Δ on the raw input.
fn check_solvers(n: usize) -> Result<Option<String>, Error> {
    let mut rng = StdRng::seed_from_u64(n as u64);
    for _ in 0..SOLVER_SAMPLES {
        let raw: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=1000)).collect();
        let inst = Instance::normalize(&raw)?;
        let oracle = solve_brute(&inst)?.abs_delta;
        let mut answers = Vec::new();
        // the Q(n)-based solvers need n >= 3
        for algo in Algorithm::ALL {
            if n >= 3 || matches!(algo, Algorithm::Brute | Algorithm::Dp | Algorithm::Auto) {
                answers.push(solve(&inst, algo)?);
            }
        }
        if n >= 3 {
            answers.extend(solve_min_fastpath(&inst)?);
            answers.extend(solve_corollary(&inst)?);
        }
        for s in answers {
            let inside: i64 = s.subset.indices().iter().map(|&i| raw[i - 1]).sum();
            let recomputed = 2 * inside - inst.total();
            if s.abs_delta != oracle || s.delta != recomputed {
                return Ok(Some(format!(
                    "{} on {raw:?}: |Δ| {} (brute {oracle}), Δ {} re-evaluates to {recomputed}",
                    s.algorithm, s.abs_delta, s.delta
                )));
            }
        }
    }
    Ok(None)
}
