//! Sign-vector posets and exact number partitioning.
//!
//! A subset `S ⊆ [n]` is encoded as the sign vector `p(S)` with `+1` at the
//! members. Ordering sign vectors by their prefix sums gives the lattice
//! `P(n)`; removing everything comparable with the zero vector leaves
//! `Q(n)`, which contains an optimal partition of every instance. This crate
//! materializes those posets, counts their levels exactly, and solves the
//! partition problem with searches over `Q(n)` next to brute-force and DP
//! oracles.
//!
//! ```
//! use qposet_core::{solve, Algorithm, Instance};
//!
//! let inst = Instance::normalize(&[3, 10, 2, 1]).unwrap();
//! let sol = solve(&inst, Algorithm::Auto).unwrap();
//! assert_eq!(sol.abs_delta, 4);
//! assert_eq!(sol.subset.indices(), &[2]);
//! ```

pub mod counting;
pub mod error;
pub mod instance;
pub mod poset;
pub mod sign;
pub mod solver;

pub use counting::{BigCount, ProfileSummary, RankProfile};
pub use error::{Error, Result};
pub use instance::{delta, diff_vector, DiffVector, Instance};
pub use poset::{Extremes, HasseDag, PosetKind};
pub use sign::{PrefixSums, SignVector, SubsetRef};
pub use solver::{solve, solve_with, Algorithm, Guard, Solution};
