//! Exact-arithmetic toolkit for the unitary Virasoro minimal series in prime
//! characteristic.
//!
//! The crate is organised in layers:
//!
//! - [`exact`]: rationals, prime fields, p-adic valuation, dense elimination.
//! - [`weights`]: central charges, minimal-series weights, the collision sets
//!   `B_l` / `G_l` and the bad/good prime classifier.
//! - [`virasoro`]: a Verma-module engine (normal ordering, Gram matrices,
//!   graded ranks) and the mod-p rank-comparison probe.
//! - [`coset`]: bookkeeping checks of the GKO branching for affine `sl_2`.
//! - [`cli`]: the `virmod` command line and its JSON/CSV reports.

#![forbid(unsafe_code)]

pub mod cli;
pub mod coset;
pub mod error;
pub mod exact;
pub mod virasoro;
pub mod weights;

pub use error::{Error, Result};
