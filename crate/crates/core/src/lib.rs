//! Exact invariants of complex-hyperbolic surfaces built from abelian surfaces
//! and their Dehn filling compactifications.
//!
//! The crate reconstructs Hirzebruch's four-curve configuration on
//! `E_ζ × E_ζ`, its cyclic étale covers, and the `A_e = C/Z[1,ζ] × C/Z[e,ζ]`
//! configurations, then tracks characteristic numbers through blow-ups,
//! divisor removal and cusp filling, and checks the Hitchin-Thorpe,
//! Dai-Wei and logarithmic Bogomolov-Miyaoka-Yau inequalities exactly.
//!
//! Modules, bottom-up:
//!
//! - [`numbers`]: rationals, characteristic numbers, cusped manifolds, verdicts
//! - [`lattice`]: HNF/SNF, subtorus intersections, kernels and rebasing
//! - [`covers`]: cyclic étale covers with connected divisor preimages
//! - [`calculus`]: blow-ups, divisor removal and Dehn filling
//! - [`obstructions`]: Einstein obstructions and the splitting-theorem report
//! - [`families`]: the Hirzebruch base, `X_e` and `Y_e` builders
//! - [`cli`]: report generation behind the `dehnfill` binary

pub mod calculus;
pub mod cli;
pub mod covers;
pub mod error;
pub mod families;
pub mod lattice;
pub mod numbers;
pub mod obstructions;

pub use error::{Error, Result};
pub use numbers::{CharNumbers, CuspedManifold, Rational, Status, Verdict};
