//! Booth lemniscate starlikeness radii.
//!
//! The region `G_α(𝔻)` is the image of the unit disc under
//! `G_α(z) = 1 + z/(1 − αz²)`, `0 ≤ α < 1`. This crate computes
//!
//! * the largest disc about a real center inside `G_α(𝔻)` and the smallest
//!   disc about the same center containing it ([`disc`]),
//! * the closed-form radius up to which every member of a classical class of
//!   starlike functions maps `|z| < r` into `G_α(𝔻)` under `zf′/f`
//!   ([`classes`]),
//! * independent brute-force oracles that re-derive each closed form from the
//!   geometry alone ([`oracles`]).
//!
//! The [`cli`] module backs the `booth-radius` binary.

pub mod classes;
pub mod cli;
pub mod disc;
pub mod error;
pub mod format;
pub mod oracles;
pub mod region;
pub mod search;
pub mod tolerance;

pub use classes::{Branch, FunctionClass, InclusionCondition, InclusionVerdict, RadiusResult};
pub use disc::{CaseThresholds, CenterParam, Disc};
pub use error::{Error, Result};
pub use oracles::{ContainmentReport, OracleConfig, SharpnessWitness, SubordinationOutcome, Verdict};
pub use region::{Location, MembershipVerdict, RegionParam};

/// Points of the `z` and `w` planes.
pub type ComplexPoint = num_complex::Complex64;
