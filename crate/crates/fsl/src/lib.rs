//! Exact integer and rational arithmetic for the numerical side of vector
//! bundles on curves in positive characteristic, together with the finite
//! symplectic combinatorics that controls separability of the Verschiebung.
//!
//! The crate has three computational layers:
//!
//! - [`curve`] — slope/degree bookkeeping for bundle transforms: Frobenius
//!   pushforward and pullback, étale pullback, twisting, and the reduction
//!   pipeline that normalizes any bundle to slope `g̃ - 1`.
//! - [`hn`] — Harder-Narasimhan type arithmetic: the instability invariant
//!   `ν`, the canonical filtration type of `F*F_*E`, gap defects `δ_i`, and
//!   exhaustive classification of rank-`p` types with maximal `ν`.
//! - [`symplectic`] — the standard symplectic space over `F_l`, isotropic
//!   2-plane enumeration in canonical form, incidence double counting, and
//!   the constructive admissible-pair search under an obstruction set.
//!
//! All arithmetic is exact; no operation introduces floating point. Slopes
//! are reduced `i64` fractions ([`num_rational::Rational64`]) with positive
//! denominator, so equality is syntactic.
//!
//! The `fsl` binary exposes every operation as a batch subcommand (see
//! [`cli`]), and each major capability has a runnable example under
//! `examples/`.

pub mod campaign;
pub mod cli;
pub mod curve;
pub mod hn;
pub mod ratio;
pub mod symplectic;

pub use curve::{BundleNumerics, CurveContext, CurveError, ReductionPlan};
pub use hn::{EnumerationReport, HnError, HnType, ProofTrace};
pub use symplectic::{
    CheckReport, FVector, IsotropicPlane, ObstructionSet, PairCertificate, SymplecticSpace,
    SympError, ThresholdReport, DEFAULT_BUDGET,
};
