//! Spontaneous photon emission of a charged, harmonically bound particle in
//! the CSL collapse model.
//!
//! The library evaluates the emission-rate density `dΓ/dk` in two ways: the
//! naive first-order formula, whose spectrum carries both the noise weight at
//! the photon frequency and an extra zero-frequency weight, and the resummed
//! formula obtained when the electromagnetic part of the dynamics is treated
//! exactly. The kernel machinery ([`kernels`]) exposes the two-time noise
//! integrals behind the resummed result so that the suppression of the
//! zero-frequency term can be verified numerically, piece by piece.
//!
//! Numerical cross-checks (brute-force 2D quadrature, Gaussian spatial
//! moments, truncated-Fock commutator identities) live in [`oracles`] and are
//! runnable through the `verify` CLI subcommand.

pub mod config;
pub mod error;
pub mod fit;
pub mod greens;
pub mod kernels;
pub mod noise;
pub mod oracles;
pub mod output;
pub mod params;
pub mod quadrature;
pub mod rates;
pub mod sweep;
pub mod verify;

pub use error::{Error, Result};
pub use greens::{CharRoots, PropagatorSet, RunawayPolicy};
pub use kernels::{EvalOrder, KernelPiece, KernelValue};
pub use noise::NoiseModel;
pub use params::{DerivedParams, PhysicalParams, ScaleFrame};
pub use rates::{RateFormula, RateSpectrum};
