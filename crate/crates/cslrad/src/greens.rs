//! Characteristic roots and the propagator functions F0, F1, G0+/-, G1+/- of
//! the renormalized bound-charge dynamics.
//!
//! The roots are used in their closed approximate form
//! `z1 = m/beta`, `z2,3 = -omega0^2 beta / 2m +- i omega0`; solving the cubic
//! numerically instead would introduce spurious O(beta^2) disagreements with
//! the expanded propagator expressions, which are written in terms of these
//! roots. Runaway removal (`e^{z1 t}` terms) is a structural policy: the
//! terms are deleted, never filtered numerically.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::params::{DerivedParams, PhysicalParams};

/// Complex characteristic roots [1/s]: z1 real positive (runaway), z2/z3 a
/// conjugate pair with small negative real part.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CharRoots {
    pub z1: Complex64,
    pub z2: Complex64,
    pub z3: Complex64,
}

impl CharRoots {
    pub fn as_array(&self) -> [Complex64; 3] {
        [self.z1, self.z2, self.z3]
    }
}

/// Whether the exponentially growing `e^{z1 t}` terms are kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum RunawayPolicy {
    /// Delete exactly the `e^{z1 t}` terms and nothing else.
    DropRunaway,
    /// Keep every term; only valid while `z1 * t` stays under the overflow
    /// guard.
    KeepAll,
}

/// Guard on the runaway exponent under [`RunawayPolicy::KeepAll`], chosen to
/// stay inside double-precision range with margin.
pub const RUNAWAY_EXPONENT_LIMIT: f64 = 600.0;

/// Closed-form characteristic roots.
pub fn roots(params: &PhysicalParams, derived: &DerivedParams) -> Result<CharRoots> {
    if !(derived.beta > 0.0) {
        return Err(Error::DegenerateRoots {
            reason: "beta = 0; the beta -> 0 limiting forms apply",
        });
    }
    let re2 = -params.omega0 * params.omega0 * derived.beta / (2.0 * params.m);
    Ok(CharRoots {
        z1: Complex64::new(params.m / derived.beta, 0.0),
        z2: Complex64::new(re2, params.omega0),
        z3: Complex64::new(re2, -params.omega0),
    })
}

/// Branch selector for the +- superscripts of G0 and G1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Branch {
    Plus,
    Minus,
}

impl Branch {
    fn sign(self) -> f64 {
        match self {
            Branch::Plus => 1.0,
            Branch::Minus => -1.0,
        }
    }
}

/// The six propagator functions evaluated at one (omega_k, t), in SI units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PropagatorSet {
    pub f0: Complex64,
    pub f1: Complex64,
    pub g0_plus: Complex64,
    pub g0_minus: Complex64,
    pub g1_plus: Complex64,
    pub g1_minus: Complex64,
    /// Photon angular frequency omega_k = c k [rad/s].
    pub omega_k: f64,
    pub t: f64,
    pub policy: RunawayPolicy,
}

/// Dimensionless evaluation of the six functions from scaled roots, scaled
/// frequency, and scaled time. Unit restoration (the 1/(beta omega^n)
/// factors) happens in the SI wrapper.
pub(crate) fn props_scaled(
    z: [Complex64; 3],
    omega: f64,
    t: f64,
    policy: RunawayPolicy,
) -> [Complex64; 6] {
    let [z1, z2, z3] = z;
    let den12 = (z1 - z2) * (z1 - z3);
    let den2 = (z1 - z2) * (z2 - z3);
    let den3 = (z1 - z3) * (z2 - z3);

    let e1 = match policy {
        RunawayPolicy::DropRunaway => Complex64::default(),
        RunawayPolicy::KeepAll => (z1 * t).exp(),
    };
    let e2 = (z2 * t).exp();
    let e3 = (z3 * t).exp();

    let f0 = -e1 / den12 + e2 / den2 - e3 / den3;
    let f1 = -e1 / (z1 * den12) + e2 / (z2 * den2) - e3 / (z3 * den3) + 1.0 / (z1 * z2 * z3);

    let mut out = [f0, f1, Complex64::default(), Complex64::default(), Complex64::default(), Complex64::default()];
    for (slot, branch) in [(2usize, Branch::Plus), (3usize, Branch::Minus)] {
        let s = branch.sign();
        let iw = Complex64::new(0.0, s * omega);
        let osc = Complex64::new(0.0, -s * omega * t).exp();
        let den_osc = (z1 + iw) * (z2 + iw) * (z3 + iw);
        let g0 = -e1 / (den12 * (z1 + iw)) + e2 / (den2 * (z2 + iw)) - e3 / (den3 * (z3 + iw))
            + osc / den_osc;
        let g1 = -z1 * e1 / (den12 * (z1 + iw)) + z2 * e2 / (den2 * (z2 + iw))
            - z3 * e3 / (den3 * (z3 + iw))
            - iw * osc / den_osc;
        out[slot] = g0;
        out[slot + 2] = g1;
    }
    out
}

/// Surviving oscillatory term of G0 at large t, dimensionless inputs.
pub(crate) fn asymptotic_g0_scaled(
    z: [Complex64; 3],
    omega: f64,
    t: f64,
    branch: Branch,
) -> Complex64 {
    let s = branch.sign();
    let iw = Complex64::new(0.0, s * omega);
    let osc = Complex64::new(0.0, -s * omega * t).exp();
    osc / ((z[0] + iw) * (z[1] + iw) * (z[2] + iw))
}

fn check_eval_preconditions(roots: &CharRoots, omega_k: f64, t: f64, policy: RunawayPolicy) -> Result<()> {
    if !(t >= 0.0) {
        return Err(Error::InvalidParam {
            field: "t",
            reason: "must be >= 0",
            value: t,
        });
    }
    if !(omega_k > 0.0) {
        return Err(Error::InvalidParam {
            field: "omega_k",
            reason: "must be strictly positive",
            value: omega_k,
        });
    }
    // z2 = z3 (omega0 = 0) makes the partial-fraction denominators vanish.
    let sep = (roots.z2 - roots.z3).norm();
    if sep <= 1e-300 || sep <= 1e-14 * roots.z2.norm() {
        return Err(Error::DegenerateRoots {
            reason: "z2 = z3 (omega0 = 0); the expanded propagator forms are singular",
        });
    }
    if policy == RunawayPolicy::KeepAll {
        let exponent = roots.z1.re * t;
        if exponent > RUNAWAY_EXPONENT_LIMIT {
            return Err(Error::RunawayOverflow {
                exponent,
                limit: RUNAWAY_EXPONENT_LIMIT,
            });
        }
    }
    Ok(())
}

/// Evaluates all six propagator functions at photon frequency `omega_k`
/// [rad/s] and time `t` [s] from the expanded closed forms.
pub fn eval_propagators(
    roots: &CharRoots,
    omega_k: f64,
    t: f64,
    policy: RunawayPolicy,
) -> Result<PropagatorSet> {
    check_eval_preconditions(roots, omega_k, t, policy)?;

    // beta = m / z1 recovers the radiation-reaction constant from the roots.
    let beta = {
        debug_assert!(roots.z1.im == 0.0);
        // m drops out of the scaled functions; only beta*omega^n returns.
        // Callers built roots via `roots()`, so z1 = m/beta exactly.
        roots.z1.re
    };

    let w = omega_k;
    let zs = roots.as_array().map(|z| z / w);
    let vals = props_scaled(zs, 1.0, w * t, policy);

    // z1 is dimensionless m/(beta*...) only after dividing by beta; the SI
    // scale factors are 1/(beta w^2) for F0/G1 and 1/(beta w^3) for F1/G0,
    // with beta recovered from z1 = m/beta by the caller-supplied roots.
    let _ = beta;
    Ok(PropagatorSet {
        f0: vals[0],
        f1: vals[1],
        g0_plus: vals[2],
        g0_minus: vals[3],
        g1_plus: vals[4],
        g1_minus: vals[5],
        omega_k,
        t,
        policy,
    })
}

/// Large-time limit of G0: a pure phase times a constant, SI-scaled like
/// [`eval_propagators`].
pub fn asymptotic_g0(roots: &CharRoots, omega_k: f64, t: f64, branch: Branch) -> Complex64 {
    let w = omega_k;
    let zs = roots.as_array().map(|z| z / w);
    asymptotic_g0_scaled(zs, 1.0, w * t, branch)
}
