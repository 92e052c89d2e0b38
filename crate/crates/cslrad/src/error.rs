//! Crate-wide error type.

use num_complex::Complex64;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, thiserror::Error)]
pub enum Error {
    /// A parameter failed validation; carries the offending field name.
    #[error("invalid parameter `{field}`: {reason} (got {value})")]
    InvalidParam {
        field: &'static str,
        reason: &'static str,
        value: f64,
    },

    /// White noise has no pointwise correlation density; integrals against it
    /// must be collapsed analytically.
    #[error("white noise has no pointwise correlation; use the analytic delta handling")]
    WhiteNoisePointwise,

    /// The characteristic roots are degenerate (`beta = 0` or `omega0 = 0`),
    /// so the partial-fraction propagator forms are singular.
    #[error("degenerate characteristic roots ({reason}); use the limiting closed forms instead")]
    DegenerateRoots { reason: &'static str },

    /// Keeping the runaway term would overflow: `z1*t` exceeds the guard.
    #[error("runaway exponent z1*t = {exponent:.3e} exceeds {limit}; use RunawayPolicy::DropRunaway")]
    RunawayOverflow { exponent: f64, limit: f64 },

    /// Harmonic resummed rate evaluated inside the resonance guard band.
    #[error("wavenumber k = {k:.6e} 1/m is within the resonance guard band around k0 = {k_resonant:.6e} 1/m")]
    Resonance { k: f64, k_resonant: f64 },

    /// The assembled kernel total has a non-negligible imaginary part.
    #[error("kernel total violates reality: |Im|/|T| = {ratio:.3e} (T_A={t_a}, T_B={t_b}, T_C={t_c}, T_D={t_d})")]
    RealityViolation {
        ratio: f64,
        t_a: Complex64,
        t_b: Complex64,
        t_c: Complex64,
        t_d: Complex64,
    },

    /// Matrix exponential argument too large for the series check.
    #[error("matrix exponential argument too large: ||alpha*O^2|| = {norm:.3e}")]
    ExpmDivergence { norm: f64 },

    #[error("configuration error: {0}")]
    Config(String),

    #[error("numerical non-convergence: {what}")]
    NonConverged { what: String },
}

impl Error {
    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }
}
