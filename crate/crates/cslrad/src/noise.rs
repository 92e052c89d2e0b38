//! Noise time-correlation families and their analytic spectra.
//!
//! Every colored family is normalized to unit area, so the spectrum satisfies
//! f~(0) = 1 and the two terms of the naive first-order rate are directly
//! comparable. White noise is an algebraic tag: the delta function is never
//! sampled pointwise, and integrals against it collapse analytically with a
//! half-weight convention at integration endpoints (the symmetric-delta limit
//! of the even colored families).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A symmetric, unit-area noise correlation function f(s).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoiseModel {
    /// f(s) = delta(s), f~(omega) = 1.
    White,
    /// f(s) = exp(-|s|/tau) / (2 tau), f~(omega) = 1 / (1 + omega^2 tau^2).
    ExponentialOu { tau: f64 },
    /// f(s) = exp(-s^2 / (2 tau^2)) / (sqrt(2 pi) tau), f~(omega) = exp(-omega^2 tau^2 / 2).
    GaussianCorr { tau: f64 },
}

/// Interface the kernel integrals use; implemented by [`NoiseModel`] and, in
/// tests, by synthetic mixtures of correlation functions.
pub trait Correlation {
    /// Pointwise correlation density f(|s|); never called when
    /// [`Correlation::is_white`] is true.
    fn density(&self, s: f64) -> f64;

    /// Analytic spectrum f~(omega) = integral of f(s) e^{i omega s} ds.
    fn spectrum(&self, omega: f64) -> f64;

    fn is_white(&self) -> bool {
        false
    }

    /// Characteristic decay time, used to grade quadrature panels near s = 0.
    fn decay_scale(&self) -> f64;
}

impl NoiseModel {
    pub fn exponential_ou(tau: f64) -> Result<Self> {
        validate_tau(tau)?;
        Ok(NoiseModel::ExponentialOu { tau })
    }

    pub fn gaussian_corr(tau: f64) -> Result<Self> {
        validate_tau(tau)?;
        Ok(NoiseModel::GaussianCorr { tau })
    }

    /// Correlation density f(|s|) [1/s].
    ///
    /// White noise is rejected: the delta must be handled analytically by the
    /// caller.
    pub fn correlation(&self, s: f64) -> Result<f64> {
        match self {
            NoiseModel::White => Err(Error::WhiteNoisePointwise),
            _ => Ok(self.density(s)),
        }
    }

    /// Correlation time, if the model has one.
    pub fn tau(&self) -> Option<f64> {
        match *self {
            NoiseModel::White => None,
            NoiseModel::ExponentialOu { tau } | NoiseModel::GaussianCorr { tau } => Some(tau),
        }
    }

    /// The same correlation expressed in time units of `unit` seconds.
    pub fn in_time_units(&self, unit: f64) -> NoiseModel {
        match *self {
            NoiseModel::White => NoiseModel::White,
            NoiseModel::ExponentialOu { tau } => NoiseModel::ExponentialOu { tau: tau / unit },
            NoiseModel::GaussianCorr { tau } => NoiseModel::GaussianCorr { tau: tau / unit },
        }
    }

    pub fn kind_label(&self) -> &'static str {
        match self {
            NoiseModel::White => "white",
            NoiseModel::ExponentialOu { .. } => "exponential_ou",
            NoiseModel::GaussianCorr { .. } => "gaussian_corr",
        }
    }
}

impl Correlation for NoiseModel {
    fn density(&self, s: f64) -> f64 {
        let s = s.abs();
        match *self {
            // Callers branch on is_white() before sampling.
            NoiseModel::White => f64::NAN,
            NoiseModel::ExponentialOu { tau } => (-s / tau).exp() / (2.0 * tau),
            NoiseModel::GaussianCorr { tau } => {
                (-s * s / (2.0 * tau * tau)).exp() / ((2.0 * std::f64::consts::PI).sqrt() * tau)
            }
        }
    }

    fn spectrum(&self, omega: f64) -> f64 {
        match *self {
            NoiseModel::White => 1.0,
            NoiseModel::ExponentialOu { tau } => {
                let x = omega * tau;
                1.0 / (1.0 + x * x)
            }
            NoiseModel::GaussianCorr { tau } => {
                let x = omega * tau;
                (-0.5 * x * x).exp()
            }
        }
    }

    fn is_white(&self) -> bool {
        matches!(self, NoiseModel::White)
    }

    fn decay_scale(&self) -> f64 {
        self.tau().unwrap_or(0.0)
    }
}

fn validate_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0) || !tau.is_finite() {
        return Err(Error::InvalidParam {
            field: "tau",
            reason: "must be strictly positive and finite",
            value: tau,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadrature;
    use num_complex::Complex64;

    fn spectrum_by_quadrature(model: &NoiseModel, omega: f64) -> f64 {
        // Direct Fourier quadrature of the defining integral over [-40tau, 40tau],
        // independent of the closed forms above.
        let tau = model.tau().unwrap();
        let half = 40.0 * tau;
        let breaks = quadrature::oscillation_breakpoints(-half, half, &[omega.abs()], Some(tau));
        let f = |s: f64| Complex64::new(model.density(s) * (omega * s).cos(), 0.0);
        let r = quadrature::adaptive(&f, -half, half, &breaks, 1e-13, 1e-300, 60_000);
        r.value.re
    }

    #[test]
    fn white_correlation_is_rejected_pointwise() {
        assert!(matches!(
            NoiseModel::White.correlation(0.0),
            Err(Error::WhiteNoisePointwise)
        ));
    }

    #[test]
    fn exponential_value_at_zero_is_half_inverse_tau() {
        // Normalization oracle: integrate f directly and check unit area,
        // then the s = 0 value.
        let tau = 3.2e-7;
        let model = NoiseModel::exponential_ou(tau).unwrap();
        let f = |s: f64| Complex64::new(model.density(s), 0.0);
        let area = quadrature::adaptive(&f, -50.0 * tau, 50.0 * tau, &[0.0], 1e-12, 1e-300, 20_000);
        assert!((area.value.re - 1.0).abs() < 1e-10);
        assert!((model.correlation(0.0).unwrap() - 1.0 / (2.0 * tau)).abs() <= 1e-12 / tau);
    }

    #[test]
    fn exponential_value_at_tau() {
        let tau = 1.7e-6;
        let model = NoiseModel::exponential_ou(tau).unwrap();
        let expected = (-1.0f64).exp() / (2.0 * tau);
        assert!((model.correlation(tau).unwrap() - expected).abs() <= 1e-12 / tau);
    }

    #[test]
    fn gaussian_decays_at_infinity() {
        let model = NoiseModel::gaussian_corr(1e-6).unwrap();
        assert_eq!(model.correlation(1e-3).unwrap(), 0.0);
    }

    #[test]
    fn white_spectrum_is_unity() {
        for omega in [0.0, 1e-3, 1.0, 1e9] {
            assert_eq!(NoiseModel::White.spectrum(omega), 1.0);
        }
    }

    #[test]
    fn all_models_have_unit_spectrum_at_zero() {
        let models = [
            NoiseModel::White,
            NoiseModel::exponential_ou(2e-7).unwrap(),
            NoiseModel::gaussian_corr(5e-8).unwrap(),
        ];
        for m in models {
            assert_eq!(m.spectrum(0.0), 1.0);
        }
    }

    #[test]
    fn exponential_spectrum_matches_fourier_quadrature() {
        // Relative 1e-10 at a generic point (closed form vs defining integral)...
        let tau = 1.0;
        let model = NoiseModel::exponential_ou(tau).unwrap();
        let omega = 2.345;
        let numeric = spectrum_by_quadrature(&model, omega);
        let analytic = model.spectrum(omega);
        assert!((numeric - analytic).abs() <= 1e-10 * analytic);

        // ...and 1e-8 across omega*tau in [0, 100].
        for &x in &[0.0, 0.1, 0.5, 1.0, 3.0, 10.0, 30.0, 100.0] {
            let numeric = spectrum_by_quadrature(&model, x / tau);
            let analytic = model.spectrum(x / tau);
            let rel = (numeric - analytic).abs() / analytic;
            assert!(rel <= 1e-8, "omega tau = {x}: rel {rel:e}");
        }
    }

    #[test]
    fn gaussian_spectrum_matches_fourier_quadrature() {
        // The closed form decays like exp(-x^2/2); beyond x ~ 6 the true value
        // sinks under the quadrature cancellation floor, so the oracle covers
        // the resolvable range only.
        let tau = 1.0;
        let model = NoiseModel::gaussian_corr(tau).unwrap();
        for &x in &[0.0, 0.3, 1.0, 2.0, 4.0, 6.0] {
            let numeric = spectrum_by_quadrature(&model, x / tau);
            let analytic = model.spectrum(x / tau);
            let rel = (numeric - analytic).abs() / analytic;
            assert!(rel <= 1e-8, "omega tau = {x}: rel {rel:e}");
        }
    }

    #[test]
    fn spectra_decrease_monotonically_in_frequency() {
        let models = [
            NoiseModel::exponential_ou(1.0).unwrap(),
            NoiseModel::gaussian_corr(1.0).unwrap(),
        ];
        for m in models {
            let mut prev = m.spectrum(0.0);
            for i in 1..200 {
                let omega = 0.05 * i as f64;
                let next = m.spectrum(omega);
                assert!(next < prev, "{m:?} not decreasing at omega={omega}");
                prev = next;
            }
        }
    }

    #[test]
    fn white_noise_limit_of_exponential_family() {
        let omega = 1.0;
        for tau in [1e-4, 1e-5, 1e-6] {
            let m = NoiseModel::exponential_ou(tau).unwrap();
            assert!((m.spectrum(omega) - 1.0).abs() <= 1e-7);
        }
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn correlation_is_even(s in -1e3f64..1e3, tau in 1e-2f64..1e2) {
                let m = NoiseModel::exponential_ou(tau).unwrap();
                prop_assert_eq!(m.correlation(s).unwrap(), m.correlation(-s).unwrap());
                let g = NoiseModel::gaussian_corr(tau).unwrap();
                prop_assert_eq!(g.correlation(s).unwrap(), g.correlation(-s).unwrap());
            }

            #[test]
            fn spectrum_is_even(omega in -1e3f64..1e3, tau in 1e-2f64..1e2) {
                for m in [
                    NoiseModel::White,
                    NoiseModel::exponential_ou(tau).unwrap(),
                    NoiseModel::gaussian_corr(tau).unwrap(),
                ] {
                    prop_assert_eq!(m.spectrum(omega), m.spectrum(-omega));
                }
            }
        }
    }
}
