//! Physical constants, CSL model parameters, and the dimensionless frame used
//! by all kernel computation.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// All physical inputs in SI units.
///
/// The collapse strength is parameterized by the rate `lambda_csl` (the
/// GRW-style collapse rate); the raw coupling `gamma = lambda * 8 pi^(3/2)
/// r_C^3` is derived from it. The defaults are the conventional values
/// `lambda = 1e-16 1/s`, `r_C = 1e-7 m` together with electron charge/mass
/// and a nucleon reference mass; they are conventional choices, not measured
/// data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PhysicalParams {
    /// Particle charge [C].
    pub e: f64,
    /// Particle mass [kg].
    pub m: f64,
    /// Reference (nucleon) mass [kg].
    pub m0: f64,
    /// Vacuum permittivity [F/m].
    pub eps0: f64,
    /// Reduced Planck constant [J s].
    pub hbar: f64,
    /// Speed of light [m/s].
    pub c: f64,
    /// Collapse rate lambda [1/s].
    pub lambda_csl: f64,
    /// Noise correlation length r_C [m].
    pub r_c: f64,
    /// Trap angular frequency omega0 [rad/s]; 0 means free particle.
    pub omega0: f64,
}

impl Default for PhysicalParams {
    fn default() -> Self {
        PhysicalParams {
            e: 1.602176634e-19,
            m: 9.1093837015e-31,
            m0: 1.67262192369e-27,
            eps0: 8.8541878128e-12,
            hbar: 1.054571817e-34,
            c: 2.99792458e8,
            lambda_csl: 1e-16,
            r_c: 1e-7,
            omega0: 1e9,
        }
    }
}

impl PhysicalParams {
    /// Checks the positivity invariants, naming the offending field.
    pub fn validate(&self) -> Result<()> {
        let strictly_positive: [(&'static str, f64); 8] = [
            ("e", self.e),
            ("m", self.m),
            ("m0", self.m0),
            ("eps0", self.eps0),
            ("hbar", self.hbar),
            ("c", self.c),
            ("lambda_csl", self.lambda_csl),
            ("r_c", self.r_c),
        ];
        for (field, value) in strictly_positive {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::InvalidParam {
                    field,
                    reason: "must be strictly positive and finite",
                    value,
                });
            }
        }
        if !(self.omega0 >= 0.0) || !self.omega0.is_finite() {
            return Err(Error::InvalidParam {
                field: "omega0",
                reason: "must be >= 0 and finite",
                value: self.omega0,
            });
        }
        Ok(())
    }

    /// Raw collapse coupling gamma = lambda * 8 pi^(3/2) r_C^3 [m^3/s].
    pub fn gamma(&self) -> f64 {
        self.lambda_csl * 8.0 * std::f64::consts::PI.powf(1.5) * self.r_c.powi(3)
    }

    /// Photon angular frequency omega_k = c k for wavenumber `k` [1/m].
    pub fn omega_k(&self, k: f64) -> f64 {
        self.c * k
    }
}

/// Quantities derived from [`PhysicalParams`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DerivedParams {
    /// Radiation-reaction constant beta = e^2 / (6 pi eps0 c^3) [kg s].
    pub beta: f64,
    /// Spring constant kappa = m omega0^2 [kg/s^2].
    pub kappa: f64,
    /// Raw collapse coupling gamma [m^3/s].
    pub gamma: f64,
}

/// Computes the derived constants.
pub fn derive(params: &PhysicalParams) -> Result<DerivedParams> {
    params.validate()?;
    let beta = params.e * params.e / (6.0 * std::f64::consts::PI * params.eps0 * params.c.powi(3));
    Ok(DerivedParams {
        beta,
        kappa: params.m * params.omega0 * params.omega0,
        gamma: params.gamma(),
    })
}

/// Dimensionless frame: times in units of `t_unit`, angular frequencies in
/// units of `w_unit = 1/t_unit`.
///
/// All kernel/propagator math runs in this frame so that SI magnitudes
/// (hbar ~ 1e-34, beta ~ 1e-53) never meet inside a double integral;
/// dimensional factors are applied once, at rate assembly, through
/// `rate_prefactor`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScaleFrame {
    /// Time unit [s]; 1/(c k_ref).
    pub t_unit: f64,
    /// Frequency unit [rad/s]; c k_ref.
    pub w_unit: f64,
    /// Multiplying the dimensionless kernel total Re T by this factor gives
    /// the photon-number expectation at omega_k = w_unit.
    pub rate_prefactor: f64,
}

impl ScaleFrame {
    pub fn time_to_frame(&self, t: f64) -> f64 {
        t / self.t_unit
    }

    pub fn time_from_frame(&self, t_hat: f64) -> f64 {
        t_hat * self.t_unit
    }

    pub fn freq_to_frame(&self, w: f64) -> f64 {
        w * self.t_unit
    }

    pub fn freq_from_frame(&self, w_hat: f64) -> f64 {
        w_hat * self.w_unit
    }
}

/// Builds the frame anchored at reference wavenumber `k_ref` [1/m], so that
/// the photon frequency c*k_ref maps to 1.
pub fn make_frame(params: &PhysicalParams, k_ref: f64) -> Result<ScaleFrame> {
    if !(k_ref > 0.0) || !k_ref.is_finite() {
        return Err(Error::InvalidParam {
            field: "k_ref",
            reason: "must be strictly positive and finite",
            value: k_ref,
        });
    }
    let derived = derive(params)?;
    let w_unit = params.c * k_ref;
    let t_unit = 1.0 / w_unit;

    // (t_unit^5 / beta^2) restores the kernel's SI dimensions; grouped so no
    // intermediate product leaves the f64 range.
    let tb = t_unit * t_unit / derived.beta;
    let kernel_scale = tb * tb * t_unit;
    let mass_ratio = (params.m / params.m0).powi(2);
    let rate_prefactor = params.e * params.e / params.eps0
        * params.hbar
        * params.lambda_csl
        * mass_ratio
        * kernel_scale
        / (32.0 * std::f64::consts::PI.powi(3) * w_unit * params.r_c * params.r_c);

    Ok(ScaleFrame {
        t_unit,
        w_unit,
        rate_prefactor,
    })
}
