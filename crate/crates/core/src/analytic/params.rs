use crate::error::{Error, Result};

/// Coupling-to-detuning ratio above which the effective Hamiltonian is flagged
/// as outside the dispersive regime.
pub const DISPERSIVE_LIMIT: f64 = 0.2;

/// Parameters of the effective Raman Hamiltonian.
///
/// All quantities share one frequency unit; the time axis used throughout the
/// crate is `τ = g1·t`. The atomic level energies are not stored: they are
/// fixed so that the two lower levels are in two-photon (Raman) resonance,
/// `E1 + ω1 = E2 + ω2`, which is the regime the closed-form solution covers.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ModelParams {
    g1: f64,
    g2: f64,
    delta: f64,
    omega1: f64,
    omega2: f64,
}

impl Default for ModelParams {
    fn default() -> Self {
        Self {
            g1: 1.0,
            g2: 1.0,
            delta: 10.0,
            omega1: 0.0,
            omega2: 0.0,
        }
    }
}

impl ModelParams {
    pub fn new(g1: f64, g2: f64, delta: f64) -> Result<Self> {
        for (name, v) in [("g1", g1), ("g2", g2), ("delta", delta)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParameter(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        let params = Self {
            g1,
            g2,
            delta,
            omega1: 0.0,
            omega2: 0.0,
        };
        if !params.is_dispersive() {
            log::warn!(
                "g1/Δ = {:.3}, g2/Δ = {:.3}: outside the dispersive regime (limit {DISPERSIVE_LIMIT})",
                g1 / delta,
                g2 / delta
            );
        }
        Ok(params)
    }

    /// `g1 = 1`, `g2 = r`, `Δ = delta_over_g1`.
    pub fn from_ratio(r: f64, delta_over_g1: f64) -> Result<Self> {
        Self::new(1.0, r, delta_over_g1)
    }

    /// Mode frequencies enter only through free phases, never through populations.
    pub fn with_mode_frequencies(mut self, omega1: f64, omega2: f64) -> Result<Self> {
        if !(omega1.is_finite() && omega2.is_finite()) {
            return Err(Error::InvalidParameter("mode frequencies must be finite".into()));
        }
        self.omega1 = omega1;
        self.omega2 = omega2;
        Ok(self)
    }

    pub fn g1(&self) -> f64 {
        self.g1
    }

    pub fn g2(&self) -> f64 {
        self.g2
    }

    /// `r = g2/g1`.
    pub fn r(&self) -> f64 {
        self.g2 / self.g1
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn delta_over_g1(&self) -> f64 {
        self.delta / self.g1
    }

    pub fn omega1(&self) -> f64 {
        self.omega1
    }

    pub fn omega2(&self) -> f64 {
        self.omega2
    }

    pub fn is_dispersive(&self) -> bool {
        self.g1 / self.delta <= DISPERSIVE_LIMIT && self.g2 / self.delta <= DISPERSIVE_LIMIT
    }
}
