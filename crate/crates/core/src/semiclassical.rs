//! Partially classical limit: mode 2 replaced by a classical drive of amplitude
//! `|Ω_L|`. Mode 1 in a Fock state `|N⟩` then drives a single two-level problem,
//! so inversion and negativity are strictly periodic in `τ' = g|Ω_L| t/Δ`.
//!
//! The inversion amplitude carries the squared denominator `(N + r'²)²`, the
//! single-term limit of the two-mode expression; it reaches full inversion
//! exactly when `r'² = N`.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Radicands this close to zero (from below) are rounding noise.
const RADICAND_FLOOR: f64 = 1e-15;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SemiclassicalParams {
    g: f64,
    drive: f64,
    delta: f64,
}

impl SemiclassicalParams {
    pub fn new(g: f64, drive: f64, delta: f64) -> Result<Self> {
        if !(g.is_finite() && g > 0.0) || !(delta.is_finite() && delta > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "g and Δ must be finite and positive, got g = {g}, Δ = {delta}"
            )));
        }
        if !(drive.is_finite() && drive >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "drive amplitude must be finite and non-negative, got {drive}"
            )));
        }
        Ok(Self { g, drive, delta })
    }

    /// Parameters with `g = 1` and `|Ω_L| = r'`.
    pub fn from_ratio(r_prime: f64, delta: f64) -> Result<Self> {
        Self::new(1.0, r_prime, delta)
    }

    pub fn g(&self) -> f64 {
        self.g
    }

    pub fn drive(&self) -> f64 {
        self.drive
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    /// `r' = |Ω_L|/g`.
    pub fn r_prime(&self) -> f64 {
        self.drive / self.g
    }

    /// Effective coupling `λ = g|Ω_L|/Δ`.
    pub fn lambda(&self) -> f64 {
        self.g * self.drive / self.delta
    }
}

/// Inversion and negativity evaluated from one shared phase `θ`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SemiclassicalObservables {
    pub inversion: f64,
    pub negativity: f64,
}

/// Period of both observables in `τ'`: `2π r'/(N + r'²)`.
pub fn period(n: usize, r_prime: f64) -> f64 {
    2.0 * PI * r_prime / (n as f64 + r_prime * r_prime)
}

fn check_ratio(r_prime: f64) -> Result<()> {
    if r_prime.is_finite() && r_prime > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("r' must be finite and positive, got {r_prime}")))
    }
}

/// `(θ, transfer amplitude 4r'²N/(N+r'²)²)`.
fn phase_and_amplitude(n: usize, r_prime: f64, tau_prime: f64) -> (f64, f64) {
    let nf = n as f64;
    let s = nf + r_prime * r_prime;
    let theta = s / (2.0 * r_prime) * tau_prime;
    (theta, 4.0 * r_prime * r_prime * nf / (s * s))
}

/// `W'(τ') = 8r'²N/(N + r'²)² sin²θ − 1`, `θ = (N + r'²)τ'/2r'`.
pub fn inversion_sc(n: usize, r_prime: f64, tau_prime: f64) -> Result<f64> {
    check_ratio(r_prime)?;
    let (theta, transfer) = phase_and_amplitude(n, r_prime, tau_prime);
    let s = theta.sin();
    Ok(2.0 * transfer * s * s - 1.0)
}

/// `𝒩'(τ') = [2r'√N/(N + r'²)] [sin²θ − 4r'²N/(N + r'²)² sin⁴θ]^{1/2}`.
pub fn negativity_sc(n: usize, r_prime: f64, tau_prime: f64) -> Result<f64> {
    Ok(evaluate(n, r_prime, tau_prime)?.negativity)
}

pub fn evaluate(n: usize, r_prime: f64, tau_prime: f64) -> Result<SemiclassicalObservables> {
    check_ratio(r_prime)?;
    if n == 0 {
        return Err(Error::DegenerateInput(
            "mode 1 in vacuum does not couple to the atom; negativity is undefined".into(),
        ));
    }
    let (theta, transfer) = phase_and_amplitude(n, r_prime, tau_prime);
    let (sin, cos) = theta.sin_cos();
    let (s2, c2) = (sin * sin, cos * cos);
    let literal = s2 - transfer * s2 * s2;
    if literal < -RADICAND_FLOOR {
        return Err(Error::InternalConsistency(format!(
            "negative radicand {literal:e} in the semiclassical negativity"
        )));
    }
    // 1 − transfer = ((N − r'²)/(N + r'²))², so the radicand is s²(c² + s² d²):
    // no cancellation near full inversion.
    let nf = n as f64;
    let d = (nf - r_prime * r_prime) / (nf + r_prime * r_prime);
    let radicand = s2 * (c2 + s2 * d * d);
    let prefactor = 2.0 * r_prime * nf.sqrt() / (nf + r_prime * r_prime);
    Ok(SemiclassicalObservables {
        inversion: 2.0 * transfer * s2 - 1.0,
        negativity: prefactor * radicand.sqrt(),
    })
}
