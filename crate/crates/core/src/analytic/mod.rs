//! Closed-form evolution of the Stark-shifted Raman coupled model.
//!
//! Time is measured in the scaled unit `τ = g1·t` everywhere. The atom starts
//! in level 1; every initial product `|1; n1, n2⟩` only couples to
//! `|2; n1-1, n2+1⟩`, so each photon-number pair evolves as an independent
//! two-level problem with Rabi frequency linear in `n1` and `n2`.

mod params;
mod reduced;
mod tripartite;

use std::f64::consts::PI;

use num_complex::Complex64 as C64;

use crate::states::{DistKind, PhotonDistribution};

pub use params::{ModelParams, DISPERSIVE_LIMIT};
pub use reduced::{
    linear_entropy, negativity, reduced_atom_mode1, AtomMode1Dynamics, ReducedState,
};
pub use tripartite::{tripartite_coefficients, FieldDensity, TripartiteCoefficients};

/// `Ω_{n1,n2} = [g1² n1 + g2² (n2+1)] / 2Δ`, in the same unit as the couplings.
pub fn rabi_frequency(n1: usize, n2: usize, params: &ModelParams) -> f64 {
    let (g1, g2) = (params.g1(), params.g2());
    (g1 * g1 * n1 as f64 + g2 * g2 * (n2 as f64 + 1.0)) / (2.0 * params.delta())
}

/// Amplitudes of `|1; n1, n2⟩` and `|2; n1-1, n2+1⟩` after evolving from `|1; n1, n2⟩`,
/// with the common block phase stripped.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvolutionCoeffs {
    pub k1: C64,
    pub k2: C64,
    /// Rabi frequency of the block, unscaled.
    pub rabi: f64,
}

pub fn evolution_coeffs(n1: usize, n2: usize, params: &ModelParams, tau: f64) -> EvolutionCoeffs {
    let rabi = rabi_frequency(n1, n2, params);
    let (sin, cos) = (rabi / params.g1() * tau).sin_cos();
    let (x1, x2) = (n1 as f64, n2 as f64 + 1.0);
    let r2 = params.r() * params.r();
    let den = x1 + r2 * x2;
    EvolutionCoeffs {
        k1: C64::new(cos, (x1 - r2 * x2) / den * sin),
        k2: C64::new(0.0, 2.0 * params.r() * (x1 * x2).sqrt() / den * sin),
        rabi,
    }
}

/// Atomic inversion `W(τ)` for mode 1 and mode 2 prepared with photon statistics
/// `dist1`, `dist2` and the atom in level 1.
pub fn atomic_inversion(
    dist1: &PhotonDistribution,
    dist2: &PhotonDistribution,
    params: &ModelParams,
    tau: f64,
) -> f64 {
    InversionModel::new(dist1, dist2, params).eval(tau)
}

/// Precomputed terms of `W(τ) = Σ a_{n1 n2} sin²(Ω_{n1 n2} τ / g1) − 1`
/// for evaluating a whole time grid.
#[derive(Clone, Debug)]
pub struct InversionModel {
    terms: Vec<(f64, f64)>,
}

impl InversionModel {
    pub fn new(dist1: &PhotonDistribution, dist2: &PhotonDistribution, params: &ModelParams) -> Self {
        let r2 = params.r() * params.r();
        let mut terms = Vec::new();
        for (n1, &p1) in dist1.weights().iter().enumerate() {
            if n1 == 0 || p1 == 0.0 {
                continue;
            }
            for (n2, &p2) in dist2.weights().iter().enumerate() {
                let w = p1 * p2;
                if w == 0.0 {
                    continue;
                }
                let (x1, x2) = (n1 as f64, n2 as f64 + 1.0);
                let den = x1 + r2 * x2;
                let amp = 8.0 * w * r2 * x1 * x2 / (den * den);
                terms.push((amp, rabi_frequency(n1, n2, params) / params.g1()));
            }
        }
        Self { terms }
    }

    pub fn eval(&self, tau: f64) -> f64 {
        self.terms
            .iter()
            .map(|&(amp, omega)| {
                let s = (omega * tau).sin();
                amp * s * s
            })
            .sum::<f64>()
            - 1.0
    }
}

/// Rephasing time (scaled units) of the Rabi oscillations driven by the photon-number
/// spread of the given preparations. Mode-2 spread rephases every `2πΔ g1/g2²`,
/// mode-1 spread every `2πΔ/g1`; with two Fock states this is the Rabi period.
pub fn rephasing_time(dist1: &PhotonDistribution, dist2: &PhotonDistribution, params: &ModelParams) -> f64 {
    let (g1, g2, delta) = (params.g1(), params.g2(), params.delta());
    let spread = |d: &PhotonDistribution| !matches!(d.kind(), DistKind::Fock(_)) && d.kind().mean() > 0.0;
    if spread(dist2) {
        2.0 * PI * delta * g1 / (g2 * g2)
    } else if spread(dist1) {
        2.0 * PI * delta / g1
    } else {
        let n1 = dist1.kind().mean() as usize;
        let n2 = dist2.kind().mean() as usize;
        PI * g1 / rabi_frequency(n1, n2, params)
    }
}
