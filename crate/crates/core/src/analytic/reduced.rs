//! Atom–mode-1 dynamics after tracing out mode 2, for mode 1 in a Fock state
//! `|N⟩` and mode 2 in a coherent state with real amplitude `α = √n̄`.
//!
//! Only `|1; N⟩` and `|2; N−1⟩` are ever populated, so the reduced state is a
//! two-branch operator fixed by two populations and one coherence. Its partial
//! transpose has eigenvalues `±|coherence|` on the otherwise empty pair
//! `|1; N−1⟩, |2; N⟩`, which makes the negativity equal to `|coherence|`.

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use super::{evolution_coeffs, rabi_frequency, ModelParams};
use crate::error::{Error, Result};
use crate::oracle::DensityMatrix;
use crate::states::{poisson_weights, PhotonDistribution, DEFAULT_EPSILON};

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ReducedState {
    /// Weight of `|1; N⟩⟨1; N|`.
    pub pop_1n: f64,
    /// Weight of `|2; N−1⟩⟨2; N−1|`.
    pub pop_2nm1: f64,
    /// Coefficient of `|1; N⟩⟨2; N−1|`, free phase included.
    pub coherence: C64,
    /// `F(τ) = exp[−i(ω2 − g2²/2Δ) t]`.
    pub free_phase: C64,
}

impl ReducedState {
    /// The state as a matrix on atom ⊗ mode 1 with factor dimensions `[2, n + 1]`.
    pub fn to_density_matrix(&self, n: usize) -> DensityMatrix {
        let d1 = n + 1;
        let i1 = n; // |1; N⟩
        let i2 = d1 + n - 1; // |2; N−1⟩
        let mut m = DMatrix::zeros(2 * d1, 2 * d1);
        m[(i1, i1)] = C64::new(self.pop_1n, 0.0);
        m[(i2, i2)] = C64::new(self.pop_2nm1, 0.0);
        m[(i1, i2)] = self.coherence;
        m[(i2, i1)] = self.coherence.conj();
        DensityMatrix::from_parts(m, vec![2, d1]).expect("dimensions are consistent")
    }
}

/// Precomputed mode-2 sums for one `(N, n̄, params)` triple.
#[derive(Clone, Debug)]
pub struct AtomMode1Dynamics {
    n: usize,
    nbar: f64,
    params: ModelParams,
    /// Poisson weights `p_0 ..= p_{n_max + 1}`; the coherence couples `n` with `n + 1`.
    weights: Vec<f64>,
}

impl AtomMode1Dynamics {
    pub fn new(n: usize, nbar: f64, params: &ModelParams, epsilon: f64) -> Result<Self> {
        if n == 0 {
            return Err(Error::DegenerateInput(
                "mode 1 in vacuum has no |2; N−1⟩ branch; the atom–mode-1 state stays separable".into(),
            ));
        }
        let dist = PhotonDistribution::coherent(nbar, epsilon)?;
        Ok(Self {
            n,
            nbar,
            params: *params,
            weights: poisson_weights(nbar, dist.n_max() + 2),
        })
    }

    pub fn fock_number(&self) -> usize {
        self.n
    }

    /// Mode-2 photon numbers included in the sums.
    pub fn mode2_cutoff(&self) -> usize {
        self.weights.len() - 1
    }

    fn omega(&self, n2: usize) -> f64 {
        rabi_frequency(self.n, n2, &self.params) / self.params.g1()
    }

    pub fn free_phase(&self, tau: f64) -> C64 {
        let p = &self.params;
        let rate = (p.omega2() - p.g2() * p.g2() / (2.0 * p.delta())) / p.g1();
        C64::from_polar(1.0, -rate * tau)
    }

    /// Reduced atom–mode-1 state from the evolution coefficients.
    pub fn state(&self, tau: f64) -> ReducedState {
        let k: Vec<_> = (0..self.weights.len())
            .map(|n2| evolution_coeffs(self.n, n2, &self.params, tau))
            .collect();
        let mut pop_1n = 0.0;
        let mut pop_2nm1 = 0.0;
        for (p, kn) in self.weights.iter().zip(&k) {
            pop_1n += p * kn.k1.norm_sqr();
            pop_2nm1 += p * kn.k2.norm_sqr();
        }
        let mut sum = C64::new(0.0, 0.0);
        for n2 in 0..self.weights.len() - 1 {
            let cc = (self.weights[n2 + 1] * self.weights[n2]).sqrt();
            sum += cc * k[n2 + 1].k1 * k[n2].k2.conj();
        }
        let free_phase = self.free_phase(tau);
        ReducedState {
            pop_1n,
            pop_2nm1,
            coherence: free_phase * sum,
            free_phase,
        }
    }

    /// Negativity from the closed-form pair of sums
    /// `𝒩 = 2r√(n̄N) [S_sin² + S_cos²]^{1/2}`.
    pub fn negativity(&self, tau: f64) -> f64 {
        let r = self.params.r();
        let r2 = r * r;
        let nf = self.n as f64;
        let mut s_sin = 0.0;
        let mut s_cos = 0.0;
        for n2 in 0..self.weights.len() - 1 {
            let x = n2 as f64;
            let (sa, _) = (self.omega(n2) * tau).sin_cos();
            let (sb, cb) = (self.omega(n2 + 1) * tau).sin_cos();
            let den = nf + r2 * (x + 1.0);
            let bracket = (nf - r2 * (x + 2.0)) / (nf + r2 * (x + 2.0));
            s_sin += self.weights[n2] * bracket * sa * sb / den;
            s_cos += self.weights[n2] * sa * cb / den;
        }
        2.0 * r * (self.nbar * nf).sqrt() * s_sin.hypot(s_cos)
    }

    /// Population of level 2, `Σ p_n 4r²N(n+1)/[N + r²(n+1)]² sin²(Ω_{N,n} τ)`.
    pub fn level2_population(&self, tau: f64) -> f64 {
        let r2 = self.params.r().powi(2);
        let nf = self.n as f64;
        self.weights
            .iter()
            .enumerate()
            .map(|(n2, p)| {
                let x = n2 as f64 + 1.0;
                let den = nf + r2 * x;
                let s = (self.omega(n2) * tau).sin();
                p * 4.0 * r2 * nf * x / (den * den) * s * s
            })
            .sum()
    }

    /// Linear entropy of the atom, `2p₂ − 2p₂²`.
    pub fn linear_entropy(&self, tau: f64) -> f64 {
        let p2 = self.level2_population(tau);
        2.0 * p2 - 2.0 * p2 * p2
    }
}

pub fn reduced_atom_mode1(n: usize, nbar: f64, params: &ModelParams, tau: f64) -> Result<ReducedState> {
    Ok(AtomMode1Dynamics::new(n, nbar, params, DEFAULT_EPSILON)?.state(tau))
}

pub fn negativity(n: usize, nbar: f64, params: &ModelParams, tau: f64) -> Result<f64> {
    Ok(AtomMode1Dynamics::new(n, nbar, params, DEFAULT_EPSILON)?.negativity(tau))
}

pub fn linear_entropy(n: usize, nbar: f64, params: &ModelParams, tau: f64) -> Result<f64> {
    Ok(AtomMode1Dynamics::new(n, nbar, params, DEFAULT_EPSILON)?.linear_entropy(tau))
}
