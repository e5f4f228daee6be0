use nalgebra::DMatrix;
use num_complex::Complex64 as C64;

use super::{evolution_coeffs, EvolutionCoeffs, ModelParams};
use crate::error::{Error, Result};
use crate::oracle::density::VALIDATION_TOL;
use crate::oracle::DensityMatrix;
use crate::states::PhotonDistribution;

/// Initial two-mode field operator `ρ_{n1 n2, m1 m2}` (atom in level 1),
/// indexed by `n1 * d2 + n2`.
#[derive(Clone, Debug)]
pub struct FieldDensity {
    d1: usize,
    d2: usize,
    entries: DMatrix<C64>,
}

impl FieldDensity {
    pub fn new(entries: DMatrix<C64>, d1: usize, d2: usize) -> Result<Self> {
        if d1 == 0 || d2 == 0 || entries.nrows() != d1 * d2 || entries.ncols() != d1 * d2 {
            return Err(Error::InvalidState(format!(
                "{}x{} field operator does not match mode dimensions ({d1}, {d2})",
                entries.nrows(),
                entries.ncols()
            )));
        }
        let rho = DensityMatrix::from_parts(entries, vec![d1, d2])
            .map_err(|e| Error::InvalidState(e.to_string()))?;
        let herm = rho.hermiticity_error();
        if herm > VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "initial field operator not Hermitian (max |ρ - ρ†| = {herm:.3e})"
            )));
        }
        let tr = rho.trace();
        if (tr - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "initial field operator has trace {tr}, expected 1"
            )));
        }
        Ok(Self {
            d1,
            d2,
            entries: rho.entries().clone(),
        })
    }

    /// Diagonal product `p_{n1} p_{n2}`, renormalized over the truncated support.
    pub fn product(dist1: &PhotonDistribution, dist2: &PhotonDistribution) -> Self {
        let (d1, d2) = (dist1.n_max() + 1, dist2.n_max() + 1);
        let norm = dist1.total() * dist2.total();
        let mut entries = DMatrix::zeros(d1 * d2, d1 * d2);
        for (n1, p1) in dist1.weights().iter().enumerate() {
            for (n2, p2) in dist2.weights().iter().enumerate() {
                let i = n1 * d2 + n2;
                entries[(i, i)] = C64::new(p1 * p2 / norm, 0.0);
            }
        }
        Self { d1, d2, entries }
    }

    /// Pure product `|ψ1⟩⊗|ψ2⟩` from (possibly complex) mode amplitudes, normalized.
    pub fn pure(psi1: &[C64], psi2: &[C64]) -> Result<Self> {
        let amps: Vec<C64> = psi1
            .iter()
            .flat_map(|a| psi2.iter().map(move |b| a * b))
            .collect();
        let norm: f64 = amps.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if psi1.is_empty() || psi2.is_empty() || !(norm > 0.0) {
            return Err(Error::InvalidState("zero field amplitude vector".into()));
        }
        let n = amps.len();
        let entries = DMatrix::from_fn(n, n, |i, j| amps[i] * amps[j].conj() / (norm * norm));
        Ok(Self {
            d1: psi1.len(),
            d2: psi2.len(),
            entries,
        })
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.d1, self.d2)
    }

    pub fn entry(&self, n1: usize, n2: usize, m1: usize, m2: usize) -> C64 {
        self.entries[(n1 * self.d2 + n2, m1 * self.d2 + m2)]
    }
}

/// Coefficients `A`, `B`, `C` of the evolved tripartite operator
///
/// `ρ(τ) = Σ A |1;n1,n2⟩⟨1;m1,m2| + B |2;n1-1,n2+1⟩⟨2;m1-1,m2+1|
///        + C |1;n1,n2⟩⟨2;m1-1,m2+1| + h.c. of the C term`,
///
/// each matrix indexed like the initial [`FieldDensity`].
#[derive(Clone, Debug)]
pub struct TripartiteCoefficients {
    pub d1: usize,
    pub d2: usize,
    pub a: DMatrix<C64>,
    pub b: DMatrix<C64>,
    pub c: DMatrix<C64>,
}

pub fn tripartite_coefficients(
    rho0: &FieldDensity,
    params: &ModelParams,
    tau: f64,
) -> TripartiteCoefficients {
    let (d1, d2) = rho0.dims();
    let dim = d1 * d2;
    let coeffs: Vec<EvolutionCoeffs> = (0..dim)
        .map(|i| evolution_coeffs(i / d2, i % d2, params, tau))
        .collect();
    // ν/g1 per unit change of each photon number
    let two_delta = 2.0 * params.delta();
    let nu1 = (params.omega1() - params.g1() * params.g1() / two_delta) / params.g1();
    let nu2 = (params.omega2() - params.g2() * params.g2() / two_delta) / params.g1();

    let mut a = DMatrix::zeros(dim, dim);
    let mut b = DMatrix::zeros(dim, dim);
    let mut c = DMatrix::zeros(dim, dim);
    for i in 0..dim {
        let (n1, n2) = ((i / d2) as f64, (i % d2) as f64);
        for j in 0..dim {
            let rho = rho0.entries[(i, j)];
            if rho == C64::new(0.0, 0.0) {
                continue;
            }
            let (m1, m2) = ((j / d2) as f64, (j % d2) as f64);
            let nu = (m1 - n1) * nu1 + (m2 - n2) * nu2;
            let base = rho * C64::from_polar(1.0, nu * tau);
            let (ki, kj) = (coeffs[i], coeffs[j]);
            a[(i, j)] = base * ki.k1 * kj.k1.conj();
            b[(i, j)] = base * ki.k2 * kj.k2.conj();
            c[(i, j)] = base * ki.k1 * kj.k2.conj();
        }
    }
    TripartiteCoefficients { d1, d2, a, b, c }
}

impl TripartiteCoefficients {
    /// Reassembles `ρ(τ)` on the atom ⊗ mode 1 ⊗ mode 2 space with factor
    /// dimensions `[2, d1, d2 + 1]` (mode 2 gains one level from `n2 + 1`).
    pub fn to_density_matrix(&self) -> DensityMatrix {
        let (d1, d2) = (self.d1, self.d2);
        let e2 = d2 + 1;
        let full = 2 * d1 * e2;
        let lower = |atom: usize, n1: usize, n2: usize| atom * d1 * e2 + n1 * e2 + n2;
        // index of |2; n1-1, n2+1⟩ for initial index i, if it exists
        let partner = |i: usize| {
            let (n1, n2) = (i / d2, i % d2);
            (n1 >= 1).then(|| lower(1, n1 - 1, n2 + 1))
        };
        let mut m = DMatrix::zeros(full, full);
        let dim = d1 * d2;
        for i in 0..dim {
            let row1 = lower(0, i / d2, i % d2);
            for j in 0..dim {
                let col1 = lower(0, j / d2, j % d2);
                m[(row1, col1)] += self.a[(i, j)];
                if let (Some(pi), Some(pj)) = (partner(i), partner(j)) {
                    m[(pi, pj)] += self.b[(i, j)];
                }
                if let Some(pj) = partner(j) {
                    m[(row1, pj)] += self.c[(i, j)];
                    m[(pj, row1)] += self.c[(i, j)].conj();
                }
            }
        }
        DensityMatrix::from_parts(m, vec![2, d1, e2]).expect("dimensions are consistent")
    }
}
