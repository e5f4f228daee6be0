//! Brute-force reference dynamics on a truncated atom ⊗ mode 1 ⊗ mode 2 space.
//!
//! The effective Hamiltonian is assembled from its raw matrix elements (free
//! field, Stark shifts, Raman exchange) and exponentiated exactly inside its
//! invariant subspaces `{|1; n1, n2⟩, |2; n1−1, n2+1⟩}`. Nothing here uses the
//! closed-form Rabi frequency or evolution coefficients, so agreement with the
//! [`analytic`](crate::analytic) module is a genuine cross-check.

pub mod density;

use nalgebra::{Matrix2, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::analytic::ModelParams;
use crate::error::{Error, Result};
use crate::semiclassical::SemiclassicalParams;
use crate::states::PhotonDistribution;

pub use density::{matrix_linear_entropy, pt_negativity, DensityMatrix};

/// Factor index of the atom.
pub const ATOM: usize = 0;
/// Factor index of mode 1.
pub const MODE1: usize = 1;
/// Factor index of mode 2.
pub const MODE2: usize = 2;

/// Largest probability tolerated on the outermost photon-number layers.
pub const LEAKAGE_TOL: f64 = 1e-10;

/// Pure state over `(atom ∈ {1, 2}) ⊗ (n1 ≤ n1_max) ⊗ (n2 ≤ n2_max)`.
///
/// Atom level 1 maps to factor index 0 and level 2 to index 1.
#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedState {
    n1_max: usize,
    n2_max: usize,
    amplitudes: Vec<C64>,
}

impl TruncatedState {
    pub fn zeros(n1_max: usize, n2_max: usize) -> Self {
        Self {
            n1_max,
            n2_max,
            amplitudes: vec![C64::new(0.0, 0.0); 2 * (n1_max + 1) * (n2_max + 1)],
        }
    }

    /// `|level; ψ1⟩ ⊗ |ψ2⟩`, dropping amplitudes beyond the cutoffs.
    /// `level` is 1 or 2.
    pub fn product(level: u8, psi1: &[C64], psi2: &[C64], n1_max: usize, n2_max: usize) -> Result<Self> {
        let atom = match level {
            1 => 0,
            2 => 1,
            _ => return Err(Error::InvalidArgument(format!("atomic level must be 1 or 2, got {level}"))),
        };
        let mut s = Self::zeros(n1_max, n2_max);
        for (n1, a) in psi1.iter().enumerate().take(n1_max + 1) {
            for (n2, b) in psi2.iter().enumerate().take(n2_max + 1) {
                let i = s.index(atom, n1, n2);
                s.amplitudes[i] = a * b;
            }
        }
        Ok(s)
    }

    pub fn dims(&self) -> [usize; 3] {
        [2, self.n1_max + 1, self.n2_max + 1]
    }

    pub fn cutoffs(&self) -> (usize, usize) {
        (self.n1_max, self.n2_max)
    }

    pub fn amplitudes(&self) -> &[C64] {
        &self.amplitudes
    }

    pub fn index(&self, atom: usize, n1: usize, n2: usize) -> usize {
        (atom * (self.n1_max + 1) + n1) * (self.n2_max + 1) + n2
    }

    pub fn amplitude(&self, atom: usize, n1: usize, n2: usize) -> C64 {
        self.amplitudes[self.index(atom, n1, n2)]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Probability of atomic level 2.
    pub fn level2_population(&self) -> f64 {
        let half = self.amplitudes.len() / 2;
        self.amplitudes[half..].iter().map(|z| z.norm_sqr()).sum()
    }

    /// `⟨σ22 − σ11⟩`.
    pub fn inversion(&self) -> f64 {
        let p2 = self.level2_population();
        let p1 = self.norm_sqr() - p2;
        p2 - p1
    }

    /// Probability on the outermost layers `n1 = n1_max` and `n2 = n2_max`.
    pub fn boundary_leakage(&self) -> (f64, f64) {
        let (mut l1, mut l2) = (0.0, 0.0);
        for atom in 0..2 {
            for n in 0..=self.n2_max {
                l1 += self.amplitude(atom, self.n1_max, n).norm_sqr();
            }
            for n in 0..=self.n1_max {
                l2 += self.amplitude(atom, n, self.n2_max).norm_sqr();
            }
        }
        (l1, l2)
    }

    /// Errors if either boundary layer carries more than [`LEAKAGE_TOL`].
    pub fn check_truncation(&self) -> Result<()> {
        let (l1, l2) = self.boundary_leakage();
        if l1 >= LEAKAGE_TOL {
            return Err(Error::TruncationTooSmall {
                cutoff: "n1_max",
                value: self.n1_max,
                leakage: l1,
            });
        }
        if l2 >= LEAKAGE_TOL {
            return Err(Error::TruncationTooSmall {
                cutoff: "n2_max",
                value: self.n2_max,
                leakage: l2,
            });
        }
        Ok(())
    }

    /// Reduced density matrix on the factors in `keep` (see [`ATOM`], [`MODE1`], [`MODE2`]).
    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let dims = self.dims();
        let split = density::FactorSplit::new(&dims, keep)?;
        let (dk, dt) = (split.kept_dim, split.traced_dim);
        let psi = |k: usize, t: usize| self.amplitudes[split.full[k * dt + t]];
        let mut out = nalgebra::DMatrix::<C64>::zeros(dk, dk);
        for a in 0..dk {
            for b in a..dk {
                let v: C64 = (0..dt).map(|t| psi(a, t) * psi(b, t).conj()).sum();
                out[(a, b)] = v;
                out[(b, a)] = v.conj();
            }
        }
        DensityMatrix::from_parts(out, split.kept_dims)
    }

    pub fn to_density_matrix(&self) -> DensityMatrix {
        DensityMatrix::from_pure(&self.amplitudes, self.dims().to_vec()).expect("consistent dims")
    }
}

/// One invariant subspace of the Hamiltonian, diagonalized.
#[derive(Clone, Debug)]
pub enum Block {
    /// A basis state with no partner inside the cutoffs.
    Single { index: usize, energy: f64 },
    /// `upper = |1; n1, n2⟩`, `lower = |2; n1−1, n2+1⟩`.
    Pair {
        n1: usize,
        n2: usize,
        upper: usize,
        lower: usize,
        hamiltonian: Matrix2<f64>,
        energies: [f64; 2],
        vectors: Matrix2<f64>,
    },
}

impl Block {
    /// Eigenvalue splitting of a two-state block; `None` for a single state.
    pub fn splitting(&self) -> Option<f64> {
        match self {
            Block::Single { .. } => None,
            Block::Pair { energies, .. } => Some((energies[1] - energies[0]).abs()),
        }
    }
}

/// Block-diagonal form of the effective Hamiltonian, in units of `g1` so that
/// evolving for a scaled time `τ` applies `exp(−i H τ / g1)`.
#[derive(Clone, Debug)]
pub struct HamiltonianBlocks {
    n1_max: usize,
    n2_max: usize,
    blocks: Vec<Block>,
}

impl HamiltonianBlocks {
    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    pub fn cutoffs(&self) -> (usize, usize) {
        (self.n1_max, self.n2_max)
    }

    /// The pair block seeded by `|1; n1, n2⟩`, if it lies inside the cutoffs.
    pub fn pair(&self, n1: usize, n2: usize) -> Option<&Block> {
        self.blocks
            .iter()
            .find(|b| matches!(b, Block::Pair { n1: a, n2: c, .. } if *a == n1 && *c == n2))
    }
}

/// Decomposes the effective Hamiltonian
///
/// `H = E1 σ11 + E2 σ22 + ω1 a1†a1 + ω2 a2†a2 − (g1²/Δ) σ11 a1†a1 − (g2²/Δ) σ22 a2†a2
///      − (g1 g2/Δ)(a1† a2 σ12 + a2† a1 σ21)`
///
/// into its invariant subspaces, with `E1 = 0` and `E2 = ω1 − ω2` (two-photon resonance).
pub fn build_blocks(params: &ModelParams, n1_max: usize, n2_max: usize) -> Result<HamiltonianBlocks> {
    if n1_max < 1 || n2_max < 1 {
        return Err(Error::InvalidArgument(format!(
            "cutoffs must be at least 1, got n1_max = {n1_max}, n2_max = {n2_max}"
        )));
    }
    let (g1, g2, delta) = (params.g1(), params.g2(), params.delta());
    let (w1, w2) = (params.omega1(), params.omega2());
    let e2 = w1 - w2;
    let layout = TruncatedState::zeros(n1_max, n2_max);

    // diagonal matrix elements, divided by g1
    let diag = |atom: usize, n1: usize, n2: usize| {
        let (x1, x2) = (n1 as f64, n2 as f64);
        let e = match atom {
            0 => w1 * x1 + w2 * x2 - g1 * g1 / delta * x1,
            _ => e2 + w1 * x1 + w2 * x2 - g2 * g2 / delta * x2,
        };
        e / g1
    };

    let mut blocks = Vec::with_capacity(layout.amplitudes.len());
    for n1 in 0..=n1_max {
        for n2 in 0..=n2_max {
            let upper = layout.index(0, n1, n2);
            if n1 >= 1 && n2 < n2_max {
                let lower = layout.index(1, n1 - 1, n2 + 1);
                // ⟨1; n1, n2| a1† a2 σ12 |2; n1−1, n2+1⟩ = √n1 √(n2+1)
                let coupling = -(g1 * g2 / delta) * ((n1 * (n2 + 1)) as f64).sqrt() / g1;
                let h = Matrix2::new(
                    diag(0, n1, n2),
                    coupling,
                    coupling,
                    diag(1, n1 - 1, n2 + 1),
                );
                let eig = SymmetricEigen::new(h);
                blocks.push(Block::Pair {
                    n1,
                    n2,
                    upper,
                    lower,
                    hamiltonian: h,
                    energies: [eig.eigenvalues[0], eig.eigenvalues[1]],
                    vectors: eig.eigenvectors,
                });
            } else {
                blocks.push(Block::Single {
                    index: upper,
                    energy: diag(0, n1, n2),
                });
            }
        }
    }
    // level-2 states without a level-1 partner inside the cutoffs
    for m1 in 0..=n1_max {
        for m2 in 0..=n2_max {
            let partnered = m2 >= 1 && m1 < n1_max;
            if !partnered {
                blocks.push(Block::Single {
                    index: layout.index(1, m1, m2),
                    energy: diag(1, m1, m2),
                });
            }
        }
    }
    Ok(HamiltonianBlocks {
        n1_max,
        n2_max,
        blocks,
    })
}

/// Exact evolution for a scaled time `tau`. Fails if the evolved state leaks onto
/// the cutoff layers.
pub fn evolve_state(initial: &TruncatedState, blocks: &HamiltonianBlocks, tau: f64) -> Result<TruncatedState> {
    let evolved = evolve_unchecked(initial, blocks, tau)?;
    evolved.check_truncation()?;
    Ok(evolved)
}

fn evolve_unchecked(initial: &TruncatedState, blocks: &HamiltonianBlocks, tau: f64) -> Result<TruncatedState> {
    if initial.cutoffs() != blocks.cutoffs() {
        return Err(Error::InvalidArgument(format!(
            "state cutoffs {:?} differ from Hamiltonian cutoffs {:?}",
            initial.cutoffs(),
            blocks.cutoffs()
        )));
    }
    let mut out = initial.clone();
    for block in &blocks.blocks {
        match block {
            Block::Single { index, energy } => {
                out.amplitudes[*index] = initial.amplitudes[*index] * C64::from_polar(1.0, -energy * tau);
            }
            Block::Pair {
                upper,
                lower,
                energies,
                vectors,
                ..
            } => {
                let (a, b) = (initial.amplitudes[*upper], initial.amplitudes[*lower]);
                // U = V diag(e^{-iλτ}) Vᵀ, V real orthogonal
                let phases = [
                    C64::from_polar(1.0, -energies[0] * tau),
                    C64::from_polar(1.0, -energies[1] * tau),
                ];
                let proj = [
                    vectors[(0, 0)] * a + vectors[(1, 0)] * b,
                    vectors[(0, 1)] * a + vectors[(1, 1)] * b,
                ];
                let c = [proj[0] * phases[0], proj[1] * phases[1]];
                out.amplitudes[*upper] = vectors[(0, 0)] * c[0] + vectors[(0, 1)] * c[1];
                out.amplitudes[*lower] = vectors[(1, 0)] * c[0] + vectors[(1, 1)] * c[1];
            }
        }
    }
    Ok(out)
}

/// A statistical mixture of pure truncated states sharing one set of cutoffs.
#[derive(Clone, Debug)]
pub struct Ensemble {
    members: Vec<(f64, TruncatedState)>,
}

impl Ensemble {
    pub fn pure(state: TruncatedState) -> Self {
        Self {
            members: vec![(1.0, state)],
        }
    }

    pub fn members(&self) -> &[(f64, TruncatedState)] {
        &self.members
    }

    pub fn cutoffs(&self) -> (usize, usize) {
        self.members[0].1.cutoffs()
    }

    pub fn evolve(&self, blocks: &HamiltonianBlocks, tau: f64) -> Result<Ensemble> {
        let members = self
            .members
            .iter()
            .map(|(w, s)| Ok((*w, evolve_state(s, blocks, tau)?)))
            .collect::<Result<_>>()?;
        Ok(Ensemble { members })
    }

    pub fn inversion(&self) -> f64 {
        self.members.iter().map(|(w, s)| w * s.inversion()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.members.iter().map(|(w, s)| w * s.norm_sqr()).sum()
    }

    pub fn reduce(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let mut iter = self.members.iter();
        let (w0, s0) = iter.next().expect("ensemble is never empty");
        let first = s0.reduce(keep)?;
        let dims = first.dims().to_vec();
        let mut acc = first.entries() * C64::new(*w0, 0.0);
        for (w, s) in iter {
            acc += s.reduce(keep)?.entries() * C64::new(*w, 0.0);
        }
        DensityMatrix::from_parts(acc, dims)
    }
}

/// Initial ensemble for the atom in level 1 and the two modes prepared with the
/// given statistics. Pure preparations use real amplitudes `√p_n`; thermal
/// preparations become an incoherent mixture over Fock states.
///
/// Without explicit cutoffs, mode 1 gets one spare layer beyond its support
/// and mode 2 gets two (the atom can push one photon into mode 2).
pub fn prepare(
    dist1: &PhotonDistribution,
    dist2: &PhotonDistribution,
    cutoffs: Option<(usize, usize)>,
) -> Result<Ensemble> {
    let (n1_max, n2_max) = cutoffs.unwrap_or((dist1.n_max() + 1, dist2.n_max() + 2));
    let components = |d: &PhotonDistribution| -> Vec<(f64, Vec<C64>)> {
        match d.amplitudes() {
            Some(a) => vec![(1.0, a.into_iter().map(|x| C64::new(x, 0.0)).collect())],
            None => d
                .weights()
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0.0)
                .map(|(n, &p)| {
                    let mut v = vec![C64::new(0.0, 0.0); n + 1];
                    v[n] = C64::new(1.0, 0.0);
                    (p, v)
                })
                .collect(),
        }
    };
    let mut members = Vec::new();
    for (w1, psi1) in components(dist1) {
        for (w2, psi2) in components(dist2) {
            let state = TruncatedState::product(1, &psi1, &psi2, n1_max, n2_max)?;
            members.push((w1 * w2, state));
        }
    }
    let ens = Ensemble { members };
    for (_, s) in &ens.members {
        s.check_truncation()?;
    }
    // dropped amplitude beyond a forced cutoff shows up as missing norm
    let missing = 1.0 - ens.norm();
    if missing > LEAKAGE_TOL.max(dist1.tail_bound() + dist2.tail_bound() + 1e-12) {
        let (cutoff, value) = if dist1.n_max() > n1_max { ("n1_max", n1_max) } else { ("n2_max", n2_max) };
        return Err(Error::TruncationTooSmall {
            cutoff,
            value,
            leakage: missing,
        });
    }
    Ok(ens)
}

/// Atom–mode-1 state in the partially classical model, obtained by exponentiating
/// `H' = (g²/Δ) a†a σ11 + (g² r'²/Δ) σ22 + λ(σ12 a† + σ21 a)` on the invariant
/// pair `{|1; N⟩, |2; N−1⟩}` from `|1; N⟩`. Time is `τ' = λ t`, `λ = g|Ω_L|/Δ`.
/// Factor dimensions are `[2, N + 1]`.
pub fn semiclassical_state(n: usize, params: &SemiclassicalParams, tau_prime: f64) -> Result<DensityMatrix> {
    if n == 0 {
        return Err(Error::DegenerateInput("mode 1 in vacuum does not couple".into()));
    }
    let lambda = params.lambda();
    if !(lambda > 0.0) {
        return Err(Error::InvalidParameter("classical drive amplitude must be positive".into()));
    }
    let (g, delta, rp) = (params.g(), params.delta(), params.r_prime());
    // ⟨1; N| σ12 a† |2; N−1⟩ = √N
    let h = Matrix2::new(
        g * g * n as f64 / delta,
        lambda * (n as f64).sqrt(),
        lambda * (n as f64).sqrt(),
        g * g * rp * rp / delta,
    ) / lambda;
    let eig = SymmetricEigen::new(h);
    let v = eig.eigenvectors;
    let c: Vec<C64> = (0..2)
        .map(|k| v[(0, k)] * C64::from_polar(1.0, -eig.eigenvalues[k] * tau_prime))
        .collect();
    let upper = v[(0, 0)] * c[0] + v[(0, 1)] * c[1];
    let lower = v[(1, 0)] * c[0] + v[(1, 1)] * c[1];

    let d1 = n + 1;
    let mut psi = vec![C64::new(0.0, 0.0); 2 * d1];
    psi[n] = upper;
    psi[d1 + n - 1] = lower;
    DensityMatrix::from_pure(&psi, vec![2, d1])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::states::DEFAULT_EPSILON;

    fn unit(i: usize, n: usize) -> Vec<C64> {
        let mut v = vec![C64::new(0.0, 0.0); n];
        v[i] = C64::new(1.0, 0.0);
        v
    }

    #[test]
    fn vacuum_mode_one_blocks_are_single() {
        let p = ModelParams::default();
        let hb = build_blocks(&p, 3, 4).unwrap();
        for n2 in 0..=4 {
            assert!(hb.pair(0, n2).is_none());
        }
        // every basis state belongs to exactly one block
        let mut seen = vec![0; 2 * 4 * 5];
        for b in hb.blocks() {
            match b {
                Block::Single { index, .. } => seen[*index] += 1,
                Block::Pair { upper, lower, .. } => {
                    seen[*upper] += 1;
                    seen[*lower] += 1;
                }
            }
        }
        assert!(seen.iter().all(|&c| c == 1));
    }

    #[test]
    fn single_photon_block_coupling() {
        let p = ModelParams::default();
        let hb = build_blocks(&p, 2, 2).unwrap();
        match hb.pair(1, 0).unwrap() {
            Block::Pair { hamiltonian, .. } => {
                assert!((hamiltonian[(0, 1)] + 0.1).abs() < 1e-16);
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn splitting_matches_hand_diagonalization() {
        // 2×2 [[a, v], [v, b]] splits by √((a−b)² + 4v²); with resonant E2 this reduces
        // to (g1² n1 + g2² (n2+1))/Δ
        let p = ModelParams::new(1.0, 1.3, 12.0).unwrap().with_mode_frequencies(4.0, 2.5).unwrap();
        let hb = build_blocks(&p, 6, 6).unwrap();
        for n1 in 1..=6 {
            for n2 in 0..6 {
                let s = hb.pair(n1, n2).unwrap().splitting().unwrap();
                let expected = (n1 as f64 + 1.69 * (n2 as f64 + 1.0)) / 12.0;
                assert!((s - expected).abs() < 1e-13, "({n1}, {n2})");
            }
        }
    }

    #[test]
    fn identity_at_zero_time() {
        let p = ModelParams::from_ratio(1.1, 10.0).unwrap();
        let d2 = PhotonDistribution::coherent(2.0, 1e-12).unwrap();
        let ens = prepare(&PhotonDistribution::fock(3), &d2, None).unwrap();
        let (n1, n2) = ens.cutoffs();
        let hb = build_blocks(&p, n1, n2).unwrap();
        let s0 = &ens.members()[0].1;
        let s = evolve_state(s0, &hb, 0.0).unwrap();
        for (a, b) in s.amplitudes().iter().zip(s0.amplitudes()) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn single_block_rabi_problem() {
        // |1;1,0⟩, g1 = g2: population of |2;0,1⟩ is sin²(Ωτ), Ω = g²/Δ
        let p = ModelParams::default();
        let hb = build_blocks(&p, 2, 2).unwrap();
        let s0 = TruncatedState::product(1, &unit(1, 2), &unit(0, 2), 2, 2).unwrap();
        for k in 0..50 {
            let tau = k as f64 * 1.3;
            let s = evolve_state(&s0, &hb, tau).unwrap();
            let expected = (0.1 * tau).sin().powi(2);
            assert!((s.amplitude(1, 0, 1).norm_sqr() - expected).abs() < 1e-14);
        }
    }

    #[test]
    fn truncation_failure_names_the_cutoff() {
        let d2 = PhotonDistribution::coherent(5.0, DEFAULT_EPSILON).unwrap();
        let err = prepare(&PhotonDistribution::fock(5), &d2, Some((6, 2))).unwrap_err();
        assert!(matches!(err, Error::TruncationTooSmall { cutoff: "n2_max", .. }), "{err}");

        // a state that reaches the boundary only during evolution
        let p = ModelParams::default();
        let hb = build_blocks(&p, 2, 2).unwrap();
        let s0 = TruncatedState::product(1, &unit(1, 2), &unit(0, 2), 2, 1).unwrap();
        assert!(evolve_state(&s0, &hb, 1.0).is_err());
        let hb = build_blocks(&p, 2, 1).unwrap();
        let err = evolve_state(&s0, &hb, 5.0).unwrap_err();
        assert!(matches!(err, Error::TruncationTooSmall { cutoff: "n2_max", .. }));
    }

    #[test]
    fn excitation_pattern_is_conserved() {
        // starting from level 1, level-2 amplitude lives only at (n1 − 1, n2 + 1)
        let p = ModelParams::from_ratio(1.023, 10.0).unwrap();
        let d2 = PhotonDistribution::coherent(3.0, DEFAULT_EPSILON).unwrap();
        let ens = prepare(&PhotonDistribution::fock(4), &d2, None).unwrap();
        let (n1m, n2m) = ens.cutoffs();
        let hb = build_blocks(&p, n1m, n2m).unwrap();
        let s = evolve_state(&ens.members()[0].1, &hb, 37.0).unwrap();
        for n1 in 0..=n1m {
            for n2 in 0..=n2m {
                if n1 != 4 {
                    assert_eq!(s.amplitude(0, n1, n2).norm(), 0.0);
                }
                if n1 != 3 || n2 == 0 {
                    assert_eq!(s.amplitude(1, n1, n2).norm(), 0.0);
                }
            }
        }
    }

    #[test]
    fn norm_is_conserved() {
        let p = ModelParams::from_ratio(1.023, 10.0).unwrap().with_mode_frequencies(1.0, 0.5).unwrap();
        let d1 = PhotonDistribution::coherent(4.0, DEFAULT_EPSILON).unwrap();
        let d2 = PhotonDistribution::coherent(5.0, DEFAULT_EPSILON).unwrap();
        let ens = prepare(&d1, &d2, None).unwrap();
        let (n1m, n2m) = ens.cutoffs();
        let hb = build_blocks(&p, n1m, n2m).unwrap();
        let s0 = &ens.members()[0].1;
        let n0 = s0.norm_sqr();
        for k in 0..=100 {
            let s = evolve_state(s0, &hb, k as f64 * 5.0).unwrap();
            assert!((s.norm_sqr() - n0).abs() < 1e-12);
        }
    }

    #[test]
    fn reduce_matches_dense_partial_trace() {
        let p = ModelParams::from_ratio(0.9, 10.0).unwrap();
        let d2 = PhotonDistribution::coherent(1.0, 1e-8).unwrap();
        let ens = prepare(&PhotonDistribution::fock(2), &d2, None).unwrap();
        let (n1m, n2m) = ens.cutoffs();
        let hb = build_blocks(&p, n1m, n2m).unwrap();
        let s = evolve_state(&ens.members()[0].1, &hb, 21.0).unwrap();
        let dense = s.to_density_matrix();
        for keep in [&[0][..], &[0, 1], &[1, 2], &[2]] {
            let a = s.reduce(keep).unwrap();
            let b = dense.partial_trace(keep).unwrap();
            assert!((a.entries() - b.entries()).norm() < 1e-15);
        }
    }

    #[test]
    fn thermal_preparation_is_a_mixture() {
        let d1 = PhotonDistribution::fock(2);
        let d2 = PhotonDistribution::thermal(0.5, 1e-8).unwrap();
        let ens = prepare(&d1, &d2, None).unwrap();
        assert_eq!(ens.members().len(), d2.n_max() + 1);
        assert!((ens.norm() - d2.total()).abs() < 1e-15);
        assert!((ens.inversion() + ens.norm()).abs() < 1e-15);
    }
}
