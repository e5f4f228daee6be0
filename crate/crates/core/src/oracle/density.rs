use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Tolerance on Hermiticity and unit trace when validating a density matrix.
pub const VALIDATION_TOL: f64 = 1e-12;
/// Eigenvalues of a partial transpose above `-NEGATIVE_EIGEN_FLOOR` count as zero.
pub const NEGATIVE_EIGEN_FLOOR: f64 = 1e-12;

/// Density matrix over a tensor product `dims[0] ⊗ dims[1] ⊗ ...`, row-major
/// (the first factor is the most significant index).
#[derive(Clone, Debug)]
pub struct DensityMatrix {
    entries: DMatrix<C64>,
    dims: Vec<usize>,
}

impl DensityMatrix {
    /// Validated constructor: square, dimension consistent with `dims`,
    /// Hermitian and unit trace within [`VALIDATION_TOL`].
    pub fn new(entries: DMatrix<C64>, dims: Vec<usize>) -> Result<Self> {
        let rho = Self::from_parts(entries, dims)?;
        let herm = rho.hermiticity_error();
        if herm > VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix not Hermitian (max |ρ - ρ†| = {herm:.3e})"
            )));
        }
        let tr = rho.trace();
        if (tr - 1.0).abs() > VALIDATION_TOL {
            return Err(Error::InvalidState(format!(
                "density matrix trace is {tr}, expected 1"
            )));
        }
        Ok(rho)
    }

    /// Checks only the shape. Used for matrices produced by trace-preserving operations.
    pub(crate) fn from_parts(entries: DMatrix<C64>, dims: Vec<usize>) -> Result<Self> {
        let total: usize = dims.iter().product();
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidArgument(format!("bad factor dimensions {dims:?}")));
        }
        if entries.nrows() != entries.ncols() || entries.nrows() != total {
            return Err(Error::InvalidArgument(format!(
                "{}x{} matrix does not match factor dimensions {dims:?}",
                entries.nrows(),
                entries.ncols()
            )));
        }
        Ok(Self { entries, dims })
    }

    /// `|ψ⟩⟨ψ|` for a state vector over `dims`.
    pub fn from_pure(psi: &[C64], dims: Vec<usize>) -> Result<Self> {
        let n = psi.len();
        let entries = DMatrix::from_fn(n, n, |i, j| psi[i] * psi[j].conj());
        Self::from_parts(entries, dims)
    }

    pub fn entries(&self) -> &DMatrix<C64> {
        &self.entries
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn dim(&self) -> usize {
        self.entries.nrows()
    }

    /// Entry addressed by per-factor indices.
    pub fn get(&self, row: &[usize], col: &[usize]) -> C64 {
        self.entries[(flat_index(&self.dims, row), flat_index(&self.dims, col))]
    }

    pub fn trace(&self) -> f64 {
        self.entries.diagonal().iter().map(|z| z.re).sum()
    }

    pub fn hermiticity_error(&self) -> f64 {
        let n = self.dim();
        let mut worst = 0.0f64;
        for i in 0..n {
            for j in i..n {
                worst = worst.max((self.entries[(i, j)] - self.entries[(j, i)].conj()).norm());
            }
        }
        worst
    }

    /// Real eigenvalues in ascending order.
    pub fn eigenvalues(&self) -> Vec<f64> {
        hermitian_eigenvalues(self.entries.clone())
    }

    pub fn min_eigenvalue(&self) -> f64 {
        self.eigenvalues().first().copied().unwrap_or(0.0)
    }

    /// `Tr ρ²`; for a Hermitian matrix this is the squared Frobenius norm.
    pub fn purity(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Reduced density matrix on the factors listed in `keep`.
    pub fn partial_trace(&self, keep: &[usize]) -> Result<DensityMatrix> {
        let split = FactorSplit::new(&self.dims, keep)?;
        let dk = split.kept_dim;
        let mut out = DMatrix::<C64>::zeros(dk, dk);
        for t in 0..split.traced_dim {
            for a in 0..dk {
                let i = split.full[a * split.traced_dim + t];
                for b in 0..dk {
                    let j = split.full[b * split.traced_dim + t];
                    out[(a, b)] += self.entries[(i, j)];
                }
            }
        }
        Self::from_parts(out, split.kept_dims)
    }

    /// Partial transpose with respect to factor `factor`.
    pub fn partial_transpose(&self, factor: usize) -> Result<DensityMatrix> {
        if factor >= self.dims.len() {
            return Err(Error::InvalidArgument(format!(
                "factor {factor} out of range for dims {:?}",
                self.dims
            )));
        }
        let n = self.dim();
        let stride: usize = self.dims[factor + 1..].iter().product();
        let d = self.dims[factor];
        let digit = |i: usize| (i / stride) % d;
        let mut out = DMatrix::<C64>::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                let (di, dj) = (digit(i), digit(j));
                let ii = i - di * stride + dj * stride;
                let jj = j - dj * stride + di * stride;
                out[(ii, jj)] = self.entries[(i, j)];
            }
        }
        Self::from_parts(out, self.dims.clone())
    }
}

/// Negativity: sum of the magnitudes of the negative eigenvalues of the
/// partial transpose over `transpose_factor` of a bipartite state.
pub fn pt_negativity(rho: &DensityMatrix, transpose_factor: usize) -> Result<f64> {
    if rho.dims().len() != 2 {
        return Err(Error::InvalidArgument(format!(
            "negativity needs a bipartite state, got factor dims {:?}",
            rho.dims()
        )));
    }
    let pt = rho.partial_transpose(transpose_factor)?;
    Ok(pt
        .eigenvalues()
        .into_iter()
        .filter(|&l| l < -NEGATIVE_EIGEN_FLOOR)
        .fold(0.0, |acc, l| acc - l))
}

/// `1 - Tr ρ²`.
pub fn matrix_linear_entropy(rho: &DensityMatrix) -> f64 {
    1.0 - rho.purity()
}

pub(crate) fn hermitian_eigenvalues(m: DMatrix<C64>) -> Vec<f64> {
    let mut ev: Vec<f64> = SymmetricEigen::new(m).eigenvalues.iter().copied().collect();
    ev.sort_by(f64::total_cmp);
    ev
}

pub(crate) fn flat_index(dims: &[usize], digits: &[usize]) -> usize {
    dims.iter()
        .zip(digits)
        .fold(0, |acc, (&d, &x)| acc * d + x)
}

/// Index bookkeeping for splitting a tensor product into kept and traced factors.
pub(crate) struct FactorSplit {
    pub kept_dims: Vec<usize>,
    pub kept_dim: usize,
    pub traced_dim: usize,
    /// `full[k * traced_dim + t]` is the flat index of (kept k, traced t).
    pub full: Vec<usize>,
}

impl FactorSplit {
    pub fn new(dims: &[usize], keep: &[usize]) -> Result<Self> {
        if keep.is_empty() {
            return Err(Error::InvalidArgument("empty keep set in partial trace".into()));
        }
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        if keep.iter().any(|&k| k >= dims.len()) {
            return Err(Error::InvalidArgument(format!(
                "keep set {keep:?} out of range for dims {dims:?}"
            )));
        }
        let kept_dims: Vec<usize> = keep.iter().map(|&k| dims[k]).collect();
        let traced_dims: Vec<usize> = (0..dims.len())
            .filter(|f| !keep.contains(f))
            .map(|f| dims[f])
            .collect();
        let kept_dim: usize = kept_dims.iter().product();
        let traced_dim: usize = traced_dims.iter().product();

        let total: usize = dims.iter().product();
        let mut full = vec![0; total];
        let mut digits = vec![0usize; dims.len()];
        for flat in 0..total {
            let mut rem = flat;
            for f in (0..dims.len()).rev() {
                digits[f] = rem % dims[f];
                rem /= dims[f];
            }
            let (mut k, mut t) = (0, 0);
            for f in 0..dims.len() {
                if keep.contains(&f) {
                    k = k * dims[f] + digits[f];
                } else {
                    t = t * dims[f] + digits[f];
                }
            }
            full[k * traced_dim + t] = flat;
        }
        Ok(Self {
            kept_dims,
            kept_dim,
            traced_dim,
            full,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn kron(a: &[C64], b: &[C64]) -> Vec<C64> {
        a.iter().flat_map(|x| b.iter().map(move |y| x * y)).collect()
    }

    fn normalized(v: Vec<C64>) -> Vec<C64> {
        let n = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        v.into_iter().map(|z| z / n).collect()
    }

    #[test]
    fn validation_rejects_bad_matrices() {
        let m = DMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.2, 0.0), c(0.3, 0.0), c(0.0, 0.0)]);
        assert!(DensityMatrix::new(m, vec![2]).is_err());
        let m = DMatrix::from_row_slice(2, 2, &[c(0.7, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.7, 0.0)]);
        assert!(DensityMatrix::new(m, vec![2]).is_err());
        let m = DMatrix::identity(4, 4) * c(0.25, 0.0);
        assert!(DensityMatrix::new(m.clone(), vec![3]).is_err());
        assert!(DensityMatrix::new(m, vec![2, 2]).is_ok());
    }

    #[test]
    fn product_state_traces_to_its_factors() {
        let a = normalized(vec![c(0.6, 0.1), c(0.3, -0.7)]);
        let b = normalized(vec![c(0.2, 0.0), c(0.5, 0.5), c(-0.1, 0.4)]);
        let rho = DensityMatrix::from_pure(&kron(&a, &b), vec![2, 3]).unwrap();
        let ra = rho.partial_trace(&[0]).unwrap();
        let rb = rho.partial_trace(&[1]).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert!((ra.entries()[(i, j)] - a[i] * a[j].conj()).norm() < 1e-15);
            }
        }
        for i in 0..3 {
            for j in 0..3 {
                assert!((rb.entries()[(i, j)] - b[i] * b[j].conj()).norm() < 1e-15);
            }
        }
        assert!(pt_negativity(&rho, 0).unwrap() < 1e-14);
        assert!(matrix_linear_entropy(&ra).abs() < 1e-14);
    }

    #[test]
    fn two_branch_state_has_schmidt_populations() {
        // cos θ |0,1⟩ + sin θ |1,0⟩
        let (ct, st) = (0.3f64.cos(), 0.3f64.sin());
        let mut psi = vec![c(0.0, 0.0); 4];
        psi[1] = c(ct, 0.0);
        psi[2] = c(st, 0.0);
        let rho = DensityMatrix::from_pure(&psi, vec![2, 2]).unwrap();
        let ev = rho.partial_trace(&[0]).unwrap().eigenvalues();
        assert!((ev[0] - st * st).abs() < 1e-14);
        assert!((ev[1] - ct * ct).abs() < 1e-14);
        assert!((pt_negativity(&rho, 1).unwrap() - ct * st).abs() < 1e-14);
    }

    #[test]
    fn bell_state_negativity_and_mixed_qubit_entropy() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let psi = vec![c(s, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(s, 0.0)];
        let rho = DensityMatrix::from_pure(&psi, vec![2, 2]).unwrap();
        assert!((pt_negativity(&rho, 0).unwrap() - 0.5).abs() < 1e-14);
        let atom = rho.partial_trace(&[0]).unwrap();
        assert!((matrix_linear_entropy(&atom) - 0.5).abs() < 1e-15);
    }

    #[test]
    fn negativity_requires_bipartite_dims() {
        let rho = DensityMatrix::from_pure(&[c(1.0, 0.0); 1], vec![1, 1, 1]).unwrap();
        assert!(matches!(pt_negativity(&rho, 0), Err(Error::InvalidArgument(_))));
        assert!(matches!(rho.partial_trace(&[]), Err(Error::InvalidArgument(_))));
    }

    #[test]
    fn partial_trace_of_three_factors_preserves_trace() {
        let psi: Vec<C64> = normalized((0..12).map(|k| c((k as f64).sin(), (k as f64 * 0.7).cos())).collect());
        let rho = DensityMatrix::from_pure(&psi, vec![2, 3, 2]).unwrap();
        for keep in [&[0][..], &[1], &[2], &[0, 1], &[0, 2], &[1, 2]] {
            let red = rho.partial_trace(keep).unwrap();
            assert!((red.trace() - 1.0).abs() < 1e-14);
            assert!(red.hermiticity_error() < 1e-15);
        }
        // tracing in two steps equals tracing in one
        let direct = rho.partial_trace(&[0]).unwrap();
        let staged = rho.partial_trace(&[0, 1]).unwrap().partial_trace(&[0]).unwrap();
        assert!((direct.entries() - staged.entries()).norm() < 1e-15);
    }

    proptest! {
        #[test]
        fn negativity_independent_of_transposed_factor(
            re in proptest::collection::vec(-1.0f64..1.0, 8),
            im in proptest::collection::vec(-1.0f64..1.0, 8),
        ) {
            let psi = normalized(re.iter().zip(&im).map(|(&a, &b)| c(a, b)).collect());
            prop_assume!(psi.iter().all(|z| z.is_finite()));
            let rho = DensityMatrix::from_pure(&psi, vec![2, 4]).unwrap();
            let n0 = pt_negativity(&rho, 0).unwrap();
            let n1 = pt_negativity(&rho, 1).unwrap();
            prop_assert!((n0 - n1).abs() < 1e-12);
            prop_assert!(n0 >= 0.0 && n0 <= 0.5 + 1e-12);
        }
    }
}
