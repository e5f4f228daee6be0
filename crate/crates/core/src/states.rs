//! Photon-number distributions for the initial field preparations.
//!
//! Each distribution is truncated at the smallest cutoff whose omitted
//! probability mass is below a tolerance `epsilon`. The omitted mass is
//! recorded in [`PhotonDistribution::tail_bound`] so downstream sums can
//! account for it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Default truncation tolerance for coherent and thermal distributions.
pub const DEFAULT_EPSILON: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum DistKind {
    Fock(usize),
    Coherent(f64),
    Thermal(f64),
}

impl DistKind {
    /// Mean photon number of the untruncated state.
    pub fn mean(&self) -> f64 {
        match *self {
            DistKind::Fock(n) => n as f64,
            DistKind::Coherent(nbar) | DistKind::Thermal(nbar) => nbar,
        }
    }

    /// Whether the field preparation is a pure state.
    pub fn is_pure(&self) -> bool {
        !matches!(self, DistKind::Thermal(_))
    }
}

impl fmt::Display for DistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DistKind::Fock(n) => write!(f, "fock:{n}"),
            DistKind::Coherent(nbar) => write!(f, "coherent:{nbar}"),
            DistKind::Thermal(nbar) => write!(f, "thermal:{nbar}"),
        }
    }
}

/// Parses `fock:N`, `coherent:n̄` or `thermal:n̄`.
impl FromStr for DistKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("expected fock:N, coherent:n̄ or thermal:n̄, got {s:?}"));
        let (kind, value) = s.trim().split_once(':').ok_or_else(bad)?;
        let value = value.trim();
        match kind.trim().to_ascii_lowercase().as_str() {
            "fock" => value.parse().map(DistKind::Fock).map_err(|_| bad()),
            "coherent" | "thermal" => {
                let nbar: f64 = value.parse().map_err(|_| bad())?;
                if !(nbar.is_finite() && nbar >= 0.0) {
                    return Err(Error::Parse(format!("mean photon number must be finite and non-negative in {s:?}")));
                }
                Ok(if kind.trim().eq_ignore_ascii_case("coherent") {
                    DistKind::Coherent(nbar)
                } else {
                    DistKind::Thermal(nbar)
                })
            }
            _ => Err(bad()),
        }
    }
}

/// Truncated photon-number weights `p_0 ..= p_{n_max}` of one field mode.
#[derive(Clone, Debug, PartialEq)]
pub struct PhotonDistribution {
    kind: DistKind,
    weights: Vec<f64>,
    tail_bound: f64,
}

impl PhotonDistribution {
    /// Fock state `|n⟩`: a point mass at `n`.
    pub fn fock(n: usize) -> Self {
        let mut weights = vec![0.0; n + 1];
        weights[n] = 1.0;
        Self {
            kind: DistKind::Fock(n),
            weights,
            tail_bound: 0.0,
        }
    }

    /// Poissonian weights `e^{-n̄} n̄^n / n!` of a coherent state.
    pub fn coherent(nbar: f64, epsilon: f64) -> Result<Self> {
        check_mean(nbar)?;
        check_epsilon(epsilon)?;
        if nbar == 0.0 {
            return Ok(Self {
                kind: DistKind::Coherent(0.0),
                weights: vec![1.0],
                tail_bound: 0.0,
            });
        }

        let cap = coherent_cap(nbar);
        let weights = poisson_weights(nbar, cap + 1);

        // Suffix sums accumulated from the small end avoid the cancellation in 1 - Σp.
        let mut suffix = vec![0.0; weights.len() + 1];
        for n in (0..weights.len()).rev() {
            suffix[n] = suffix[n + 1] + weights[n];
        }
        // Mass beyond the computed range: the ratio p_{n+1}/p_n = n̄/(n+1) is
        // decreasing, so the remainder is bounded by a geometric series.
        let last = weights.len() - 1;
        let ratio = nbar / (last as f64 + 2.0);
        let beyond = weights[last] * ratio / (1.0 - ratio);

        let n_max = (0..=cap)
            .find(|&k| suffix[k + 1] + beyond < epsilon)
            .ok_or_else(|| {
                Error::InvalidParameter(format!(
                    "epsilon {epsilon:e} is below the attainable tail mass for coherent n̄ = {nbar}"
                ))
            })?;
        let tail_bound = suffix[n_max + 1] + beyond;
        let mut weights = weights;
        weights.truncate(n_max + 1);
        Ok(Self {
            kind: DistKind::Coherent(nbar),
            weights,
            tail_bound,
        })
    }

    /// Geometric weights `n̄^n / (n̄+1)^{n+1}` of a thermal state.
    pub fn thermal(nbar: f64, epsilon: f64) -> Result<Self> {
        check_mean(nbar)?;
        check_epsilon(epsilon)?;
        if nbar == 0.0 {
            return Ok(Self {
                kind: DistKind::Thermal(0.0),
                weights: vec![1.0],
                tail_bound: 0.0,
            });
        }

        let q = nbar / (nbar + 1.0);
        // Omitted mass after cutoff k is q^{k+1}.
        let mut n_max = ((epsilon.ln() / q.ln()).ceil() as usize).saturating_sub(1);
        while n_max > 0 && q.powi(n_max as i32) < epsilon {
            n_max -= 1;
        }
        while q.powi(n_max as i32 + 1) >= epsilon {
            n_max += 1;
        }

        let mut weights = Vec::with_capacity(n_max + 1);
        let mut p = 1.0 / (nbar + 1.0);
        for _ in 0..=n_max {
            weights.push(p);
            p *= q;
        }
        Ok(Self {
            kind: DistKind::Thermal(nbar),
            weights,
            tail_bound: q.powi(n_max as i32 + 1),
        })
    }

    /// Builds the distribution for `kind` with the given tolerance.
    pub fn from_kind(kind: DistKind, epsilon: f64) -> Result<Self> {
        match kind {
            DistKind::Fock(n) => Ok(Self::fock(n)),
            DistKind::Coherent(nbar) => Self::coherent(nbar, epsilon),
            DistKind::Thermal(nbar) => Self::thermal(nbar, epsilon),
        }
    }

    pub fn kind(&self) -> DistKind {
        self.kind
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn n_max(&self) -> usize {
        self.weights.len() - 1
    }

    /// Upper bound on the probability mass dropped by the truncation.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// Weight `p_n`, zero beyond the cutoff.
    pub fn weight(&self, n: usize) -> f64 {
        self.weights.get(n).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.weights.iter().sum()
    }

    pub fn mean(&self) -> f64 {
        self.weights
            .iter()
            .enumerate()
            .map(|(n, p)| n as f64 * p)
            .sum()
    }

    /// Real non-negative probability amplitudes `√p_n` for a pure preparation
    /// (coherent states use `α = √n̄`). `None` for mixed states.
    pub fn amplitudes(&self) -> Option<Vec<f64>> {
        self.kind
            .is_pure()
            .then(|| self.weights.iter().map(|p| p.sqrt()).collect())
    }
}

/// Hard ceiling on the coherent cutoff; the Poisson tail is negligible well before it.
pub(crate) fn coherent_cap(nbar: f64) -> usize {
    (nbar + 20.0 * (nbar + 1.0).sqrt() + 30.0).ceil() as usize
}

/// `len` Poisson weights via the recurrence `p_{n+1} = p_n n̄/(n+1)`, carried
/// in log space so large means do not underflow `p_0`.
pub(crate) fn poisson_weights(nbar: f64, len: usize) -> Vec<f64> {
    if nbar == 0.0 {
        let mut w = vec![0.0; len.max(1)];
        w[0] = 1.0;
        return w;
    }
    let ln_nbar = nbar.ln();
    let mut ln_p = -nbar;
    let mut out = Vec::with_capacity(len);
    for n in 0..len {
        out.push(ln_p.exp());
        ln_p += ln_nbar - ((n + 1) as f64).ln();
    }
    out
}

fn check_mean(nbar: f64) -> Result<()> {
    if nbar.is_finite() && nbar >= 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!(
            "mean photon number must be finite and non-negative, got {nbar}"
        )))
    }
}

fn check_epsilon(epsilon: f64) -> Result<()> {
    if epsilon > 0.0 && epsilon < 1.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(epsilon))
    }
}
