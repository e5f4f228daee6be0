//! Scenario description, validation and evaluation on a uniform time grid.
//!
//! A scenario is assembled from `key=value` pairs (a file, command-line flags,
//! or both with flags taking precedence) and then validated once.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use rayon::prelude::*;

use crate::analytic::{rephasing_time, AtomMode1Dynamics, InversionModel, ModelParams};
use crate::error::{Error, Result};
use crate::semiclassical;
use crate::series::TimeSeries;
use crate::states::{DistKind, PhotonDistribution, DEFAULT_EPSILON};

pub const DEFAULT_STEPS: usize = 4000;
pub const DEFAULT_DELTA_OVER_G1: f64 = 10.0;
/// Default grid length in units of the fundamental rephasing time.
pub const QUANTUM_PERIODS: f64 = 2.5;
/// Default grid length in units of the semiclassical period.
pub const SEMICLASSICAL_PERIODS: f64 = 3.0;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Model {
    Quantum,
    Semiclassical,
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "quantum" => Ok(Model::Quantum),
            "semiclassical" => Ok(Model::Semiclassical),
            _ => Err(Error::Parse(format!("unknown model {s:?} (quantum | semiclassical)"))),
        }
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Model::Quantum => "quantum",
            Model::Semiclassical => "semiclassical",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Observable {
    Inversion,
    Negativity,
    LinearEntropy,
}

impl Observable {
    pub const ALL: [Observable; 3] = [Observable::Inversion, Observable::Negativity, Observable::LinearEntropy];

    pub fn name(&self) -> &'static str {
        match self {
            Observable::Inversion => "inversion",
            Observable::Negativity => "negativity",
            Observable::LinearEntropy => "linear-entropy",
        }
    }
}

impl FromStr for Observable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        Observable::ALL
            .into_iter()
            .find(|o| o.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown observable {s:?} (inversion | negativity | linear-entropy)")))
    }
}

impl fmt::Display for Observable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Parses a comma-separated observable list, dropping duplicates.
pub fn parse_observables(s: &str) -> Result<Vec<Observable>> {
    let mut out: Vec<Observable> = Vec::new();
    for part in s.split(',').filter(|p| !p.trim().is_empty()) {
        let o: Observable = part.parse()?;
        if !out.contains(&o) {
            out.push(o);
        }
    }
    if out.is_empty() {
        return Err(Error::Parse("observable list is empty".into()));
    }
    Ok(out)
}

/// Unvalidated scenario fields. Later sources override earlier ones through [`merge`](Self::merge).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct ScenarioInput {
    pub model: Option<Model>,
    pub mode1: Option<DistKind>,
    pub mode2: Option<DistKind>,
    /// `r = g2/g1` (quantum) or `r' = |Ω_L|/g` (semiclassical).
    pub ratio: Option<f64>,
    pub delta_over_g1: Option<f64>,
    pub observables: Option<Vec<Observable>>,
    pub tau_max: Option<f64>,
    pub steps: Option<usize>,
    pub epsilon: Option<f64>,
}

impl ScenarioInput {
    /// Sets one field from its textual key. Both `delta_over_g1` and
    /// `delta-over-g1` spellings are accepted, and `r_prime` is an alias for `r`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let num = |v: &str| -> Result<f64> {
            v.trim()
                .parse::<f64>()
                .map_err(|_| Error::Parse(format!("{key}: expected a number, got {v:?}")))
        };
        match key.trim().replace('-', "_").as_str() {
            "model" => self.model = Some(value.parse()?),
            "mode1" => self.mode1 = Some(value.parse()?),
            "mode2" => self.mode2 = Some(value.parse()?),
            "r" | "r_prime" => self.ratio = Some(num(value)?),
            "delta_over_g1" => self.delta_over_g1 = Some(num(value)?),
            "observables" => self.observables = Some(parse_observables(value)?),
            "tau_max" => self.tau_max = Some(num(value)?),
            "steps" => {
                let steps = value
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("steps: expected an integer, got {value:?}")))?;
                self.steps = Some(steps);
            }
            "epsilon" => self.epsilon = Some(num(value)?),
            other => return Err(Error::Parse(format!("unknown scenario key {other:?}"))),
        }
        Ok(())
    }

    /// Reads `key=value` lines; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut input = Self::default();
        for (i, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("line {}: expected key=value, got {line:?}", i + 1)))?;
            input.set(k, v)?;
        }
        Ok(input)
    }

    pub fn from_file(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    /// Fields set in `over` replace those in `self`.
    pub fn merge(self, over: ScenarioInput) -> Self {
        Self {
            model: over.model.or(self.model),
            mode1: over.mode1.or(self.mode1),
            mode2: over.mode2.or(self.mode2),
            ratio: over.ratio.or(self.ratio),
            delta_over_g1: over.delta_over_g1.or(self.delta_over_g1),
            observables: over.observables.or(self.observables),
            tau_max: over.tau_max.or(self.tau_max),
            steps: over.steps.or(self.steps),
            epsilon: over.epsilon.or(self.epsilon),
        }
    }

    /// Fills defaults and validates.
    pub fn build(self) -> Result<Scenario> {
        let model = self.model.unwrap_or(Model::Quantum);
        let mode1 = self
            .mode1
            .ok_or_else(|| Error::InvalidScenario("mode1 preparation is required".into()))?;
        let ratio = self.ratio.unwrap_or(1.0);
        let delta_over_g1 = self.delta_over_g1.unwrap_or(DEFAULT_DELTA_OVER_G1);
        let epsilon = self.epsilon.unwrap_or(DEFAULT_EPSILON);
        let steps = self.steps.unwrap_or(DEFAULT_STEPS);
        let observables = self.observables.unwrap_or_else(|| match model {
            Model::Quantum => vec![Observable::Inversion],
            Model::Semiclassical => vec![Observable::Inversion, Observable::Negativity],
        });
        let mut s = Scenario {
            model,
            mode1,
            mode2: self.mode2,
            ratio,
            delta_over_g1,
            observables,
            tau_max: f64::NAN,
            steps,
            epsilon,
        };
        s.check_fields()?;
        s.tau_max = match self.tau_max {
            Some(t) => t,
            None => s.default_tau_max()?,
        };
        s.validate()?;
        Ok(s)
    }
}

/// A validated run description. Time is `τ = g1 t` in the quantum model and
/// `τ' = g|Ω_L| t/Δ` in the semiclassical one.
#[derive(Clone, Debug, PartialEq)]
pub struct Scenario {
    pub model: Model,
    pub mode1: DistKind,
    /// Absent in the semiclassical model, where mode 2 is a classical drive.
    pub mode2: Option<DistKind>,
    pub ratio: f64,
    pub delta_over_g1: f64,
    pub observables: Vec<Observable>,
    pub tau_max: f64,
    pub steps: usize,
    pub epsilon: f64,
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidScenario(msg.into())
}

impl Scenario {
    /// Checks everything except the grid length.
    fn check_fields(&self) -> Result<()> {
        if !(self.ratio.is_finite() && self.ratio > 0.0) {
            return Err(invalid(format!("coupling ratio must be finite and positive, got {}", self.ratio)));
        }
        if !(self.delta_over_g1.is_finite() && self.delta_over_g1 > 0.0) {
            return Err(invalid(format!("delta_over_g1 must be finite and positive, got {}", self.delta_over_g1)));
        }
        if !(self.epsilon > 0.0 && self.epsilon < 1.0) {
            return Err(invalid(format!("epsilon must lie in (0, 1), got {}", self.epsilon)));
        }
        if self.steps < 2 {
            return Err(invalid(format!("steps must be at least 2, got {}", self.steps)));
        }
        if self.observables.is_empty() {
            return Err(invalid("no observables requested"));
        }
        let wants_entanglement = self
            .observables
            .iter()
            .any(|o| matches!(o, Observable::Negativity | Observable::LinearEntropy));
        match self.model {
            Model::Quantum => {
                let mode2 = self
                    .mode2
                    .ok_or_else(|| invalid("the quantum model needs a mode2 preparation"))?;
                if wants_entanglement {
                    let ok = matches!(self.mode1, DistKind::Fock(n) if n >= 1)
                        && matches!(mode2, DistKind::Coherent(_));
                    if !ok {
                        return Err(invalid(format!(
                            "negativity and linear-entropy require mode1 = fock:N with N >= 1 and \
                             mode2 = coherent (the reduced atom-mode-1 closed form assumes |1; N> x |alpha>); \
                             got mode1 = {}, mode2 = {mode2}",
                            self.mode1
                        )));
                    }
                }
            }
            Model::Semiclassical => {
                if let Some(m2) = self.mode2 {
                    return Err(invalid(format!(
                        "the semiclassical model treats mode 2 as a classical drive; remove mode2 = {m2}"
                    )));
                }
                match self.mode1 {
                    DistKind::Fock(0) if wants_entanglement => {
                        return Err(invalid("negativity and linear-entropy need mode1 = fock:N with N >= 1"))
                    }
                    DistKind::Fock(_) => {}
                    other => {
                        return Err(invalid(format!(
                            "the semiclassical model requires mode1 = fock:N, got {other}"
                        )))
                    }
                }
            }
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        self.check_fields()?;
        if !(self.tau_max.is_finite() && self.tau_max > 0.0) {
            return Err(invalid(format!("tau_max must be finite and positive, got {}", self.tau_max)));
        }
        Ok(())
    }

    /// Quantum-model parameters with `g1 = 1`.
    pub fn params(&self) -> Result<ModelParams> {
        ModelParams::from_ratio(self.ratio, self.delta_over_g1)
    }

    pub fn distributions(&self) -> Result<(PhotonDistribution, PhotonDistribution)> {
        let mode2 = self
            .mode2
            .ok_or_else(|| invalid("the quantum model needs a mode2 preparation"))?;
        Ok((
            PhotonDistribution::from_kind(self.mode1, self.epsilon)?,
            PhotonDistribution::from_kind(mode2, self.epsilon)?,
        ))
    }

    /// Fundamental rephasing time (quantum) or period (semiclassical).
    pub fn fundamental_time(&self) -> Result<f64> {
        match self.model {
            Model::Quantum => {
                let (d1, d2) = self.distributions()?;
                Ok(rephasing_time(&d1, &d2, &self.params()?))
            }
            Model::Semiclassical => Ok(semiclassical::period(self.fock_number(), self.ratio)),
        }
    }

    fn default_tau_max(&self) -> Result<f64> {
        let periods = match self.model {
            Model::Quantum => QUANTUM_PERIODS,
            Model::Semiclassical => SEMICLASSICAL_PERIODS,
        };
        Ok(periods * self.fundamental_time()?)
    }

    fn fock_number(&self) -> usize {
        match self.mode1 {
            DistKind::Fock(n) => n,
            _ => 0,
        }
    }

    /// Uniform grid `τ_k = k τ_max/(steps − 1)`.
    pub fn grid(&self) -> Vec<f64> {
        let h = self.tau_max / (self.steps - 1) as f64;
        (0..self.steps).map(|k| k as f64 * h).collect()
    }

    /// All scenario fields as ordered `key=value` pairs.
    pub fn metadata(&self) -> Vec<(String, String)> {
        let obs: Vec<_> = self.observables.iter().map(|o| o.name()).collect();
        let ratio_key = match self.model {
            Model::Quantum => "r",
            Model::Semiclassical => "r_prime",
        };
        let time_axis = match self.model {
            Model::Quantum => "g1*t",
            Model::Semiclassical => "g*|Omega_L|*t/Delta",
        };
        let mut m = vec![
            ("model".to_string(), self.model.to_string()),
            ("mode1".to_string(), self.mode1.to_string()),
        ];
        if let Some(m2) = self.mode2 {
            m.push(("mode2".into(), m2.to_string()));
        }
        m.extend([
            (ratio_key.to_string(), format!("{}", self.ratio)),
            ("delta_over_g1".into(), format!("{}", self.delta_over_g1)),
            ("observables".into(), obs.join(",")),
            ("tau_max".into(), format!("{:e}", self.tau_max)),
            ("steps".into(), self.steps.to_string()),
            ("epsilon".into(), format!("{:e}", self.epsilon)),
            ("time_axis".into(), time_axis.into()),
        ]);
        m
    }
}

/// Per-grid-point evaluator for one scenario.
enum Evaluator {
    Quantum {
        inversion: InversionModel,
        reduced: Option<AtomMode1Dynamics>,
    },
    Semiclassical {
        n: usize,
        r_prime: f64,
    },
}

impl Evaluator {
    fn new(s: &Scenario) -> Result<Self> {
        match s.model {
            Model::Quantum => {
                let params = s.params()?;
                let (d1, d2) = s.distributions()?;
                let needs_reduced = s.observables.iter().any(|o| *o != Observable::Inversion);
                let reduced = if needs_reduced {
                    Some(AtomMode1Dynamics::new(s.fock_number(), d2.kind().mean(), &params, s.epsilon)?)
                } else {
                    None
                };
                Ok(Evaluator::Quantum {
                    inversion: InversionModel::new(&d1, &d2, &params),
                    reduced,
                })
            }
            Model::Semiclassical => Ok(Evaluator::Semiclassical {
                n: s.fock_number(),
                r_prime: s.ratio,
            }),
        }
    }

    fn eval(&self, obs: Observable, tau: f64) -> Result<f64> {
        match self {
            Evaluator::Quantum { inversion, reduced } => Ok(match obs {
                Observable::Inversion => inversion.eval(tau),
                Observable::Negativity => reduced.as_ref().expect("validated").negativity(tau),
                Observable::LinearEntropy => reduced.as_ref().expect("validated").linear_entropy(tau),
            }),
            Evaluator::Semiclassical { n, r_prime } => match obs {
                Observable::Inversion => semiclassical::inversion_sc(*n, *r_prime, tau),
                Observable::Negativity => semiclassical::negativity_sc(*n, *r_prime, tau),
                Observable::LinearEntropy => {
                    // the atom–mode-1 state is pure, so ζ = 2p₂(1 − p₂) with p₂ = (W' + 1)/2
                    let p2 = (semiclassical::inversion_sc(*n, *r_prime, tau)? + 1.0) / 2.0;
                    Ok(2.0 * p2 - 2.0 * p2 * p2)
                }
            },
        }
    }
}

/// Evaluates every requested observable on the scenario grid.
pub fn run_scenario(s: &Scenario) -> Result<TimeSeries> {
    s.validate()?;
    let eval = Evaluator::new(s)?;
    let tau = s.grid();
    let rows: Vec<Vec<f64>> = tau
        .par_iter()
        .map(|&t| s.observables.iter().map(|&o| eval.eval(o, t)).collect::<Result<Vec<_>>>())
        .collect::<Result<_>>()?;
    let columns = s
        .observables
        .iter()
        .enumerate()
        .map(|(j, o)| (o.name().to_string(), rows.iter().map(|r| r[j]).collect()))
        .collect();
    let mut series = TimeSeries::new(tau, columns)?;
    for (k, v) in s.metadata() {
        series.push_metadata(k, v);
    }
    Ok(series)
}
