//! Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

use std::f64::consts::{FRAC_PI_4, PI, SQRT_2};
use std::time::Instant;

use nalgebra::DMatrix;
use num_complex::Complex64 as C64;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use raman_core::analytic::{rabi_frequency, ModelParams};
use raman_core::oracle::{build_blocks, matrix_linear_entropy, prepare, pt_negativity, DensityMatrix, ATOM, MODE1};
use raman_core::presets::{run_figure, Figure};
use raman_core::revivals::{detect_revivals, revival_indices, DEFAULT_WINDOW};
use raman_core::scenario::{run_scenario, Observable, ScenarioInput};
use raman_core::semiclassical::{self, evaluate};
use raman_core::states::PhotonDistribution;
use raman_core::verify::{verify, CutoffOverrides};

type Outcome = (bool, String);

fn max_abs(it: impl Iterator<Item = f64>) -> f64 {
    it.fold(0.0, |m, x| m.max(x.abs()))
}

/// Oracle equivalence for the fig2 and fig3 presets on the default 4000-point grid.
fn oracle_equivalence() -> Outcome {
    let start = Instant::now();
    let mut worst = 0.0f64;
    let mut parts = Vec::new();
    for fig in [Figure::Fig2, Figure::Fig3] {
        let s = fig.scenario();
        let report = match verify(&s, CutoffOverrides::default()) {
            Ok(r) => r,
            Err(e) => return (false, format!("{fig}: {e}")),
        };
        for o in &s.observables {
            let dev = report.max_deviation(*o).unwrap_or(f64::INFINITY);
            worst = worst.max(dev);
            parts.push(format!("{fig} {o} {dev:.2e}"));
        }
        if s.steps != 4000 || s.epsilon != 1e-12 {
            return (false, format!("{fig} preset grid is not the 4000-point, 1e-12 default"));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    (worst < 1e-9 && secs < 30.0, format!("{}; {secs:.2} s", parts.join(", ")))
}

/// Block eigen-splittings equal 2Ω for all n1, n2 ≤ 30.
fn rabi_splitting() -> Outcome {
    let mut worst = 0.0f64;
    for params in [
        ModelParams::from_ratio(1.023, 10.0).unwrap(),
        ModelParams::from_ratio(1.012, 10.0).unwrap(),
        ModelParams::new(0.7, 1.9, 25.0).unwrap().with_mode_frequencies(3.0, 1.0).unwrap(),
    ] {
        let blocks = build_blocks(&params, 31, 31).unwrap();
        for n1 in 1..=30 {
            for n2 in 0..=30 {
                let split = blocks.pair(n1, n2).and_then(|b| b.splitting()).unwrap_or(f64::NAN);
                let expected = 2.0 * rabi_frequency(n1, n2, &params) / params.g1();
                worst = worst.max((split - expected).abs());
            }
        }
    }
    (worst < 1e-12, format!("max |splitting - 2 Omega| = {worst:.2e} over 3 parameter sets"))
}

/// With g1 = g2 the inversion is periodic in 2πΔ/g1.
fn periodicity() -> Outcome {
    let mut input = Figure::Fig1a.input();
    input.ratio = Some(1.0);
    let s = input.build().unwrap();
    let period = 2.0 * PI * s.delta_over_g1;
    let (d1, d2) = s.distributions().unwrap();
    let model = raman_core::analytic::InversionModel::new(&d1, &d2, &s.params().unwrap());
    let dev = max_abs((0..=4000).map(|k| {
        let t = k as f64 * period / 4000.0;
        model.eval(t + period) - model.eval(t)
    }));
    (dev < 1e-9, format!("max |W(t + 2 pi Delta/g1) - W(t)| = {dev:.2e}"))
}

/// Revival peaks coincide for coherent and thermal mode 2 with g1 = g2; the thermal ones are lower.
fn revival_statistics() -> Outcome {
    let mut runs = Vec::new();
    for fig in [Figure::Fig1a, Figure::Fig1b] {
        let mut input = fig.input();
        input.ratio = Some(1.0);
        let ts = run_scenario(&input.build().unwrap()).unwrap();
        let w = ts.column("inversion").unwrap().to_vec();
        let mean = w.iter().sum::<f64>() / w.len() as f64;
        let idx = revival_indices(&w, DEFAULT_WINDOW).unwrap();
        let amps: Vec<f64> = idx.iter().map(|&i| (w[i] - mean).abs()).collect();
        let times: Vec<f64> = idx.iter().map(|&i| ts.tau()[i]).collect();
        runs.push((times, amps, ts.tau()[1] - ts.tau()[0]));
    }
    let (coh, th) = (&runs[0], &runs[1]);
    let step = coh.2.max(th.2);
    let same_count = coh.0.len() == th.0.len() && coh.0.len() >= 2;
    let coincide = same_count && coh.0.iter().zip(&th.0).all(|(a, b)| (a - b).abs() <= step);
    let suppressed = same_count && coh.1.iter().zip(&th.1).all(|(c, t)| t < c);
    let fmt = |v: &[f64]| v.iter().map(|x| format!("{x:.3}")).collect::<Vec<_>>().join(" ");
    (
        coincide && suppressed,
        format!(
            "peaks coherent [{}] thermal [{}] (step {step:.4}); amplitudes coherent [{}] thermal [{}]",
            fmt(&coh.0),
            fmt(&th.0),
            fmt(&coh.1),
            fmt(&th.1)
        ),
    )
}

/// Negativity peaks between revivals and is small at them.
fn entanglement_placement() -> Outcome {
    let ts = run_figure(Figure::Fig3).unwrap();
    let tau = ts.tau();
    let w = ts.column("inversion").unwrap();
    let n = ts.column("negativity").unwrap();
    let peaks = detect_revivals(tau, w, DEFAULT_WINDOW).unwrap();
    let (imax, nmax) = n
        .iter()
        .enumerate()
        .fold((0, f64::MIN), |acc, (i, &v)| if v > acc.1 { (i, v) } else { acc });
    let tmax = tau[imax];
    let between = peaks.windows(2).any(|p| p[0] < tmax && tmax < p[1]);
    let at_peaks: Vec<f64> = peaks
        .iter()
        .map(|t| n[tau.iter().position(|x| x == t).unwrap()] / nmax)
        .collect();
    let small = at_peaks.iter().all(|&f| f < 0.25);
    let peaks_s: Vec<String> = peaks.iter().map(|t| format!("{t:.2}")).collect();
    let frac_s: Vec<String> = at_peaks.iter().map(|f| format!("{:.1}%", 100.0 * f)).collect();
    (
        between && small,
        format!(
            "W revival peaks [{}]; max N = {nmax:.4} at tau = {tmax:.2} ({}); N at peaks / max = [{}] ({})",
            peaks_s.join(" "),
            if between { "between peaks" } else { "NOT between consecutive peaks" },
            frac_s.join(" "),
            if small { "all < 25%" } else { "some >= 25%" }
        ),
    )
}

/// Partially classical case with N = 2, r' = √2.
fn semiclassical_limit() -> Outcome {
    let (n, rp) = (2usize, SQRT_2);
    let mut input = Figure::Fig4.input();
    input.ratio = Some(rp);
    let ts = run_scenario(&input.build().unwrap()).unwrap();
    // θ = (N + r'²)τ'/2r' = √2 τ'; add the analytic extremal times θ = kπ/4
    let rate = (n as f64 + rp * rp) / (2.0 * rp);
    let mut times: Vec<f64> = ts.tau().to_vec();
    let tau_end = *times.last().unwrap();
    let mut k = 0;
    loop {
        let t = k as f64 * FRAC_PI_4 / rate;
        if t > tau_end {
            break;
        }
        times.push(t);
        k += 1;
    }
    let obs: Vec<_> = times.iter().map(|&t| evaluate(n, rp, t).unwrap()).collect();
    let max_w = obs.iter().map(|o| o.inversion).fold(f64::MIN, f64::max);
    let max_n = obs.iter().map(|o| o.negativity).fold(f64::MIN, f64::max);
    let worst_at_poles = obs
        .iter()
        .filter(|o| o.inversion.abs() > 1.0 - 1e-9)
        .map(|o| o.negativity)
        .fold(0.0, f64::max);
    let poles = obs.iter().filter(|o| o.inversion.abs() > 1.0 - 1e-9).count();
    let period = semiclassical::period(n, rp);
    let per_dev = max_abs(ts.tau().iter().flat_map(|&t| {
        let (a, b) = (evaluate(n, rp, t).unwrap(), evaluate(n, rp, t + period).unwrap());
        [a.inversion - b.inversion, a.negativity - b.negativity]
    }));
    let ok = (max_w - 1.0).abs() <= 1e-12 && worst_at_poles < 1e-12 && (max_n - 0.5).abs() <= 1e-12 && per_dev < 1e-13;
    (
        ok,
        format!(
            "max W' = 1 {:+.1e}; max N' where |W'| > 1-1e-9 = {worst_at_poles:.1e} ({poles} points); \
             max N' = 0.5 {:+.1e}; periodicity {per_dev:.1e}",
            max_w - 1.0,
            max_n - 0.5
        ),
    )
}

/// W(0) = −1, 𝒩(0) = 0, ζ(0) = 0 for every preset and a sweep of valid scenarios.
fn trivial_anchors() -> Outcome {
    let mut inputs: Vec<ScenarioInput> = Figure::ALL.iter().map(|f| f.input()).collect();
    let preps = ["fock:0", "fock:1", "fock:7", "coherent:0", "coherent:3.3", "thermal:0", "thermal:2.2"];
    for m1 in preps {
        for m2 in preps {
            let mut i = ScenarioInput::default();
            i.set("mode1", m1).unwrap();
            i.set("mode2", m2).unwrap();
            i.set("r", "0.83").unwrap();
            if m1.starts_with("fock") && m1 != "fock:0" && m2.starts_with("coherent") {
                i.set("observables", "inversion,negativity,linear-entropy").unwrap();
            }
            inputs.push(i);
        }
    }
    for m1 in ["fock:0", "fock:1", "fock:4"] {
        let mut i = ScenarioInput::default();
        i.set("model", "semiclassical").unwrap();
        i.set("mode1", m1).unwrap();
        i.set("r", "0.6").unwrap();
        let obs = if m1 == "fock:0" { "inversion" } else { "inversion,negativity,linear-entropy" };
        i.set("observables", obs).unwrap();
        inputs.push(i);
    }
    let mut bad = Vec::new();
    let mut checked = 0;
    for mut input in inputs {
        input.steps = Some(2);
        let s = match input.build() {
            Ok(s) => s,
            Err(e) => {
                bad.push(e.to_string());
                continue;
            }
        };
        let ts = run_scenario(&s).unwrap();
        for o in &s.observables {
            let v = ts.column(o.name()).unwrap()[0];
            let want = if *o == Observable::Inversion { -1.0 } else { 0.0 };
            if (v - want).abs() > f64::EPSILON {
                bad.push(format!("{} x {:?}: {o}(0) = {v:e}", s.mode1, s.mode2));
            }
            checked += 1;
        }
    }
    (bad.is_empty(), format!("{checked} initial values checked; violations: {bad:?}"))
}

fn random_density(rng: &mut StdRng, d: usize) -> DMatrix<C64> {
    let g = DMatrix::from_fn(d, d, |_, _| C64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let rho = &g * g.adjoint();
    let tr = rho.trace();
    rho / tr
}

/// Separable products give zero negativity; an embedded Bell pair gives 1/2.
fn negativity_sanity() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x5eed);
    let mut worst = 0.0f64;
    for trial in 0..200 {
        let d = 2 + trial % 9;
        let rho = random_density(&mut rng, 2).kronecker(&random_density(&mut rng, d));
        let dm = DensityMatrix::new(rho, vec![2, d]).unwrap();
        worst = worst.max(pt_negativity(&dm, 0).unwrap()).max(pt_negativity(&dm, 1).unwrap());
    }
    let d = 6;
    let mut psi = vec![C64::new(0.0, 0.0); 2 * d];
    psi[0] = C64::new(1.0 / SQRT_2, 0.0); // |1; 0⟩
    psi[d + 1] = C64::new(1.0 / SQRT_2, 0.0); // |2; 1⟩
    let bell = pt_negativity(&DensityMatrix::from_pure(&psi, vec![2, d]).unwrap(), 1).unwrap();
    (
        worst < 1e-12 && (bell - 0.5).abs() <= 1e-12,
        format!("max over 200 random products = {worst:.1e}; embedded Bell state = 0.5 {:+.1e}", bell - 0.5),
    )
}

/// Fock mode 2: the atom gets mixed but never entangled with mode 1.
fn mixedness_without_entanglement() -> Outcome {
    let params = ModelParams::from_ratio(1.023, 10.0).unwrap();
    let (d1, d2) = (PhotonDistribution::fock(5), PhotonDistribution::fock(5));
    let ens = prepare(&d1, &d2, None).unwrap();
    let (c1, c2) = ens.cutoffs();
    let blocks = build_blocks(&params, c1, c2).unwrap();
    let omega = rabi_frequency(5, 5, &params) / params.g1();
    let mut max_neg = 0.0f64;
    for k in 0..=400 {
        let tau = k as f64 * 2.0 * PI / omega / 400.0;
        let s = ens.evolve(&blocks, tau).unwrap();
        max_neg = max_neg.max(pt_negativity(&s.reduce(&[ATOM, MODE1]).unwrap(), 0).unwrap());
    }
    let mid = ens.evolve(&blocks, FRAC_PI_4 / omega).unwrap();
    let zeta = matrix_linear_entropy(&mid.reduce(&[ATOM]).unwrap());
    (
        max_neg < 1e-12 && zeta > 0.3,
        format!("max oracle negativity over one Rabi period = {max_neg:.1e}; atomic linear entropy at Omega tau = pi/4: {zeta:.5}"),
    )
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("oracle equivalence", oracle_equivalence),
        ("Rabi-frequency validation", rabi_splitting),
        ("periodicity", periodicity),
        ("revival-time statistics independence", revival_statistics),
        ("entanglement placement", entanglement_placement),
        ("semiclassical limit", semiclassical_limit),
        ("trivial anchors", trivial_anchors),
        ("entanglement-measure sanity", negativity_sanity),
        ("mixedness without entanglement", mixedness_without_entanglement),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let (ok, detail) = check();
        if !ok {
            failed += 1;
        }
        println!("criterion {} [{name}]: {} -- {detail}", i + 1, if ok { "PASS" } else { "FAIL" });
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
