//! Atom–mode-1 negativity next to the atomic linear entropy. A Fock state in
//! mode 2 mixes the atom without ever entangling it with mode 1.
//!
//! cargo run --release --example entanglement_dynamics

use std::f64::consts::FRAC_PI_4;

use raman_core::analytic::{rabi_frequency, AtomMode1Dynamics, ModelParams};
use raman_core::oracle::{build_blocks, matrix_linear_entropy, prepare, pt_negativity, ATOM, MODE1};
use raman_core::revivals::{detect_revivals, DEFAULT_WINDOW};
use raman_core::presets::{run_figure, Figure};
use raman_core::states::PhotonDistribution;

fn main() -> raman_core::Result<()> {
    let ts = run_figure(Figure::Fig3)?;
    let (tau, w) = (ts.tau(), ts.column("inversion").unwrap());
    let neg = ts.column("negativity").unwrap();
    let zeta = ts.column("linear-entropy").unwrap();
    let peaks = detect_revivals(tau, w, DEFAULT_WINDOW)?;
    println!("inversion revival peaks: {peaks:.2?}");
    for t in &peaks {
        let i = tau.iter().position(|x| x == t).unwrap();
        println!("  tau = {t:>7.2}: negativity {:.4}, linear entropy {:.4}", neg[i], zeta[i]);
    }
    let (i, n) = neg.iter().enumerate().fold((0, 0.0), |a, (i, &v)| if v > a.1 { (i, v) } else { a });
    println!("largest negativity {n:.4} at tau = {:.2}", tau[i]);

    let params = ModelParams::from_ratio(1.023, 10.0)?;
    let dynamics = AtomMode1Dynamics::new(5, 5.0, &params, 1e-12)?;
    let s = dynamics.state(30.0);
    println!(
        "reduced state at tau = 30: p(1;N) = {:.4}, p(2;N-1) = {:.4}, |coherence| = {:.4}",
        s.pop_1n,
        s.pop_2nm1,
        s.coherence.norm()
    );

    // mode 2 in |5>: the two branches carry orthogonal mode-2 states
    let ens = prepare(&PhotonDistribution::fock(5), &PhotonDistribution::fock(5), None)?;
    let (c1, c2) = ens.cutoffs();
    let blocks = build_blocks(&params, c1, c2)?;
    let tau = FRAC_PI_4 / (rabi_frequency(5, 5, &params) / params.g1());
    let state = ens.evolve(&blocks, tau)?;
    println!(
        "fock:5 x fock:5 at Omega tau = pi/4: negativity {:.1e}, atomic linear entropy {:.4}",
        pt_negativity(&state.reduce(&[ATOM, MODE1])?, 0)?,
        matrix_linear_entropy(&state.reduce(&[ATOM])?)
    );
    Ok(())
}
