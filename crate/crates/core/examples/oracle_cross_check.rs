//! Closed forms against brute-force evolution of the truncated three-part system.
//!
//! cargo run --release --example oracle_cross_check

use num_complex::Complex64 as C64;
use raman_core::analytic::{tripartite_coefficients, FieldDensity, ModelParams};
use raman_core::oracle::{build_blocks, evolve_state, TruncatedState};
use raman_core::presets::Figure;
use raman_core::states::PhotonDistribution;
use raman_core::verify::{verify, CutoffOverrides};

fn main() -> raman_core::Result<()> {
    for fig in [Figure::Fig2, Figure::Fig3] {
        println!("== {fig}");
        println!("{}", verify(&fig.scenario(), CutoffOverrides::default())?);
    }

    // full three-part density operator, with nonzero mode frequencies
    let d1 = PhotonDistribution::coherent(1.0, 1e-14)?;
    let d2 = PhotonDistribution::coherent(0.8, 1e-14)?;
    let amps = |d: &PhotonDistribution| -> Vec<C64> {
        d.amplitudes().unwrap().into_iter().map(|a| C64::new(a, 0.0)).collect()
    };
    let (psi1, psi2) = (amps(&d1), amps(&d2));
    let params = ModelParams::new(1.0, 1.1, 10.0)?.with_mode_frequencies(0.5, 0.3)?;
    let rho0 = FieldDensity::pure(&psi1, &psi2)?;
    let (n1, n2) = (d1.n_max(), d2.n_max() + 1);
    let blocks = build_blocks(&params, n1, n2)?;
    let start = TruncatedState::product(1, &psi1, &psi2, n1, n2)?;
    for tau in [5.0, 50.0] {
        let a = tripartite_coefficients(&rho0, &params, tau).to_density_matrix();
        let o = evolve_state(&start, &blocks, tau)?.to_density_matrix();
        println!("tau = {tau}: max |rho_analytic - rho_oracle| = {:.2e}", (a.entries() - o.entries()).camax());
    }

    // forcing a cutoff that is too small is reported, not silently accepted
    if let Err(e) = verify(&Figure::Fig3.scenario(), CutoffOverrides { n1_max: None, n2_max: Some(2) }) {
        println!("n2_max = 2: {e}");
    }
    Ok(())
}
