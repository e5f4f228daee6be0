//! Inversion for mode 1 in a Fock state and mode 2 coherent, with the
//! rephasing time that sets the revival spacing.
//!
//! cargo run --release --example fock_coherent_inversion

use raman_core::analytic::{rabi_frequency, rephasing_time, InversionModel, ModelParams};
use raman_core::states::PhotonDistribution;

fn main() -> raman_core::Result<()> {
    let params = ModelParams::from_ratio(1.023, 10.0)?;
    let d1 = PhotonDistribution::fock(5);
    let d2 = PhotonDistribution::coherent(5.0, 1e-12)?;
    let model = InversionModel::new(&d1, &d2, &params);
    let t_r = rephasing_time(&d1, &d2, &params);
    println!("rephasing time 2 pi Delta/r^2 = {t_r:.4}");
    for n2 in [0, 5, 10] {
        println!("Omega(5, {n2})/g1 = {:.6}", rabi_frequency(5, n2, &params) / params.g1());
    }

    // coarse text plot over two and a half rephasing times
    let rows = 50;
    for k in 0..=rows {
        let tau = 2.5 * t_r * k as f64 / rows as f64;
        let w = model.eval(tau);
        let col = ((w + 1.0) * 30.0).round() as usize;
        println!("{tau:>8.2} {w:>+8.4} |{}*", " ".repeat(col));
    }
    Ok(())
}
