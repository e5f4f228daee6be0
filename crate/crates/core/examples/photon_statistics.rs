//! Truncated photon-number distributions and their cutoffs.
//!
//! cargo run --example photon_statistics

use raman_core::states::{DistKind, PhotonDistribution, DEFAULT_EPSILON};

fn main() -> raman_core::Result<()> {
    let kinds = [
        DistKind::Fock(5),
        DistKind::Coherent(5.0),
        DistKind::Coherent(10.5),
        DistKind::Thermal(10.1),
    ];
    println!("{:<16} {:>6} {:>12} {:>12}", "preparation", "n_max", "tail bound", "mean");
    for kind in kinds {
        let d = PhotonDistribution::from_kind(kind, DEFAULT_EPSILON)?;
        println!("{:<16} {:>6} {:>12.3e} {:>12.6}", kind.to_string(), d.n_max(), d.tail_bound(), d.mean());
    }

    // a looser tolerance trades accuracy for a shorter sum
    for eps in [1e-4, 1e-8, 1e-12] {
        let d = PhotonDistribution::thermal(10.1, eps)?;
        println!("thermal:10.1 at eps = {eps:e}: n_max = {}", d.n_max());
    }

    let d = PhotonDistribution::coherent(2.0, 1e-6)?;
    let bars: String = d
        .weights()
        .iter()
        .enumerate()
        .map(|(n, p)| format!("{n:>3} {:<40} {p:.4}\n", "#".repeat((p * 150.0) as usize)))
        .collect();
    print!("coherent:2 weights\n{bars}");
    Ok(())
}
