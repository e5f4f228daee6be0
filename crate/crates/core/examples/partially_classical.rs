//! Mode 2 replaced by a classical drive: periodic inversion and negativity,
//! with complete transfer when r'^2 = N.
//!
//! cargo run --example partially_classical

use std::f64::consts::SQRT_2;

use raman_core::presets::{run_figure, Figure};
use raman_core::semiclassical::{evaluate, period};

fn main() -> raman_core::Result<()> {
    let ts = run_figure(Figure::Fig4)?;
    let w = ts.column("inversion").unwrap();
    let n = ts.column("negativity").unwrap();
    let p = period(2, 1.41);
    println!("N = 2, r' = 1.41: period {p:.4}, max W' {:.6}, max N' {:.6}",
        w.iter().copied().fold(f64::MIN, f64::max),
        n.iter().copied().fold(f64::MIN, f64::max));

    println!("{:>8} {:>10} {:>10}   (N = 2, r' = sqrt 2)", "tau'", "W'", "N'");
    let p = period(2, SQRT_2);
    for k in 0..=16 {
        let t = p * k as f64 / 16.0;
        let o = evaluate(2, SQRT_2, t)?;
        println!("{t:>8.4} {:>+10.6} {:>10.6}", o.inversion, o.negativity);
    }
    for (nn, rp) in [(1, 0.5), (4, 2.0), (4, 1.0)] {
        let peak = evaluate(nn, rp, period(nn, rp) / 2.0)?.inversion;
        println!("N = {nn}, r' = {rp}: largest inversion {peak:+.4}");
    }
    Ok(())
}
