//! Collapse and revival of the atomic inversion for coherent and thermal
//! mode-2 fields, and the revival times found in each series.
//!
//! cargo run --release --example collapse_revival [-- out_dir]

use raman_core::presets::{run_figure, Figure};
use raman_core::revivals::{detect_revivals, DEFAULT_WINDOW};
use raman_core::scenario::run_scenario;

fn main() -> raman_core::Result<()> {
    let out_dir = std::env::args().nth(1);
    for fig in [Figure::Fig1a, Figure::Fig1b] {
        let ts = run_figure(fig)?;
        let w = ts.column("inversion").unwrap();
        let peaks = detect_revivals(ts.tau(), w, DEFAULT_WINDOW)?;
        println!("{fig} ({}): revival peaks at {peaks:.2?}", fig.scenario().mode2.unwrap());
        if let Some(dir) = &out_dir {
            let path = std::path::Path::new(dir).join(format!("{fig}.csv"));
            ts.write_csv(&path)?;
            println!("  wrote {}", path.display());
        }
    }

    // With equal couplings every Rabi frequency is a multiple of 1/(2Δ), so the
    // revivals fall on the same times whatever the photon statistics.
    for fig in [Figure::Fig1a, Figure::Fig1b] {
        let mut input = fig.input();
        input.ratio = Some(1.0);
        let s = input.build()?;
        let ts = run_scenario(&s)?;
        let peaks = detect_revivals(ts.tau(), ts.column("inversion").unwrap(), DEFAULT_WINDOW)?;
        println!("{fig} with g1 = g2: revival peaks at {peaks:.3?} (2 pi Delta/g1 = {:.3})", 2.0 * std::f64::consts::PI * s.delta_over_g1);
    }
    Ok(())
}
