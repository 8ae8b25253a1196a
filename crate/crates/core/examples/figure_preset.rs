//! Runs one of the figure presets and writes its CSV + metadata.
//!
//! ```text
//! cargo run --release --example figure_preset -- fig2 [tau_points] [out.csv]
//! ```

use std::path::PathBuf;

use mqdyn::analysis::first_local_maximum;
use mqdyn::runner::{emit, run, OutputFormat, Preset, RunConfig};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let preset: Preset = args.next().as_deref().unwrap_or("fig1").parse()?;
    let mut cfg = RunConfig::from_preset(preset);
    if let Some(points) = args.next() {
        cfg.tau_points = points.parse()?;
    }
    let out = args
        .next()
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(format!("{preset}.csv")));

    let result = run(&cfg)?;
    println!(
        "{preset}: N = {}, {}, b = {}, Tr[rho_eq Iz] = {:.6}, {:.1} s",
        cfg.n_spins, cfg.geometry, result.metadata.b, result.metadata.trace_rho_iz, result.metadata.wall_time_s
    );

    let taus = result.taus();
    for &(m, n) in &cfg.pairs {
        let c = result.column(&format!("C[{m}-{n}]")).unwrap();
        let j = result.column(&format!("Jred[{m}-{n}][+2]")).unwrap();
        let cmax = c.iter().copied().fold(0.0, f64::max);
        let at = |i: Option<usize>| i.map(|i| format!("{:.3}", taus[i])).unwrap_or_else(|| "-".into());
        println!(
            "  pair {m}-{n}: max C = {cmax:.4}, first max of C at tau {}, of Jred[+2] at tau {}",
            at(first_local_maximum(&c, 0.01)),
            at(first_local_maximum(&j, 0.01)),
        );
    }
    for file in emit(&result, OutputFormat::Csv, &out)? {
        println!("wrote {}", file.display());
    }
    Ok(())
}
