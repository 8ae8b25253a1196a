//! Dipolar couplings and the spectrum of the double-quantum Hamiltonian.
//!
//! ```text
//! cargo run --release --example couplings -- ring 6
//! ```

use mqdyn::dynamics::spectral_decompose;
use mqdyn::model::{build_couplings, build_h_mq, Geometry};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let mut args = std::env::args().skip(1);
    let geometry: Geometry = args.next().as_deref().unwrap_or("chain").parse()?;
    let n: usize = args.next().as_deref().unwrap_or("5").parse()?;

    let sys = build_couplings(geometry, n, 1.0)?;
    println!("{geometry}, N = {n}, couplings from spin 1:");
    for k in 2..=n {
        println!("  D_1{k} = {:.6}", sys.coupling(1, k).unwrap());
    }

    let h = build_h_mq(&sys);
    let sf = spectral_decompose(&h)?;
    let ev = sf.eigenvalues();
    println!("H_MQ: dim {}, real eigenvectors: {}", h.dim(), sf.has_real_eigenvectors());
    println!("  spectrum [{:.5}, {:.5}]", ev[0], ev[ev.len() - 1]);
    let zero_modes = ev.iter().filter(|e| e.abs() < 1e-12).count();
    println!("  {zero_modes} zero modes");
    Ok(())
}
