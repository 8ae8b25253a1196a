//! Two coupled spins near full polarization, against the analytic solution
//! J_0 = cos²(τ/2), J_2 = ½sin²(τ/2), C = |sin(τ/2)|.

use mqdyn::model::{Geometry, ThermalConfig};
use mqdyn::runner::{run, RunConfig};

fn main() -> mqdyn::Result<()> {
    let mut cfg = RunConfig::custom(2, Geometry::Chain);
    cfg.thermal = ThermalConfig::Direct(30.0);
    cfg.tau_max = 2.0 * std::f64::consts::PI;
    cfg.tau_points = 9;
    cfg.pairs = vec![(1, 2)];
    let result = run(&cfg)?;

    println!("{:>7} {:>10} {:>10} {:>10} {:>10}", "tau", "J0", "J2", "C", "EF");
    for row in &result.rows {
        let pair = &row.pairs[0];
        println!(
            "{:7.4} {:10.6} {:10.6} {:10.6} {:10.6}",
            row.tau,
            row.spectrum.get(0),
            row.spectrum.get(2),
            pair.concurrence,
            pair.formation
        );
        let s = (row.tau / 2.0).sin();
        assert!((pair.concurrence - s.abs()).abs() < 1e-6);
    }
    Ok(())
}
