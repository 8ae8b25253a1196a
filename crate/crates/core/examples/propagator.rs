//! Evolution under the double-quantum Hamiltonian: one diagonalization,
//! then any number of τ points.

use mqdyn::coherence::integrated_intensities;
use mqdyn::dynamics::{conjugate, propagator, spectral_decompose};
use mqdyn::model::{build_couplings, build_h_mq, thermal_state, Geometry, ThermalConfig};
use mqdyn::operator::{decompose_by_order, total_iz, DenseOperator};

fn main() -> mqdyn::Result<()> {
    let n = 4;
    let h = build_h_mq(&build_couplings(Geometry::Chain, n, 1.0)?);
    let sf = spectral_decompose(&h)?;
    let rho_eq = thermal_state(n, ThermalConfig::default())?;
    let iz = total_iz(n)?;

    // fast path: operators kept in the eigenbasis, only phases change with τ
    let rho_eb = sf.to_eigenbasis(&rho_eq)?;
    let iz_eb = sf.to_eigenbasis(&iz)?;

    for tau in [0.0, 1.0, 2.5, 5.0] {
        let u = propagator(&sf, tau)?;
        let unitarity = (&u.adjoint().matmul(&u)? - &DenseOperator::identity(u.basis())).max_abs();
        let rho = sf.evolve(&rho_eb, tau)?;
        let slow = conjugate(&u, &rho_eq)?;
        let spec = integrated_intensities(&rho, &decompose_by_order(&sf.evolve(&iz_eb, tau)?), tau)?;
        println!(
            "tau {tau:4.1}: |U†U - 1| = {unitarity:.1e}, |fast - UρU†| = {:.1e}, J0 = {:.5}, J2 = {:.5}, J4 = {:.2e}",
            (&rho - &slow).max_abs(),
            spec.get(0),
            spec.get(2),
            spec.get(4),
        );
    }
    Ok(())
}
