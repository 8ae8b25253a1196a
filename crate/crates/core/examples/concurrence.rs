//! Concurrence and entanglement of formation for a few textbook states.

use mqdyn::entanglement::{concurrence, entanglement_of_formation, PairState};
use mqdyn::operator::PairOperator;
use ndarray::Array2;
use num_complex::Complex64;

fn from_vector(psi: [f64; 4]) -> Array2<Complex64> {
    Array2::from_shape_fn((4, 4), |(r, c)| Complex64::new(psi[r] * psi[c], 0.0))
}

fn werner(p: f64) -> Array2<Complex64> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let singlet = from_vector([0.0, h, -h, 0.0]);
    singlet * Complex64::new(p, 0.0) + Array2::<Complex64>::eye(4) * Complex64::new((1.0 - p) / 4.0, 0.0)
}

fn main() -> mqdyn::Result<()> {
    let h = std::f64::consts::FRAC_1_SQRT_2;
    let mut states = vec![
        ("product |uu>".to_string(), from_vector([1.0, 0.0, 0.0, 0.0])),
        ("Bell (|uu>+|dd>)/√2".to_string(), from_vector([h, 0.0, 0.0, h])),
    ];
    for p in [0.2, 1.0 / 3.0, 0.5, 0.8] {
        states.push((format!("Werner p = {p:.3}"), werner(p)));
    }
    for (name, rho) in states {
        let state = PairState::new(PairOperator::new((1, 2), rho)?, 0.0)?;
        let c = concurrence(&state)?;
        println!("{name:<22} C = {c:.6}  E_F = {:.6}", entanglement_of_formation(c)?);
    }
    Ok(())
}
