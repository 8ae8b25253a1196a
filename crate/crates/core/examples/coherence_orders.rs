//! Splits an operator into coherence orders and reduces it to a spin pair.

use mqdyn::operator::{
    decompose_by_order, partial_trace_to_pair, single_spin_operator, total_iz, Basis, SpinOp,
};

fn main() -> mqdyn::Result<()> {
    let basis = Basis::new(3)?;
    for index in 0..basis.dim() {
        println!("|{index:03b}>  m = {:+.1}", basis.magnetization(index));
    }

    // I_1^+ I_2^+ + I_3^-: one double-quantum term and one single-quantum term
    let plus = single_spin_operator(basis, 1, SpinOp::Plus)?.matmul(&single_spin_operator(basis, 2, SpinOp::Plus)?)?;
    let a = &plus + &single_spin_operator(basis, 3, SpinOp::Minus)?;
    let parts = decompose_by_order(&a);
    for (k, part) in parts.iter() {
        println!("order {k:+}: max entry {:.3}", part.max_abs());
    }
    let residual = (&parts.recombine() - &a).max_abs();
    println!("recombination residual {residual:.1e}");

    let iz = total_iz(3)?;
    let reduced = partial_trace_to_pair(&iz, 1, 3)?;
    println!("Tr_2 I_z on (1,3):\n{:.2}", reduced.entries().mapv(|z| z.re));
    Ok(())
}
