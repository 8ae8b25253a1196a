//! Zeeman-basis conventions, spin operators, pair partial traces and the
//! coherence-order decomposition. Every other module relies on the index
//! semantics fixed in [`Basis`].

mod basis;
mod dense;
mod order;
mod partial_trace;

pub use basis::{Basis, MAX_SPINS};
pub use dense::{single_spin_operator, total_iz, DenseOperator, SpinOp};
pub use order::{decompose_by_order, CoherenceDecomposition};
pub use partial_trace::{partial_trace_to_pair, PairOperator};
