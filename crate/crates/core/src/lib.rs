//! Exact-diagonalization dynamics of multiple-quantum (MQ) NMR coherences and
//! pairwise entanglement in dipolar-coupled spin-1/2 chains and rings.
//!
//! A run starts from the Zeeman thermal state, evolves it under the
//! double-quantum Hamiltonian `H_MQ`, and at every `τ` reports
//!
//! * integrated intensities `J_k(τ) = Tr[ρ(τ)·ρ^{zk}(τ)]`,
//! * pair-reduced intensities `J_k^{mn}(τ)` built from partial traces,
//! * the Wootters concurrence `C_mn(τ)` and entanglement of formation.
//!
//! ```no_run
//! use mqdyn::runner::{run, Preset, RunConfig};
//!
//! let result = run(&RunConfig::from_preset(Preset::Fig1)).unwrap();
//! println!("{} rows, Tr[rho_eq Iz] = {}", result.rows.len(), result.metadata.trace_rho_iz);
//! ```

pub mod analysis;
pub mod coherence;
pub mod dynamics;
pub mod entanglement;
pub mod error;
pub mod model;
pub mod operator;
pub mod runner;

pub use error::{Error, Result};
