//! Wootters concurrence and entanglement of formation of a spin pair.

use ndarray::{arr2, Array2};
use ndarray_linalg::{Eig, EigValsh, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::PairOperator;

/// Imaginary parts of `R`'s eigenvalues up to this size are roundoff.
pub const EIG_IMAG_LIMIT: f64 = 1e-9;
/// Concurrences below this are reported as exactly zero.
pub const CONCURRENCE_FLOOR: f64 = 1e-12;

/// A valid two-spin density matrix in the fixed pair basis.
#[derive(Clone, Debug)]
pub struct PairState {
    rho: PairOperator,
    pub tau: f64,
}

impl PairState {
    /// Validates Hermiticity, unit trace (1e-12) and positivity (eigenvalues
    /// not below -1e-10).
    pub fn new(rho: PairOperator, tau: f64) -> Result<Self> {
        let e = rho.entries();
        let mut herm = 0.0f64;
        for i in 0..4 {
            for j in 0..4 {
                herm = herm.max((e[[i, j]] - e[[j, i]].conj()).norm());
            }
        }
        if herm > 1e-10 {
            return Err(Error::numerical(format!(
                "pair state {:?} is not Hermitian (residue {herm:.3e})",
                rho.pair()
            )));
        }
        let tr = rho.trace();
        if (tr - Complex64::new(1.0, 0.0)).norm() > 1e-12 {
            return Err(Error::numerical(format!(
                "pair state {:?} has trace {tr}",
                rho.pair()
            )));
        }
        let eigs = e
            .eigvalsh(UPLO::Lower)
            .map_err(|err| Error::numerical(format!("eigensolver: {err}")))?;
        let min = eigs.iter().copied().fold(f64::INFINITY, f64::min);
        if min < -1e-10 {
            return Err(Error::numerical(format!(
                "pair state {:?} has negative eigenvalue {min:.3e}",
                rho.pair()
            )));
        }
        Ok(PairState { rho, tau })
    }

    /// Skips validation; used by lenient runs after a failed check.
    pub fn assume_valid(rho: PairOperator, tau: f64) -> Self {
        PairState { rho, tau }
    }

    pub fn pair(&self) -> (usize, usize) {
        self.rho.pair()
    }

    pub fn rho(&self) -> &PairOperator {
        &self.rho
    }
}

/// `σ_y ⊗ σ_y` in the pair basis.
fn sigma_yy() -> Array2<Complex64> {
    let z = Complex64::new(0.0, 0.0);
    let p = Complex64::new(1.0, 0.0);
    let m = Complex64::new(-1.0, 0.0);
    arr2(&[[z, z, z, m], [z, z, p, z], [z, p, z, z], [m, z, z, z]])
}

/// `R = ρ·(σ_y⊗σ_y)·ρ*·(σ_y⊗σ_y)` with `ρ*` the entrywise conjugate.
pub fn spin_flip(state: &PairState) -> Array2<Complex64> {
    let rho = state.rho.entries();
    let yy = sigma_yy();
    let conj = rho.mapv(|z| z.conj());
    rho.dot(&yy).dot(&conj).dot(&yy)
}

/// `C = max{0, λ₁ - λ₂ - λ₃ - λ₄}` with `λ` the descending square roots of
/// the eigenvalues of [`spin_flip`].
pub fn concurrence(state: &PairState) -> Result<f64> {
    let r = spin_flip(state);
    let (eigs, _) = r
        .eig()
        .map_err(|err| Error::numerical(format!("eigensolver: {err}")))?;
    let mut roots = Vec::with_capacity(4);
    for mu in eigs.iter() {
        if mu.im.abs() > EIG_IMAG_LIMIT {
            return Err(Error::numerical(format!(
                "spin-flip eigenvalue {mu} of pair {:?} is not real",
                state.pair()
            )));
        }
        roots.push(mu.re.max(0.0).sqrt());
    }
    roots.sort_by(|a, b| b.total_cmp(a));
    let c = roots[0] - roots[1] - roots[2] - roots[3];
    Ok(if c < CONCURRENCE_FLOOR { 0.0 } else { c.min(1.0) })
}

fn binary_entropy(x: f64) -> f64 {
    let term = |p: f64| if p <= 0.0 { 0.0 } else { -p * p.log2() };
    term(x) + term(1.0 - x)
}

/// `E_F = h((1 + √(1 - C²)) / 2)` with `h` the binary entropy in bits.
pub fn entanglement_of_formation(c: f64) -> Result<f64> {
    if !(-1e-12..=1.0 + 1e-12).contains(&c) {
        return Err(Error::argument(format!("concurrence {c} outside [0, 1]")));
    }
    let c = c.clamp(0.0, 1.0);
    let x = 0.5 * (1.0 + (1.0 - c * c).sqrt());
    Ok(binary_entropy(x))
}
