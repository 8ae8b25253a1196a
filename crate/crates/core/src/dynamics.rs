//! Spectral decomposition of Hermitian generators and unitary evolution.
//!
//! The generator is diagonalized once; `U(τ) = V·diag(e^{-iλτ})·V†` at any
//! `τ` is then a phase rescaling plus two matrix products. When the
//! generator is real symmetric (as `H_MQ` is) the eigenvectors are kept real
//! and complex products are split into real BLAS calls.

use ndarray::{Array1, Array2, ShapeBuilder, Zip};
use ndarray_linalg::{Eigh, EighInto, UPLO};
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::{Basis, DenseOperator};

/// Anti-Hermitian residue above which a generator is rejected.
pub const ANTI_HERMITIAN_LIMIT: f64 = 1e-8;

#[derive(Clone, Debug)]
enum Eigenvectors {
    Real(Array2<f64>),
    Complex(Array2<Complex64>),
}

/// `H = V·diag(λ)·V†` with ascending real `λ` and unitary `V`.
#[derive(Clone, Debug)]
pub struct SpectralForm {
    basis: Basis,
    eigenvalues: Array1<f64>,
    vectors: Eigenvectors,
}

/// An operator expressed in the eigenbasis of a [`SpectralForm`], `V†AV`.
#[derive(Clone, Debug)]
pub struct EigenbasisOperator {
    basis: Basis,
    entries: Array2<Complex64>,
}

pub fn spectral_decompose(h: &DenseOperator) -> Result<SpectralForm> {
    let adj = h.adjoint();
    let anti = (h - &adj).scale(0.5).frobenius_norm();
    if anti > ANTI_HERMITIAN_LIMIT {
        return Err(Error::argument(format!(
            "generator is not Hermitian (anti-Hermitian norm {anti:.3e})"
        )));
    }
    if !h.is_finite() {
        return Err(Error::numerical("generator has non-finite entries"));
    }
    let sym = (h + &adj).scale(0.5);
    let basis = h.basis();
    let fail = |e: ndarray_linalg::error::LinalgError| Error::numerical(format!("eigensolver: {e}"));
    if sym.is_real() {
        let real = sym.entries().mapv(|z| z.re);
        let (eigenvalues, v) = real.eigh(UPLO::Lower).map_err(fail)?;
        Ok(SpectralForm {
            basis,
            eigenvalues,
            vectors: Eigenvectors::Real(v),
        })
    } else {
        // column-major input: ndarray-linalg transposes C-order arrays, which
        // for a complex Hermitian matrix means solving conj(H)
        let mut fortran = Array2::zeros(sym.entries().raw_dim().f());
        fortran.assign(sym.entries());
        let (eigenvalues, v) = fortran.eigh_into(UPLO::Lower).map_err(fail)?;
        Ok(SpectralForm {
            basis,
            eigenvalues,
            vectors: Eigenvectors::Complex(v),
        })
    }
}

impl SpectralForm {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn eigenvalues(&self) -> &Array1<f64> {
        &self.eigenvalues
    }

    /// Eigenvectors as columns.
    pub fn eigenvectors(&self) -> Array2<Complex64> {
        match &self.vectors {
            Eigenvectors::Real(v) => v.mapv(|x| Complex64::new(x, 0.0)),
            Eigenvectors::Complex(v) => v.clone(),
        }
    }

    pub fn has_real_eigenvectors(&self) -> bool {
        matches!(self.vectors, Eigenvectors::Real(_))
    }

    /// `V·diag(f(λ))·V†`.
    fn apply_diagonal(&self, f: impl Fn(f64) -> Complex64) -> DenseOperator {
        let phases: Vec<Complex64> = self.eigenvalues.iter().map(|&l| f(l)).collect();
        let v = self.eigenvectors();
        let mut scaled = v.clone();
        for (mut col, p) in scaled.columns_mut().into_iter().zip(&phases) {
            col.mapv_inplace(|z| z * p);
        }
        let vh = v.t().mapv(|z| z.conj());
        DenseOperator::from_entries(scaled.dot(&vh)).expect("basis dimension")
    }

    /// `V·diag(λ)·V†`.
    pub fn reconstruct(&self) -> DenseOperator {
        self.apply_diagonal(|l| Complex64::new(l, 0.0))
    }

    /// `V†·A·V`.
    pub fn to_eigenbasis(&self, a: &DenseOperator) -> Result<EigenbasisOperator> {
        if a.basis() != self.basis {
            return Err(Error::argument("operator and generator dimensions differ"));
        }
        let entries = match &self.vectors {
            Eigenvectors::Real(v) => {
                let (re, im) = split(a.entries());
                let vt = v.t();
                join(&vt.dot(&re).dot(v), &vt.dot(&im).dot(v))
            }
            Eigenvectors::Complex(v) => {
                let vh = v.t().mapv(|z| z.conj());
                vh.dot(a.entries()).dot(v)
            }
        };
        Ok(EigenbasisOperator {
            basis: self.basis,
            entries,
        })
    }

    /// `U(τ)·A·U(τ)†` for an operator prepared with [`Self::to_eigenbasis`].
    ///
    /// Equal to `conjugate(&propagator(self, tau)?, a)` but costs two
    /// products instead of four.
    pub fn evolve(&self, a: &EigenbasisOperator, tau: f64) -> Result<DenseOperator> {
        check_tau(tau)?;
        if a.basis != self.basis {
            return Err(Error::argument("operator and generator dimensions differ"));
        }
        let phases: Vec<Complex64> = self
            .eigenvalues
            .iter()
            .map(|&l| Complex64::from_polar(1.0, -l * tau))
            .collect();
        let mut rotated = a.entries.clone();
        for ((r, c), z) in rotated.indexed_iter_mut() {
            *z *= phases[r] * phases[c].conj();
        }
        let out = match &self.vectors {
            Eigenvectors::Real(v) => {
                let (re, im) = split(&rotated);
                let vt = v.t();
                join(&v.dot(&re).dot(&vt), &v.dot(&im).dot(&vt))
            }
            Eigenvectors::Complex(v) => {
                let vh = v.t().mapv(|z| z.conj());
                v.dot(&rotated).dot(&vh)
            }
        };
        let out = DenseOperator::from_entries(out)?;
        if !out.is_finite() {
            return Err(Error::numerical(format!("non-finite entries in evolved operator at tau = {tau}")));
        }
        Ok(out)
    }
}

fn check_tau(tau: f64) -> Result<()> {
    if !tau.is_finite() {
        return Err(Error::argument(format!("tau must be finite, got {tau}")));
    }
    Ok(())
}

fn split(a: &Array2<Complex64>) -> (Array2<f64>, Array2<f64>) {
    (a.mapv(|z| z.re), a.mapv(|z| z.im))
}

fn join(re: &Array2<f64>, im: &Array2<f64>) -> Array2<Complex64> {
    Zip::from(re).and(im).map_collect(|&r, &i| Complex64::new(r, i))
}

/// `U(τ) = exp(-iτH) = V·diag(e^{-iλτ})·V†`.
pub fn propagator(sf: &SpectralForm, tau: f64) -> Result<DenseOperator> {
    check_tau(tau)?;
    let u = sf.apply_diagonal(|l| Complex64::from_polar(1.0, -l * tau));
    if !u.is_finite() {
        return Err(Error::numerical(format!("non-finite propagator at tau = {tau}")));
    }
    Ok(u)
}

/// `U·A·U†`.
pub fn conjugate(u: &DenseOperator, a: &DenseOperator) -> Result<DenseOperator> {
    u.check_same_basis(a)?;
    let out = u.matmul(a)?.matmul(&u.adjoint())?;
    if !out.is_finite() {
        return Err(Error::numerical("non-finite entries after conjugation"));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{build_couplings, build_h_mq, Geometry};
    use ndarray::arr2;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn unitarity_error(u: &DenseOperator) -> f64 {
        let prod = u.matmul(&u.adjoint()).unwrap();
        (&prod - &DenseOperator::identity(u.basis())).max_abs()
    }

    #[test]
    fn diagonal_generator() {
        let h = DenseOperator::from_entries(arr2(&[[c(3.0, 0.0), c(0.0, 0.0)], [c(0.0, 0.0), c(-1.0, 0.0)]])).unwrap();
        let sf = spectral_decompose(&h).unwrap();
        assert_eq!(sf.eigenvalues().to_vec(), vec![-1.0, 3.0]);
        let v = sf.eigenvectors();
        assert_eq!(v[[0, 0]].norm(), 0.0);
        assert_eq!(v[[1, 0]].norm(), 1.0);
        assert_eq!(v[[0, 1]].norm(), 1.0);
    }

    #[test]
    fn zero_generator() {
        let sf = spectral_decompose(&DenseOperator::zeros(Basis::new(3).unwrap())).unwrap();
        assert!(sf.eigenvalues().iter().all(|&l| l == 0.0));
    }

    #[test]
    fn two_spin_spectrum() {
        let h = build_h_mq(&build_couplings(Geometry::Chain, 2, 1.0).unwrap());
        let sf = spectral_decompose(&h).unwrap();
        assert!(sf.has_real_eigenvectors());
        let expect = [-0.25, 0.0, 0.0, 0.25];
        for (l, e) in sf.eigenvalues().iter().zip(expect) {
            assert!((l - e).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_anti_hermitian() {
        let a = DenseOperator::from_entries(arr2(&[[c(0.0, 0.0), c(1.0, 0.0)], [c(-1.0, 0.0), c(0.0, 0.0)]])).unwrap();
        assert!(matches!(spectral_decompose(&a), Err(Error::Argument(_))));
    }

    #[test]
    fn complex_generator_reconstructs() {
        let h = DenseOperator::from_entries(arr2(&[
            [c(1.0, 0.0), c(0.3, -0.7), c(0.0, 0.2), c(0.1, 0.0)],
            [c(0.3, 0.7), c(-0.5, 0.0), c(0.4, 0.4), c(0.0, -0.3)],
            [c(0.0, -0.2), c(0.4, -0.4), c(0.2, 0.0), c(0.6, 0.1)],
            [c(0.1, 0.0), c(0.0, 0.3), c(0.6, -0.1), c(-1.1, 0.0)],
        ]))
        .unwrap();
        let sf = spectral_decompose(&h).unwrap();
        assert!(!sf.has_real_eigenvectors());
        let rel = (&sf.reconstruct() - &h).frobenius_norm() / h.frobenius_norm();
        assert!(rel < 1e-10);
        let v = DenseOperator::from_entries(sf.eigenvectors()).unwrap();
        assert!(unitarity_error(&v) < 1e-10);
        let u = propagator(&sf, 0.7).unwrap();
        assert!(unitarity_error(&u) < 1e-10);
        let a = DenseOperator::from_diagonal(h.basis(), |i| i as f64);
        let fast = sf.evolve(&sf.to_eigenbasis(&a).unwrap(), 0.7).unwrap();
        assert!((&fast - &conjugate(&u, &a).unwrap()).max_abs() < 1e-12);
    }

    #[test]
    fn propagator_identity_and_group_property() {
        let h = build_h_mq(&build_couplings(Geometry::Ring, 4, 1.0).unwrap());
        let sf = spectral_decompose(&h).unwrap();
        let id = DenseOperator::identity(h.basis());
        assert!((&propagator(&sf, 0.0).unwrap() - &id).max_abs() < 1e-12);
        for tau in [0.3, 2.0, 7.5] {
            let u = propagator(&sf, tau).unwrap();
            assert!(unitarity_error(&u) < 1e-10);
            let back = u.matmul(&propagator(&sf, -tau).unwrap()).unwrap();
            assert!((&back - &id).max_abs() < 1e-10);
        }
        assert!(propagator(&sf, f64::NAN).is_err());
    }

    #[test]
    fn conjugation_preserves_trace_and_purity() {
        let h = build_h_mq(&build_couplings(Geometry::Chain, 3, 1.0).unwrap());
        let sf = spectral_decompose(&h).unwrap();
        let u = propagator(&sf, 1.9).unwrap();
        let rho = crate::model::thermal_state(3, crate::model::ThermalConfig::Direct(1.5)).unwrap();
        assert_eq!(conjugate(&DenseOperator::identity(h.basis()), &rho).unwrap(), rho);
        let out = conjugate(&u, &rho).unwrap();
        assert!((out.trace() - rho.trace()).norm() < 1e-10);
        let purity = |r: &DenseOperator| r.matmul(r).unwrap().trace().re;
        assert!((purity(&out) - purity(&rho)).abs() < 1e-10);
        let other = DenseOperator::identity(Basis::new(2).unwrap());
        assert!(conjugate(&u, &other).is_err());
    }
}
