use std::ops::{Add, Sub};

use ndarray::{linalg::kron, Array2};
use num_complex::Complex64;

use super::basis::Basis;
use crate::error::{Error, Result};

const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Square complex matrix acting on the `2^N`-dimensional Zeeman basis.
#[derive(Clone, Debug, PartialEq)]
pub struct DenseOperator {
    basis: Basis,
    entries: Array2<Complex64>,
}

impl DenseOperator {
    /// Wraps a matrix, inferring `N` from its dimension.
    pub fn from_entries(entries: Array2<Complex64>) -> Result<Self> {
        let (rows, cols) = entries.dim();
        if rows != cols {
            return Err(Error::argument(format!(
                "operator must be square, got {rows}x{cols}"
            )));
        }
        let basis = Basis::from_dim(rows)?;
        Ok(DenseOperator { basis, entries })
    }

    pub fn zeros(basis: Basis) -> Self {
        let d = basis.dim();
        DenseOperator {
            basis,
            entries: Array2::zeros((d, d)),
        }
    }

    pub fn identity(basis: Basis) -> Self {
        DenseOperator {
            basis,
            entries: Array2::eye(basis.dim()),
        }
    }

    /// Diagonal operator with real entries `f(i)` at basis index `i`.
    pub fn from_diagonal(basis: Basis, f: impl Fn(usize) -> f64) -> Self {
        let mut op = DenseOperator::zeros(basis);
        for i in 0..basis.dim() {
            op.entries[[i, i]] = Complex64::new(f(i), 0.0);
        }
        op
    }

    #[inline]
    pub fn basis(&self) -> Basis {
        self.basis
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    #[inline]
    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn entries_mut(&mut self) -> &mut Array2<Complex64> {
        &mut self.entries
    }

    pub fn into_entries(self) -> Array2<Complex64> {
        self.entries
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.diag().sum()
    }

    pub fn adjoint(&self) -> Self {
        DenseOperator {
            basis: self.basis,
            entries: self.entries.t().mapv(|z| z.conj()),
        }
    }

    /// Largest `|A_ij - conj(A_ji)|`.
    pub fn hermitian_residual(&self) -> f64 {
        let d = self.dim();
        let mut worst = 0.0f64;
        for i in 0..d {
            for j in i..d {
                let r = (self.entries[[i, j]] - self.entries[[j, i]].conj()).norm();
                worst = worst.max(r);
            }
        }
        worst
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |m, z| m.max(z.norm()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.entries.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn is_finite(&self) -> bool {
        self.entries.iter().all(|z| z.re.is_finite() && z.im.is_finite())
    }

    /// True when every imaginary part is exactly zero.
    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|z| z.im == 0.0)
    }

    pub fn matmul(&self, other: &DenseOperator) -> Result<DenseOperator> {
        self.check_same_basis(other)?;
        Ok(DenseOperator {
            basis: self.basis,
            entries: self.entries.dot(&other.entries),
        })
    }

    pub fn scale(&self, factor: f64) -> DenseOperator {
        DenseOperator {
            basis: self.basis,
            entries: &self.entries * Complex64::new(factor, 0.0),
        }
    }

    pub(crate) fn check_same_basis(&self, other: &DenseOperator) -> Result<()> {
        if self.basis != other.basis {
            return Err(Error::argument(format!(
                "dimension mismatch: {} vs {}",
                self.dim(),
                other.dim()
            )));
        }
        Ok(())
    }
}

impl Add for &DenseOperator {
    type Output = DenseOperator;

    fn add(self, rhs: &DenseOperator) -> DenseOperator {
        assert_eq!(self.basis, rhs.basis, "dimension mismatch");
        DenseOperator {
            basis: self.basis,
            entries: &self.entries + &rhs.entries,
        }
    }
}

impl Sub for &DenseOperator {
    type Output = DenseOperator;

    fn sub(self, rhs: &DenseOperator) -> DenseOperator {
        assert_eq!(self.basis, rhs.basis, "dimension mismatch");
        DenseOperator {
            basis: self.basis,
            entries: &self.entries - &rhs.entries,
        }
    }
}

/// Single-site spin operators in the (up, down) basis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SpinOp {
    /// `I^z = diag(+1/2, -1/2)`
    Z,
    /// `I^+`, maps down to up.
    Plus,
    /// `I^- = (I^+)†`
    Minus,
}

impl SpinOp {
    pub fn matrix(self) -> Array2<Complex64> {
        let mut m = Array2::zeros((2, 2));
        match self {
            SpinOp::Z => {
                m[[0, 0]] = Complex64::new(0.5, 0.0);
                m[[1, 1]] = Complex64::new(-0.5, 0.0);
            }
            SpinOp::Plus => m[[0, 1]] = ONE,
            SpinOp::Minus => m[[1, 0]] = ONE,
        }
        m
    }
}

/// Embeds a single-site operator at `site`: `1 ⊗ … ⊗ op ⊗ … ⊗ 1`.
///
/// Kronecker factors run from site `N` (most significant bit) down to site 1.
pub fn single_spin_operator(basis: Basis, site: usize, kind: SpinOp) -> Result<DenseOperator> {
    basis.check_site(site)?;
    let eye2: Array2<Complex64> = Array2::eye(2);
    let op = kind.matrix();
    let mut acc = Array2::from_elem((1, 1), ONE);
    for s in (1..=basis.n_spins()).rev() {
        acc = kron(&acc, if s == site { &op } else { &eye2 });
    }
    Ok(DenseOperator {
        basis,
        entries: acc,
    })
}

/// Total `I_z = Σ_j I_j^z`, diagonal with entry `m(i)`.
pub fn total_iz(n_spins: usize) -> Result<DenseOperator> {
    let basis = Basis::new(n_spins)?;
    Ok(DenseOperator::from_diagonal(basis, |i| basis.magnetization(i)))
}
