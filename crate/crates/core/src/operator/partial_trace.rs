use ndarray::Array2;
use num_complex::Complex64;

use super::basis::Basis;
use super::dense::DenseOperator;
use crate::error::{Error, Result};

/// Operator on a spin pair `(m, n)`, `m < n`.
///
/// The 4×4 basis is ordered (m up, n up), (m up, n down), (m down, n up),
/// (m down, n down): pair index `2·[m down] + [n down]`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairOperator {
    pair: (usize, usize),
    entries: Array2<Complex64>,
}

impl PairOperator {
    pub fn new(pair: (usize, usize), entries: Array2<Complex64>) -> Result<Self> {
        if entries.dim() != (4, 4) {
            return Err(Error::argument(format!(
                "pair operator must be 4x4, got {:?}",
                entries.dim()
            )));
        }
        Ok(PairOperator { pair, entries })
    }

    pub fn pair(&self) -> (usize, usize) {
        self.pair
    }

    pub fn entries(&self) -> &Array2<Complex64> {
        &self.entries
    }

    pub fn into_entries(self) -> Array2<Complex64> {
        self.entries
    }

    pub fn trace(&self) -> Complex64 {
        self.entries.diag().sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.entries.iter().fold(0.0f64, |m, z| m.max(z.norm()))
    }

    /// `Tr[self · other]` without forming the product.
    pub fn trace_product(&self, other: &PairOperator) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for i in 0..4 {
            for j in 0..4 {
                acc += self.entries[[i, j]] * other.entries[[j, i]];
            }
        }
        acc
    }
}

/// Position of a full-basis index inside the pair basis.
#[inline]
fn pair_index(index: usize, m: usize, n: usize) -> usize {
    (usize::from(!Basis::is_up(index, m)) << 1) | usize::from(!Basis::is_up(index, n))
}

/// `Tr_{mn}(A)`: traces out every site except `m` and `n`.
pub fn partial_trace_to_pair(a: &DenseOperator, m: usize, n: usize) -> Result<PairOperator> {
    let basis = a.basis();
    basis.check_site(m)?;
    basis.check_site(n)?;
    if m >= n {
        return Err(Error::argument(format!(
            "pair must satisfy m < n, got ({m}, {n})"
        )));
    }
    let mask_m = Basis::site_mask(m);
    let mask_n = Basis::site_mask(n);
    let pair_bits = [0, mask_n, mask_m, mask_m | mask_n];
    let entries = a.entries();
    let mut out = Array2::<Complex64>::zeros((4, 4));
    for row in 0..basis.dim() {
        let p = pair_index(row, m, n);
        let env = row & !(mask_m | mask_n);
        for (q, bits) in pair_bits.iter().enumerate() {
            out[[p, q]] += entries[[row, env | bits]];
        }
    }
    Ok(PairOperator { pair: (m, n), entries: out })
}
