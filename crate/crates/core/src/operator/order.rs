use std::collections::BTreeMap;

use num_complex::Complex64;

use super::basis::Basis;
use super::dense::DenseOperator;

/// Split of an operator into its coherence-order components.
///
/// `parts[k]` holds exactly the entries `(r, s)` with `m(r) - m(s) = k`.
/// Orders whose component is identically zero are left out.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceDecomposition {
    basis: Basis,
    parts: BTreeMap<i32, DenseOperator>,
}

impl CoherenceDecomposition {
    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn part(&self, order: i32) -> Option<&DenseOperator> {
        self.parts.get(&order)
    }

    /// Orders with a non-zero component, ascending.
    pub fn orders(&self) -> impl Iterator<Item = i32> + '_ {
        self.parts.keys().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, &DenseOperator)> {
        self.parts.iter().map(|(k, v)| (*k, v))
    }

    /// Largest entry magnitude over all odd orders.
    pub fn max_odd_entry(&self) -> f64 {
        self.parts
            .iter()
            .filter(|(k, _)| *k % 2 != 0)
            .map(|(_, p)| p.max_abs())
            .fold(0.0, f64::max)
    }

    /// Sum of all parts.
    pub fn recombine(&self) -> DenseOperator {
        let mut acc = DenseOperator::zeros(self.basis);
        for part in self.parts.values() {
            acc = &acc + part;
        }
        acc
    }
}

/// Groups the entries of `a` by coherence order. Purely structural: no
/// entry is thresholded.
pub fn decompose_by_order(a: &DenseOperator) -> CoherenceDecomposition {
    let basis = a.basis();
    let n = basis.n_spins() as i32;
    let mut parts: BTreeMap<i32, DenseOperator> = BTreeMap::new();
    let entries = a.entries();
    for ((row, col), &z) in entries.indexed_iter() {
        if z == Complex64::new(0.0, 0.0) {
            continue;
        }
        let k = Basis::order(row, col);
        debug_assert!(k.abs() <= n);
        parts
            .entry(k)
            .or_insert_with(|| DenseOperator::zeros(basis))
            .entries_mut()[[row, col]] = z;
    }
    CoherenceDecomposition { basis, parts }
}
