use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest site count accepted anywhere in the crate. Dense storage needs
/// `4^N` complex entries per operator.
pub const MAX_SPINS: usize = 12;

/// Zeeman product basis of `N` spin-1/2 sites.
///
/// Sites are numbered `1..=N`. Bit `j - 1` of a basis index encodes site `j`:
/// a clear bit is spin up (`m_j = +1/2`), a set bit is spin down
/// (`m_j = -1/2`). Index `0` is therefore the fully polarized up state.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Basis {
    n_spins: usize,
}

impl Basis {
    pub fn new(n_spins: usize) -> Result<Self> {
        if n_spins == 0 || n_spins > MAX_SPINS {
            return Err(Error::argument(format!(
                "site count must be in 1..={MAX_SPINS}, got {n_spins}"
            )));
        }
        Ok(Basis { n_spins })
    }

    /// Basis for a Hilbert-space dimension, which must be `2^N` with `N` in range.
    pub fn from_dim(dim: usize) -> Result<Self> {
        if !dim.is_power_of_two() || dim < 2 {
            return Err(Error::argument(format!(
                "operator dimension {dim} is not 2^N with N >= 1"
            )));
        }
        Basis::new(dim.trailing_zeros() as usize)
    }

    #[inline]
    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    #[inline]
    pub fn dim(&self) -> usize {
        1 << self.n_spins
    }

    pub fn check_site(&self, site: usize) -> Result<()> {
        if site == 0 || site > self.n_spins {
            return Err(Error::argument(format!(
                "site {site} out of range 1..={}",
                self.n_spins
            )));
        }
        Ok(())
    }

    /// Bit mask of a (1-based) site.
    #[inline]
    pub fn site_mask(site: usize) -> usize {
        1 << (site - 1)
    }

    #[inline]
    pub fn is_up(index: usize, site: usize) -> bool {
        index & Basis::site_mask(site) == 0
    }

    /// Number of down spins in a basis state.
    #[inline]
    pub fn down_count(index: usize) -> u32 {
        index.count_ones()
    }

    /// Total magnetization `m(i) = N/2 - popcount(i)`.
    #[inline]
    pub fn magnetization(&self, index: usize) -> f64 {
        self.n_spins as f64 / 2.0 - Basis::down_count(index) as f64
    }

    /// Coherence order `m(r) - m(s)` of matrix element `(r, s)`.
    #[inline]
    pub fn order(row: usize, col: usize) -> i32 {
        Basis::down_count(col) as i32 - Basis::down_count(row) as i32
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn magnetization_extremes_and_sum() {
        for n in 1..=MAX_SPINS {
            let b = Basis::new(n).unwrap();
            assert_eq!(b.magnetization(0), n as f64 / 2.0);
            assert_eq!(b.magnetization(b.dim() - 1), -(n as f64) / 2.0);
            let total: f64 = (0..b.dim()).map(|i| b.magnetization(i)).sum();
            assert_eq!(total, 0.0);
        }
    }

    #[test]
    fn rejects_bad_sizes() {
        assert!(Basis::new(0).is_err());
        assert!(Basis::new(MAX_SPINS + 1).is_err());
        assert!(Basis::from_dim(6).is_err());
        assert!(Basis::from_dim(1).is_err());
        assert_eq!(Basis::from_dim(16).unwrap().n_spins(), 4);
    }

    #[test]
    fn site_bits() {
        let b = Basis::new(3).unwrap();
        assert!(b.check_site(0).is_err());
        assert!(b.check_site(4).is_err());
        // index 0b010: site 2 down, sites 1 and 3 up
        assert!(Basis::is_up(0b010, 1));
        assert!(!Basis::is_up(0b010, 2));
        assert!(Basis::is_up(0b010, 3));
        assert_eq!(Basis::order(0, 0b011), 2);
        assert_eq!(Basis::order(0b011, 0), -2);
    }
}
