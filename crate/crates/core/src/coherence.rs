//! Integrated and pair-reduced multiple-quantum spectral intensities.

use std::collections::BTreeMap;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::operator::{partial_trace_to_pair, CoherenceDecomposition, DenseOperator, PairOperator};

/// Imaginary residue beyond which an intensity signals a convention bug.
pub const IMAG_FAILURE: f64 = 1e-8;
/// Largest `|J_k|` tolerated for a pair intensity with `|k| > 2`.
pub const PAIR_CUTOFF: f64 = 1e-12;

/// `J_k(τ)` for every even order `k` in `[-N, N]`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoherenceSpectrum {
    pub tau: f64,
    intensities: BTreeMap<i32, f64>,
    max_imag: f64,
}

impl CoherenceSpectrum {
    /// `J_k`, zero for orders that carry no intensity.
    pub fn get(&self, order: i32) -> f64 {
        self.intensities.get(&order).copied().unwrap_or(0.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (i32, f64)> + '_ {
        self.intensities.iter().map(|(k, v)| (*k, *v))
    }

    /// `Σ_k J_k`.
    pub fn total(&self) -> f64 {
        self.intensities.values().sum()
    }

    /// Largest discarded imaginary part.
    pub fn max_imag(&self) -> f64 {
        self.max_imag
    }

    /// `max_k |J_k - J_{-k}|`.
    pub fn symmetry_residual(&self) -> f64 {
        self.intensities
            .iter()
            .filter(|(k, _)| **k > 0)
            .map(|(k, v)| (v - self.get(-k)).abs())
            .fold(0.0, f64::max)
    }
}

/// `J_k^{mn}(τ)` for `k ∈ {-2, 0, 2}`.
#[derive(Clone, Debug, PartialEq)]
pub struct PairSpectrum {
    pub pair: (usize, usize),
    pub tau: f64,
    intensities: BTreeMap<i32, f64>,
    max_imag: f64,
}

impl PairSpectrum {
    /// Zero for `|k| > 2`; those orders are checked against [`PAIR_CUTOFF`]
    /// when the spectrum is built.
    pub fn get(&self, order: i32) -> f64 {
        self.intensities.get(&order).copied().unwrap_or(0.0)
    }

    pub fn max_imag(&self) -> f64 {
        self.max_imag
    }
}

fn trace_product(a: &DenseOperator, b: &DenseOperator) -> Complex64 {
    // Tr[A·B] = Σ_{r,s} A_rs B_sr
    let a = a.entries();
    let b = b.entries();
    let mut acc = Complex64::new(0.0, 0.0);
    for ((r, s), x) in a.indexed_iter() {
        acc += x * b[[s, r]];
    }
    acc
}

fn real_part(value: Complex64, what: impl FnOnce() -> String) -> Result<f64> {
    if value.im.abs() > IMAG_FAILURE {
        return Err(Error::numerical(format!(
            "{} has imaginary residue {:.3e}",
            what(),
            value.im
        )));
    }
    Ok(value.re)
}

/// `J_k = Tr[ρ(τ)·ρ^{zk}(τ)]` over the even orders of `rhoz_parts`.
pub fn integrated_intensities(
    rho_tau: &DenseOperator,
    rhoz_parts: &CoherenceDecomposition,
    tau: f64,
) -> Result<CoherenceSpectrum> {
    rho_tau.check_same_basis(&DenseOperator::zeros(rhoz_parts.basis()))?;
    let n = rho_tau.basis().n_spins() as i32;
    let mut intensities = BTreeMap::new();
    let mut max_imag = 0.0f64;
    for k in (-n..=n).filter(|k| k % 2 == 0) {
        let value = match rhoz_parts.part(k) {
            Some(part) => trace_product(rho_tau, part),
            None => Complex64::new(0.0, 0.0),
        };
        max_imag = max_imag.max(value.im.abs());
        intensities.insert(k, real_part(value, || format!("J[{k}] at tau = {tau}"))?);
    }
    Ok(CoherenceSpectrum {
        tau,
        intensities,
        max_imag,
    })
}

/// Raw complex `Tr[Tr_{mn}(ρ)·Tr_{mn}(ρ^{zk})]` for one order, with no checks.
pub fn reduced_intensity(
    rho_pair: &PairOperator,
    rhoz_parts: &CoherenceDecomposition,
    order: i32,
) -> Result<Complex64> {
    let (m, n) = rho_pair.pair();
    match rhoz_parts.part(order) {
        Some(part) => Ok(rho_pair.trace_product(&partial_trace_to_pair(part, m, n)?)),
        None => Ok(Complex64::new(0.0, 0.0)),
    }
}

/// Pair intensities from an already reduced state `ρ_mn(τ)`.
pub fn reduced_intensities_from_pair(
    rho_pair: &PairOperator,
    rhoz_parts: &CoherenceDecomposition,
    tau: f64,
) -> Result<PairSpectrum> {
    let pair = rho_pair.pair();
    let mut intensities = BTreeMap::new();
    let mut max_imag = 0.0f64;
    for k in rhoz_parts.orders().chain([-2, 0, 2]) {
        if intensities.contains_key(&k) {
            continue;
        }
        let value = reduced_intensity(rho_pair, rhoz_parts, k)?;
        if k.abs() > 2 {
            if value.norm() > PAIR_CUTOFF {
                return Err(Error::numerical(format!(
                    "pair {pair:?} intensity of order {k} is {:.3e} at tau = {tau}",
                    value.norm()
                )));
            }
            continue;
        }
        max_imag = max_imag.max(value.im.abs());
        let re = real_part(value, || format!("Jred[{}-{}][{k}] at tau = {tau}", pair.0, pair.1))?;
        intensities.insert(k, re);
    }
    Ok(PairSpectrum {
        pair,
        tau,
        intensities,
        max_imag,
    })
}

/// `J_k^{mn} = Tr[ρ_mn(τ)·ρ_mn^{zk}(τ)]` with unnormalized partial traces.
pub fn reduced_intensities(
    rho_tau: &DenseOperator,
    rhoz_parts: &CoherenceDecomposition,
    m: usize,
    n: usize,
    tau: f64,
) -> Result<PairSpectrum> {
    let rho_pair = partial_trace_to_pair(rho_tau, m, n)?;
    reduced_intensities_from_pair(&rho_pair, rhoz_parts, tau)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{thermal_state, ThermalConfig};
    use crate::operator::{decompose_by_order, total_iz};

    #[test]
    fn initial_spectrum_is_pure_order_zero() {
        let rho = thermal_state(4, ThermalConfig::Direct(5.0)).unwrap();
        let iz = total_iz(4).unwrap();
        let parts = decompose_by_order(&iz);
        let spec = integrated_intensities(&rho, &parts, 0.0).unwrap();
        let expect = rho.matmul(&iz).unwrap().trace().re;
        assert_eq!(spec.get(0), expect);
        for k in [-4, -2, 2, 4] {
            assert_eq!(spec.get(k), 0.0);
        }
        assert_eq!(spec.iter().count(), 5);
        assert_eq!(spec.symmetry_residual(), 0.0);
    }

    #[test]
    fn pair_intensity_at_tau_zero() {
        // J_0^{12}(0) = 4·(<I_1^z> + <I_2^z>) with <I_j^z> = tanh(b/2)/2
        let b = 5.0f64;
        let rho = thermal_state(4, ThermalConfig::Direct(b)).unwrap();
        let parts = decompose_by_order(&total_iz(4).unwrap());
        let ps = reduced_intensities(&rho, &parts, 1, 2, 0.0).unwrap();
        let expect = 4.0 * (b / 2.0).tanh();
        assert!((ps.get(0) - expect).abs() < 1e-12, "{} vs {expect}", ps.get(0));
        assert_eq!(ps.get(2), 0.0);
        assert_eq!(ps.get(-2), 0.0);
        assert_eq!(ps.get(4), 0.0);
    }

    #[test]
    fn imaginary_residue_is_rejected() {
        let iz = total_iz(2).unwrap();
        let parts = decompose_by_order(&iz);
        let mut rho = DenseOperator::identity(iz.basis()).scale(0.25);
        rho.entries_mut()[[0, 0]] += Complex64::new(0.0, 1e-3);
        assert!(matches!(
            integrated_intensities(&rho, &parts, 0.0),
            Err(Error::Numerical(_))
        ));
    }

    #[test]
    fn absent_orders_reduce_to_zero() {
        let iz = total_iz(4).unwrap();
        let parts = decompose_by_order(&iz);
        let rho = thermal_state(4, ThermalConfig::Direct(1.0)).unwrap();
        let pair = partial_trace_to_pair(&rho, 1, 2).unwrap();
        assert!(reduced_intensities_from_pair(&pair, &parts, 0.0).is_ok());
        assert_eq!(reduced_intensity(&pair, &parts, 4).unwrap(), Complex64::new(0.0, 0.0));
    }
}
