//! Coupling geometry, the double-quantum Hamiltonian and the initial
//! thermal state.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use ndarray::Array2;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::operator::{Basis, DenseOperator, MAX_SPINS};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Geometry {
    /// Open linear chain, `D_jk = d_nn / |j-k|^3`.
    Chain,
    /// Closed ring, `D_jk = d_nn · [sin(π/N) / sin(π|j-k|/N)]^3`.
    Ring,
}

impl fmt::Display for Geometry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Geometry::Chain => "chain",
            Geometry::Ring => "ring",
        })
    }
}

impl FromStr for Geometry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "chain" => Ok(Geometry::Chain),
            "ring" | "circle" => Ok(Geometry::Ring),
            other => Err(Error::Config(format!("unknown geometry `{other}`"))),
        }
    }
}

/// Dipolar-coupled spin-1/2 cluster with equal spacing and a common angle to
/// the field, so every coupling is fixed by the nearest-neighbour constant.
#[derive(Clone, Debug, PartialEq)]
pub struct SpinSystem {
    n_spins: usize,
    geometry: Geometry,
    d_nn: f64,
    couplings: Array2<f64>,
}

impl SpinSystem {
    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn geometry(&self) -> Geometry {
        self.geometry
    }

    /// Nearest-neighbour coupling `D_{j,j+1}` in s⁻¹.
    pub fn d_nn(&self) -> f64 {
        self.d_nn
    }

    /// `D_jk` for `j != k` (1-based, either order). `None` on the diagonal or
    /// out of range.
    pub fn coupling(&self, j: usize, k: usize) -> Option<f64> {
        if j == k || j == 0 || k == 0 || j > self.n_spins || k > self.n_spins {
            return None;
        }
        Some(self.couplings[[j - 1, k - 1]])
    }

    /// All `(j, k, D_jk)` with `j < k`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.n_spins;
        (1..=n).flat_map(move |j| (j + 1..=n).map(move |k| (j, k, self.couplings[[j - 1, k - 1]])))
    }
}

pub fn build_couplings(geometry: Geometry, n_spins: usize, d_nn: f64) -> Result<SpinSystem> {
    if !(2..=MAX_SPINS).contains(&n_spins) {
        return Err(Error::argument(format!(
            "a coupled cluster needs 2..={MAX_SPINS} spins, got {n_spins}"
        )));
    }
    if !(d_nn.is_finite() && d_nn > 0.0) {
        return Err(Error::argument(format!(
            "nearest-neighbour coupling must be positive, got {d_nn}"
        )));
    }
    let n = n_spins as f64;
    let mut couplings = Array2::zeros((n_spins, n_spins));
    for j in 0..n_spins {
        for k in 0..n_spins {
            if j == k {
                continue;
            }
            let sep = j.abs_diff(k) as f64;
            couplings[[j, k]] = match geometry {
                Geometry::Chain => d_nn / sep.powi(3),
                Geometry::Ring => d_nn * ((PI / n).sin() / (PI * sep / n).sin()).powi(3),
            };
        }
    }
    Ok(SpinSystem {
        n_spins,
        geometry,
        d_nn,
        couplings,
    })
}

/// `H_MQ = -1/4 Σ_{j<k} D_jk (I_j^+ I_k^+ + I_j^- I_k^-)`.
///
/// Built directly from the ladder action: `I_j^+ I_k^+` sends a state with
/// sites `j` and `k` both down to the state with both up, coefficient 1.
pub fn build_h_mq(sys: &SpinSystem) -> DenseOperator {
    let basis = Basis::new(sys.n_spins).expect("validated by build_couplings");
    let mut h = DenseOperator::zeros(basis);
    let entries = h.entries_mut();
    for (j, k, d) in sys.pairs() {
        let both = Basis::site_mask(j) | Basis::site_mask(k);
        let amp = Complex64::new(-0.25 * d, 0.0);
        for down in 0..basis.dim() {
            if down & both != both {
                continue;
            }
            let up = down & !both;
            entries[[up, down]] += amp;
            entries[[down, up]] += amp;
        }
    }
    h
}

/// How the dimensionless Zeeman exponent `b = βω₀` is chosen.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", content = "value", rename_all = "snake_case")]
pub enum ThermalConfig {
    /// Use `b` as given. Negative values populate the `m = -N/2` end.
    Direct(f64),
    /// Fix `b·‖I_z‖ = g` with the spectral norm `‖I_z‖ = N/2`, so `b = 2g/N`.
    NormTarget(f64),
}

/// Default `b = βħω₀ = 10`: protons at 5 T and about 1 mK.
pub const DEFAULT_ZEEMAN_EXPONENT: f64 = 10.0;

impl Default for ThermalConfig {
    fn default() -> Self {
        ThermalConfig::Direct(DEFAULT_ZEEMAN_EXPONENT)
    }
}

impl ThermalConfig {
    pub fn exponent(&self, n_spins: usize) -> f64 {
        match *self {
            ThermalConfig::Direct(b) => b,
            ThermalConfig::NormTarget(g) => 2.0 * g / n_spins as f64,
        }
    }
}

/// `ρ_eq = exp(b·I_z) / Tr exp(b·I_z)`, diagonal in the Zeeman basis.
pub fn thermal_state(n_spins: usize, tc: ThermalConfig) -> Result<DenseOperator> {
    let basis = Basis::new(n_spins)?;
    let b = tc.exponent(n_spins);
    if !b.is_finite() {
        return Err(Error::argument(format!("thermal exponent must be finite, got {b}")));
    }
    // shift by the largest exponent so the biggest weight is exactly 1
    let shift = b.abs() * n_spins as f64 / 2.0;
    let weights: Vec<f64> = (0..basis.dim())
        .map(|i| (b * basis.magnetization(i) - shift).exp())
        .collect();
    let z: f64 = weights.iter().sum();
    Ok(DenseOperator::from_diagonal(basis, |i| weights[i] / z))
}
