//! Experiment orchestration: presets, the τ grid, strict invariant checks
//! and dataset emission.

mod config;
mod emit;

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

pub use config::{default_orders, parse_orders, parse_pairs, OutputFormat, Preset, RunConfig};
pub use emit::{emit, format_value, metadata_path};

use crate::coherence::{integrated_intensities, reduced_intensities_from_pair, CoherenceSpectrum};
use crate::dynamics::{spectral_decompose, EigenbasisOperator, SpectralForm};
use crate::entanglement::{concurrence, entanglement_of_formation, PairState};
use crate::error::{Error, Result};
use crate::model::{build_couplings, build_h_mq, thermal_state};
use crate::operator::{decompose_by_order, partial_trace_to_pair, total_iz, DenseOperator};

/// Tolerance for conservation, reality and `k ↔ -k` symmetry of `J_k`.
pub const SPECTRUM_TOLERANCE: f64 = 1e-10;
/// Tolerance for Hermiticity and trace of the evolved operators.
pub const OPERATOR_TOLERANCE: f64 = 1e-10;
/// Largest entry allowed in an odd-order part of `ρ_z(τ)`.
pub const ODD_ORDER_TOLERANCE: f64 = 1e-12;

/// Observables of one spin pair at one `τ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PairRow {
    pub pair: (usize, usize),
    pub j0: f64,
    pub j_plus2: f64,
    pub j_minus2: f64,
    pub concurrence: f64,
    pub formation: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Row {
    pub tau: f64,
    pub spectrum: CoherenceSpectrum,
    pub pairs: Vec<PairRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Metadata {
    pub tool: String,
    pub version: String,
    pub preset: Preset,
    pub n_spins: usize,
    pub geometry: String,
    pub d_nn: f64,
    pub thermal_mode: String,
    pub thermal_value: f64,
    /// Zeeman exponent `b` actually used.
    pub b: f64,
    pub trace_rho_iz: f64,
    pub tau_max: f64,
    pub tau_points: usize,
    pub pairs: String,
    pub orders: String,
    pub workers: usize,
    pub strict: bool,
    pub wall_time_s: f64,
}

#[derive(Clone, Debug)]
pub struct RunResult {
    pub metadata: Metadata,
    pub emit_orders: Vec<i32>,
    pub pairs: Vec<(usize, usize)>,
    pub rows: Vec<Row>,
}

impl RunResult {
    /// Column names in emission order.
    pub fn columns(&self) -> Vec<String> {
        let mut cols = vec!["tau".to_string()];
        cols.extend(self.emit_orders.iter().map(|k| format!("J[{k}]")));
        for (m, n) in &self.pairs {
            cols.push(format!("Jred[{m}-{n}][0]"));
            cols.push(format!("Jred[{m}-{n}][+2]"));
            cols.push(format!("Jred[{m}-{n}][-2]"));
            cols.push(format!("C[{m}-{n}]"));
            cols.push(format!("EF[{m}-{n}]"));
        }
        cols
    }

    /// Values of one row, aligned with [`Self::columns`].
    pub fn row_values(&self, row: &Row) -> Vec<f64> {
        let mut values = vec![row.tau];
        values.extend(self.emit_orders.iter().map(|&k| row.spectrum.get(k)));
        for p in &row.pairs {
            values.extend([p.j0, p.j_plus2, p.j_minus2, p.concurrence, p.formation]);
        }
        values
    }

    /// A whole column by name.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let idx = self.columns().iter().position(|c| c == name)?;
        Some(self.rows.iter().map(|r| self.row_values(r)[idx]).collect())
    }

    pub fn taus(&self) -> Vec<f64> {
        self.rows.iter().map(|r| r.tau).collect()
    }
}

/// Uniform grid of `points` samples on `[0, tau_max]`.
pub fn tau_grid(tau_max: f64, points: usize) -> Vec<f64> {
    let last = (points - 1) as f64;
    (0..points)
        .map(|i| if i + 1 == points { tau_max } else { tau_max * i as f64 / last })
        .collect()
}

struct Pipeline<'a> {
    config: &'a RunConfig,
    spectral: SpectralForm,
    rho_eq: EigenbasisOperator,
    iz: EigenbasisOperator,
    trace_rho_iz: f64,
}

impl Pipeline<'_> {
    fn violation(&self, what: String) -> Result<()> {
        if self.config.strict {
            Err(Error::Numerical(what))
        } else {
            log::warn!("{what}");
            Ok(())
        }
    }

    fn check(&self, ok: bool, what: impl FnOnce() -> String) -> Result<()> {
        if ok {
            Ok(())
        } else {
            self.violation(what())
        }
    }

    fn check_operator(&self, op: &DenseOperator, name: &str, trace: f64, tau: f64) -> Result<()> {
        let herm = op.hermitian_residual();
        self.check(herm <= OPERATOR_TOLERANCE, || {
            format!("{name} not Hermitian at tau = {tau} (residue {herm:.3e})")
        })?;
        let tr = op.trace();
        self.check((tr.re - trace).abs() <= OPERATOR_TOLERANCE && tr.im.abs() <= OPERATOR_TOLERANCE, || {
            format!("{name} trace {tr} at tau = {tau}, expected {trace}")
        })
    }

    fn evaluate(&self, tau: f64) -> Result<Row> {
        let rho = self.spectral.evolve(&self.rho_eq, tau)?;
        let rhoz = self.spectral.evolve(&self.iz, tau)?;
        self.check_operator(&rho, "rho", 1.0, tau)?;
        self.check_operator(&rhoz, "rho_z", 0.0, tau)?;

        let parts = decompose_by_order(&rhoz);
        let odd = parts.max_odd_entry();
        self.check(odd <= ODD_ORDER_TOLERANCE, || {
            format!("odd-order part of rho_z has entry {odd:.3e} at tau = {tau}")
        })?;

        let spectrum = integrated_intensities(&rho, &parts, tau)?;
        self.check(spectrum.max_imag() <= SPECTRUM_TOLERANCE, || {
            format!("J_k imaginary residue {:.3e} at tau = {tau}", spectrum.max_imag())
        })?;
        self.check(spectrum.symmetry_residual() <= SPECTRUM_TOLERANCE, || {
            format!("J_k != J_-k by {:.3e} at tau = {tau}", spectrum.symmetry_residual())
        })?;
        let drift = (spectrum.total() - self.trace_rho_iz).abs();
        self.check(drift <= SPECTRUM_TOLERANCE, || {
            format!("sum of J_k drifts by {drift:.3e} at tau = {tau}")
        })?;

        let mut pairs = Vec::with_capacity(self.config.pairs.len());
        for &(m, n) in &self.config.pairs {
            let rho_pair = partial_trace_to_pair(&rho, m, n)?;
            let ps = reduced_intensities_from_pair(&rho_pair, &parts, tau)?;
            self.check(ps.max_imag() <= SPECTRUM_TOLERANCE, || {
                format!("Jred[{m}-{n}] imaginary residue {:.3e} at tau = {tau}", ps.max_imag())
            })?;
            let state = match PairState::new(rho_pair.clone(), tau) {
                Ok(s) => s,
                Err(e) if !self.config.strict => {
                    log::warn!("{e}");
                    PairState::assume_valid(rho_pair, tau)
                }
                Err(e) => return Err(e),
            };
            let c = concurrence(&state)?;
            pairs.push(PairRow {
                pair: (m, n),
                j0: ps.get(0),
                j_plus2: ps.get(2),
                j_minus2: ps.get(-2),
                concurrence: c,
                formation: entanglement_of_formation(c)?,
            });
        }
        Ok(Row { tau, spectrum, pairs })
    }
}

/// Runs the full experiment described by `config`.
///
/// `H_MQ` is diagonalized once; every grid point is then evaluated
/// independently on a pool of `config.workers` threads and gathered in `τ`
/// order, so the output does not depend on the worker count.
pub fn run(config: &RunConfig) -> Result<RunResult> {
    config.validate()?;
    let start = Instant::now();

    let sys = build_couplings(config.geometry, config.n_spins, config.d_nn)
        .map_err(|e| Error::Config(e.to_string()))?;
    let spectral = spectral_decompose(&build_h_mq(&sys))?;
    let rho_eq = thermal_state(config.n_spins, config.thermal)?;
    let iz = total_iz(config.n_spins)?;
    let trace_rho_iz: f64 = rho_eq
        .entries()
        .diag()
        .iter()
        .zip(iz.entries().diag())
        .map(|(r, m)| (r * m).re)
        .sum();
    let pipeline = Pipeline {
        config,
        rho_eq: spectral.to_eigenbasis(&rho_eq)?,
        iz: spectral.to_eigenbasis(&iz)?,
        spectral,
        trace_rho_iz,
    };

    let grid = tau_grid(config.tau_max, config.tau_points);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Config(format!("thread pool: {e}")))?;
    let rows = pool.install(|| {
        grid.par_iter()
            .map(|&tau| pipeline.evaluate(tau))
            .collect::<Result<Vec<Row>>>()
    })?;

    let metadata = Metadata {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        preset: config.preset,
        n_spins: config.n_spins,
        geometry: config.geometry.to_string(),
        d_nn: config.d_nn,
        thermal_mode: config.thermal_mode_name().to_string(),
        thermal_value: config.thermal_value(),
        b: config.thermal.exponent(config.n_spins),
        trace_rho_iz,
        tau_max: config.tau_max,
        tau_points: config.tau_points,
        pairs: config.pairs_string(),
        orders: config.orders_string(),
        workers: config.workers,
        strict: config.strict,
        wall_time_s: start.elapsed().as_secs_f64(),
    };
    Ok(RunResult {
        metadata,
        emit_orders: config.emit_orders.clone(),
        pairs: config.pairs.clone(),
        rows,
    })
}
