use std::collections::HashSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::model::{Geometry, ThermalConfig};
use crate::operator::MAX_SPINS;

/// Systems of the three published figures, plus free-form runs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Preset {
    /// Four-spin chain, pairs (1,2), (1,3), (1,4).
    Fig1,
    /// Six-spin ring, pairs (1,2), (1,3), (1,4), with `J_6`.
    Fig2,
    /// Ten-spin chain, pairs (1,2), (1,3), (1,10), with `J_10`.
    Fig3,
    Custom,
}

impl Preset {
    /// `(n_spins, geometry, pairs)` fixed by the preset.
    pub fn system(self) -> Option<(usize, Geometry, Vec<(usize, usize)>)> {
        match self {
            Preset::Fig1 => Some((4, Geometry::Chain, vec![(1, 2), (1, 3), (1, 4)])),
            Preset::Fig2 => Some((6, Geometry::Ring, vec![(1, 2), (1, 3), (1, 4)])),
            Preset::Fig3 => Some((10, Geometry::Chain, vec![(1, 2), (1, 3), (1, 10)])),
            Preset::Custom => None,
        }
    }

    /// Highest coherence order overlaid in the figure, if any.
    pub fn highlight_order(self) -> Option<i32> {
        match self {
            Preset::Fig2 => Some(6),
            Preset::Fig3 => Some(10),
            _ => None,
        }
    }
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Preset::Fig1 => "fig1",
            Preset::Fig2 => "fig2",
            Preset::Fig3 => "fig3",
            Preset::Custom => "custom",
        })
    }
}

impl FromStr for Preset {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "fig1" => Ok(Preset::Fig1),
            "fig2" => Ok(Preset::Fig2),
            "fig3" => Ok(Preset::Fig3),
            "custom" => Ok(Preset::Custom),
            other => Err(Error::Config(format!("unknown preset `{other}`"))),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    /// Data CSV plus a `<stem>.meta.json` metadata file.
    #[default]
    Csv,
    /// One JSON document holding metadata, column names and rows.
    Json,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// Full description of one simulation.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunConfig {
    pub preset: Preset,
    pub n_spins: usize,
    pub geometry: Geometry,
    /// Nearest-neighbour coupling in s⁻¹.
    pub d_nn: f64,
    pub thermal: ThermalConfig,
    pub tau_max: f64,
    pub tau_points: usize,
    pub pairs: Vec<(usize, usize)>,
    /// Orders `k` written as `J[k]` columns.
    pub emit_orders: Vec<i32>,
    pub output_path: Option<PathBuf>,
    pub format: OutputFormat,
    pub workers: usize,
    /// Abort on any invariant violation instead of logging it.
    pub strict: bool,
}

/// Non-negative even orders `0, 2, …, ≤ N`.
pub fn default_orders(n_spins: usize) -> Vec<i32> {
    (0..=n_spins as i32).step_by(2).collect()
}

impl RunConfig {
    pub fn custom(n_spins: usize, geometry: Geometry) -> Self {
        RunConfig {
            preset: Preset::Custom,
            n_spins,
            geometry,
            d_nn: 1.0,
            thermal: ThermalConfig::default(),
            tau_max: 10.0,
            tau_points: 500,
            pairs: Vec::new(),
            emit_orders: default_orders(n_spins),
            output_path: None,
            format: OutputFormat::Csv,
            workers: 1,
            strict: true,
        }
    }

    pub fn from_preset(preset: Preset) -> Self {
        match preset.system() {
            Some((n, geometry, pairs)) => RunConfig {
                preset,
                pairs,
                ..RunConfig::custom(n, geometry)
            },
            None => RunConfig::custom(2, Geometry::Chain),
        }
    }

    /// Sets `d_nn` and rescales the default range `τ ∈ [0, 10/d_nn]`.
    pub fn with_d_nn(mut self, d_nn: f64) -> Self {
        self.d_nn = d_nn;
        self.tau_max = 10.0 / d_nn;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::Config(msg));
        if !(2..=MAX_SPINS).contains(&self.n_spins) {
            return bad(format!("n_spins must be in 2..={MAX_SPINS}, got {}", self.n_spins));
        }
        if let Some((n, geometry, pairs)) = self.preset.system() {
            if n != self.n_spins || geometry != self.geometry {
                return bad(format!(
                    "preset {} fixes a {n}-spin {geometry}, got {} spins, {}",
                    self.preset, self.n_spins, self.geometry
                ));
            }
            if let Some(missing) = pairs.iter().find(|p| !self.pairs.contains(p)) {
                return bad(format!("preset {} requires pair {missing:?}", self.preset));
            }
        }
        if !(self.d_nn.is_finite() && self.d_nn > 0.0) {
            return bad(format!("d_nn must be positive, got {}", self.d_nn));
        }
        if !self.thermal.exponent(self.n_spins).is_finite() {
            return bad(format!("thermal setting {:?} gives a non-finite exponent", self.thermal));
        }
        if !(self.tau_max.is_finite() && self.tau_max > 0.0) {
            return bad(format!("tau_max must be positive, got {}", self.tau_max));
        }
        if self.tau_points < 2 {
            return bad(format!("tau_points must be at least 2, got {}", self.tau_points));
        }
        let mut seen = HashSet::new();
        for &(m, n) in &self.pairs {
            if !(1 <= m && m < n && n <= self.n_spins) {
                return bad(format!("pair {m}-{n} invalid for {} spins", self.n_spins));
            }
            if !seen.insert((m, n)) {
                return bad(format!("pair {m}-{n} listed twice"));
            }
        }
        let mut seen = HashSet::new();
        for &k in &self.emit_orders {
            if k.unsigned_abs() as usize > self.n_spins {
                return bad(format!("order {k} exceeds N = {}", self.n_spins));
            }
            if !seen.insert(k) {
                return bad(format!("order {k} listed twice"));
            }
        }
        if self.workers == 0 {
            return bad("workers must be at least 1".into());
        }
        Ok(())
    }

    pub(crate) fn thermal_mode_name(&self) -> &'static str {
        match self.thermal {
            ThermalConfig::Direct(_) => "direct",
            ThermalConfig::NormTarget(_) => "norm_target",
        }
    }

    pub(crate) fn thermal_value(&self) -> f64 {
        match self.thermal {
            ThermalConfig::Direct(v) | ThermalConfig::NormTarget(v) => v,
        }
    }

    pub(crate) fn pairs_string(&self) -> String {
        self.pairs.iter().map(|(m, n)| format!("{m}-{n}")).collect::<Vec<_>>().join(",")
    }

    pub(crate) fn orders_string(&self) -> String {
        self.emit_orders.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses `"1-2,1-3"`. An empty string yields no pairs.
pub fn parse_pairs(s: &str) -> Result<Vec<(usize, usize)>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            let (m, n) = t
                .split_once('-')
                .ok_or_else(|| Error::Config(format!("pair `{t}` is not of the form m-n")))?;
            let parse = |x: &str| {
                x.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Config(format!("pair `{t}` has a non-integer site")))
            };
            Ok((parse(m)?, parse(n)?))
        })
        .collect()
}

/// Parses `"0,2,-2"`.
pub fn parse_orders(s: &str) -> Result<Vec<i32>> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| {
            t.trim_start_matches('+')
                .parse::<i32>()
                .map_err(|_| Error::Config(format!("order `{t}` is not an integer")))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn presets_match_figure_systems() {
        let f1 = RunConfig::from_preset(Preset::Fig1);
        assert_eq!((f1.n_spins, f1.geometry), (4, Geometry::Chain));
        assert_eq!(f1.pairs, vec![(1, 2), (1, 3), (1, 4)]);
        assert_eq!(f1.emit_orders, vec![0, 2, 4]);
        let f2 = RunConfig::from_preset(Preset::Fig2);
        assert_eq!((f2.n_spins, f2.geometry), (6, Geometry::Ring));
        assert_eq!(f2.pairs, vec![(1, 2), (1, 3), (1, 4)]);
        assert!(f2.emit_orders.contains(&6));
        let f3 = RunConfig::from_preset(Preset::Fig3);
        assert_eq!((f3.n_spins, f3.geometry), (10, Geometry::Chain));
        assert_eq!(f3.pairs, vec![(1, 2), (1, 3), (1, 10)]);
        assert!(f3.emit_orders.contains(&10));
        for p in [Preset::Fig1, Preset::Fig2, Preset::Fig3] {
            let cfg = RunConfig::from_preset(p);
            cfg.validate().unwrap();
            assert_eq!(cfg.tau_points, 500);
            assert_eq!(cfg.tau_max, 10.0);
            assert_eq!(cfg.thermal, ThermalConfig::Direct(10.0));
        }
    }

    #[test]
    fn preset_conflicts_rejected() {
        let mut cfg = RunConfig::from_preset(Preset::Fig1);
        cfg.n_spins = 5;
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::from_preset(Preset::Fig2);
        cfg.pairs = vec![(1, 2)];
        assert!(cfg.validate().is_err());
        let mut cfg = RunConfig::from_preset(Preset::Fig3);
        cfg.pairs.push((1, 5));
        cfg.validate().unwrap();
    }

    #[test]
    fn validation_errors() {
        let base = RunConfig::custom(4, Geometry::Ring);
        let cases: Vec<Box<dyn Fn(&mut RunConfig)>> = vec![
            Box::new(|c| c.tau_points = 1),
            Box::new(|c| c.tau_max = 0.0),
            Box::new(|c| c.d_nn = -1.0),
            Box::new(|c| c.pairs = vec![(3, 1)]),
            Box::new(|c| c.pairs = vec![(1, 5)]),
            Box::new(|c| c.pairs = vec![(1, 2), (1, 2)]),
            Box::new(|c| c.emit_orders = vec![6]),
            Box::new(|c| c.emit_orders = vec![2, 2]),
            Box::new(|c| c.workers = 0),
            Box::new(|c| c.n_spins = 13),
        ];
        for mutate in cases {
            let mut cfg = base.clone();
            mutate(&mut cfg);
            assert!(matches!(cfg.validate(), Err(Error::Config(_))), "{cfg:?}");
        }
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_pairs("1-2, 1-10").unwrap(), vec![(1, 2), (1, 10)]);
        assert_eq!(parse_pairs("").unwrap(), vec![]);
        assert!(parse_pairs("1:2").is_err());
        assert!(parse_pairs("a-2").is_err());
        assert_eq!(parse_orders("0,+2,-2").unwrap(), vec![0, 2, -2]);
        assert!(parse_orders("x").is_err());
        assert_eq!("ring".parse::<Geometry>().unwrap(), Geometry::Ring);
        assert_eq!("FIG3".parse::<Preset>().unwrap(), Preset::Fig3);
        assert!("fig4".parse::<Preset>().is_err());
        assert_eq!("json".parse::<OutputFormat>().unwrap(), OutputFormat::Json);
    }

    #[test]
    fn d_nn_rescales_range() {
        let cfg = RunConfig::custom(3, Geometry::Chain).with_d_nn(4.0);
        assert_eq!(cfg.tau_max, 2.5);
    }
}
