//! Parameter sweeps over `(t, a, D_z)` and their CSV output.
//!
//! Each figure preset fixes a measure, a state family and a noise level.
//! Fixed-state presets use the reference pair from
//! [`reference_states`](crate::switch::reference_states); parametrized presets
//! use [`parametrized_states`](crate::switch::parametrized_states) over an
//! `a` grid.
//!
//! Rows are ordered with `t` as the outer loop and `a` as the inner loop no
//! matter how the grid is evaluated.

use std::collections::BTreeMap;
use std::f64::consts::FRAC_PI_2;
use std::fmt;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::str::FromStr;

use rayon::prelude::*;

use crate::coherence::{c_delta_abs, c_l1_switch, c_l1_switch_dm, c_re};
use crate::error::{Error, Result};
use crate::estimator::swap_test;
use crate::noise::switched_register;
use crate::switch::{marginals, parametrized_states, reference_states, rho_ab, QubitState};

pub const CSV_HEADER: &str = "t,a,dz,measure,value";
pub const DEFAULT_STEPS: usize = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Figure {
    Fig2a,
    Fig2b,
    Fig2c,
    Fig2d,
    Fig2e,
    Fig2f,
    Fig2g,
    Fig2h,
    Fig3a,
    Fig3b,
    Custom,
}

impl Figure {
    pub const ALL: [Figure; 11] = [
        Figure::Fig2a,
        Figure::Fig2b,
        Figure::Fig2c,
        Figure::Fig2d,
        Figure::Fig2e,
        Figure::Fig2f,
        Figure::Fig2g,
        Figure::Fig2h,
        Figure::Fig3a,
        Figure::Fig3b,
        Figure::Custom,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Figure::Fig2a => "2a",
            Figure::Fig2b => "2b",
            Figure::Fig2c => "2c",
            Figure::Fig2d => "2d",
            Figure::Fig2e => "2e",
            Figure::Fig2f => "2f",
            Figure::Fig2g => "2g",
            Figure::Fig2h => "2h",
            Figure::Fig3a => "3a",
            Figure::Fig3b => "3b",
            Figure::Custom => "custom",
        }
    }

    /// `(measure, parametrized family?, dz)` bound by the preset.
    fn binding(self) -> (Measure, bool, f64) {
        match self {
            Figure::Fig2a => (Measure::L1, false, 0.0),
            Figure::Fig2b => (Measure::L1, true, 0.0),
            Figure::Fig2c => (Measure::L1, false, 0.5),
            Figure::Fig2d => (Measure::L1, true, 0.5),
            Figure::Fig2e => (Measure::Re, false, 0.0),
            Figure::Fig2f => (Measure::Re, true, 0.0),
            Figure::Fig2g => (Measure::Re, false, 0.5),
            Figure::Fig2h => (Measure::Re, true, 0.5),
            Figure::Fig3a => (Measure::Delta, false, 0.5),
            Figure::Fig3b => (Measure::Delta, true, 0.5),
            Figure::Custom => (Measure::L1, false, 0.0),
        }
    }

    pub fn description(self) -> String {
        if self == Figure::Custom {
            return "user-defined measure, states and ranges (defaults: l1, reference states, dz=0)".into();
        }
        let (measure, parametrized, dz) = self.binding();
        let family = if parametrized {
            "parametrized states over a"
        } else {
            "reference states"
        };
        format!("{measure} vs t, {family}, dz={dz}")
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.id())
    }
}

impl FromStr for Figure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Figure::ALL
            .into_iter()
            .find(|f| f.id().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::invalid_spec("figure", format!("unknown figure id `{s}`")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Measure {
    /// l1-norm coherence of `ρ_AB`.
    L1,
    /// Relative entropy of coherence of `ρ_AB`.
    Re,
    /// `|C_l1(noiseless) − C_l1(noisy)|`.
    Delta,
    /// Swap-test overlap of the marginals `ρ_A`, `ρ_B`.
    Overlap,
}

impl Measure {
    pub fn tag(self) -> &'static str {
        match self {
            Measure::L1 => "l1",
            Measure::Re => "re",
            Measure::Delta => "delta",
            Measure::Overlap => "overlap",
        }
    }
}

impl fmt::Display for Measure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Measure {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "l1" => Ok(Measure::L1),
            "re" => Ok(Measure::Re),
            "delta" => Ok(Measure::Delta),
            "overlap" => Ok(Measure::Overlap),
            _ => Err(Error::invalid_spec(
                "measure",
                format!("unknown measure `{s}`"),
            )),
        }
    }
}

/// Inclusive, evenly spaced grid `start..=stop` with `steps` points.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GridRange {
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
}

impl GridRange {
    pub fn new(start: f64, stop: f64, steps: usize) -> Self {
        Self { start, stop, steps }
    }

    /// `[0, π/2]` with [`DEFAULT_STEPS`] points.
    pub fn default_window() -> Self {
        Self::new(0.0, FRAC_PI_2, DEFAULT_STEPS)
    }

    fn validate(&self, axis: &str) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::invalid_spec(
                &format!("{axis}-steps"),
                format!("need at least 2 steps, got {}", self.steps),
            ));
        }
        if !self.start.is_finite() || !self.stop.is_finite() {
            return Err(Error::invalid_spec(
                &format!("{axis}-start"),
                "range bounds must be finite",
            ));
        }
        if self.start >= self.stop {
            return Err(Error::invalid_spec(
                &format!("{axis}-start"),
                format!("start {} must be below stop {}", self.start, self.stop),
            ));
        }
        Ok(())
    }

    pub fn points(&self) -> Vec<f64> {
        let last = (self.steps - 1) as f64;
        (0..self.steps)
            .map(|k| {
                if k + 1 == self.steps {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * k as f64 / last
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub figure: Figure,
    pub t_range: GridRange,
    /// `None` selects the fixed reference states.
    pub a_range: Option<GridRange>,
    pub dz: f64,
    pub measure: Measure,
    /// Shots for the overlap measure; 0 means exact probabilities.
    pub shots: u64,
    pub seed: u64,
    pub output_path: PathBuf,
}

impl SweepSpec {
    pub fn preset(figure: Figure) -> Self {
        let (measure, parametrized, dz) = figure.binding();
        Self {
            figure,
            t_range: GridRange::default_window(),
            a_range: parametrized.then(GridRange::default_window),
            dz,
            measure,
            shots: 0,
            seed: 0,
            output_path: PathBuf::from(format!("figure_{}.csv", figure.id())),
        }
    }

    pub fn validate(&self) -> Result<()> {
        self.t_range.validate("t")?;
        if let Some(a) = &self.a_range {
            a.validate("a")?;
        }
        if !self.dz.is_finite() || self.dz < 0.0 {
            return Err(Error::invalid_spec(
                "dz",
                format!("must be a finite value >= 0, got {}", self.dz),
            ));
        }
        if self.shots > 0 && self.measure != Measure::Overlap {
            return Err(Error::invalid_spec(
                "shots",
                "shots only apply to the overlap measure",
            ));
        }
        Ok(())
    }

    /// Builds a spec from `key=value` settings (config file merged with flags).
    /// `figure` selects the preset; other keys override it.
    pub fn from_settings(settings: &BTreeMap<String, String>) -> Result<Self> {
        for key in settings.keys() {
            if !SETTING_KEYS.contains(&key.as_str()) {
                return Err(Error::invalid_spec(key, "unknown setting"));
            }
        }
        let get = |k: &str| settings.get(k).map(String::as_str);

        let figure: Figure = match get("figure") {
            Some(id) => id.parse()?,
            None => return Err(Error::invalid_spec("figure", "no figure id given")),
        };
        let mut spec = SweepSpec::preset(figure);

        if let Some(m) = get("measure") {
            let m: Measure = m.parse()?;
            if figure != Figure::Custom && m != spec.measure {
                return Err(Error::invalid_spec(
                    "measure",
                    format!(
                        "figure {figure} is bound to `{}`; use --figure custom",
                        spec.measure
                    ),
                ));
            }
            spec.measure = m;
        }
        if let Some(v) = get("dz") {
            spec.dz = parse_num("dz", v)?;
        }
        if let Some(v) = get("t-start") {
            spec.t_range.start = parse_num("t-start", v)?;
        }
        if let Some(v) = get("t-stop") {
            spec.t_range.stop = parse_num("t-stop", v)?;
        }
        if let Some(v) = get("t-steps") {
            spec.t_range.steps = parse_num("t-steps", v)?;
        }

        let a_keys = ["a-start", "a-stop", "a-steps"];
        if a_keys.iter().any(|k| settings.contains_key(*k)) {
            let range = match (&mut spec.a_range, figure) {
                (Some(r), _) => r,
                (None, Figure::Custom) => spec.a_range.insert(GridRange::default_window()),
                (None, _) => {
                    return Err(Error::invalid_spec(
                        "a-steps",
                        format!(
                            "figure {figure} uses the fixed reference states; it has no a axis"
                        ),
                    ))
                }
            };
            if let Some(v) = get("a-start") {
                range.start = parse_num("a-start", v)?;
            }
            if let Some(v) = get("a-stop") {
                range.stop = parse_num("a-stop", v)?;
            }
            if let Some(v) = get("a-steps") {
                range.steps = parse_num("a-steps", v)?;
            }
        }

        if let Some(v) = get("shots") {
            spec.shots = parse_num("shots", v)?;
        }
        if let Some(v) = get("seed") {
            spec.seed = parse_num("seed", v)?;
        }
        if let Some(v) = get("out") {
            if v.trim().is_empty() {
                return Err(Error::invalid_spec("out", "empty output path"));
            }
            spec.output_path = PathBuf::from(v.trim());
        }
        spec.validate()?;
        Ok(spec)
    }
}

/// Keys accepted by [`SweepSpec::from_settings`] and in config files.
pub const SETTING_KEYS: [&str; 12] = [
    "figure", "dz", "t-start", "t-stop", "t-steps", "a-start", "a-stop", "a-steps", "measure",
    "out", "shots", "seed",
];

fn parse_num<T: FromStr>(field: &str, v: &str) -> Result<T> {
    v.trim()
        .parse()
        .map_err(|_| Error::invalid_spec(field, format!("cannot parse `{v}`")))
}

/// Parses `key=value` lines. Blank lines and `#` comments are skipped;
/// underscores in keys are read as dashes.
pub fn parse_config(text: &str) -> Result<BTreeMap<String, String>> {
    let mut out = BTreeMap::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::invalid_spec(
                "config",
                format!("line {}: expected key=value, got `{raw}`", lineno + 1),
            )
        })?;
        let key = key.trim().replace('_', "-");
        if !SETTING_KEYS.contains(&key.as_str()) {
            return Err(Error::invalid_spec(
                &key,
                format!("unknown config key on line {}", lineno + 1),
            ));
        }
        out.insert(key, value.trim().to_string());
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepRow {
    pub t: f64,
    /// `None` for fixed-state sweeps.
    pub a: Option<f64>,
    pub dz: f64,
    pub measure: Measure,
    pub value: f64,
}

fn evaluate(spec: &SweepSpec, a: QubitState, b: QubitState, t: f64, seed: u64) -> Result<f64> {
    let dz = spec.dz;
    let value = match spec.measure {
        Measure::L1 if dz == 0.0 => c_l1_switch(&a, &b, t).value(),
        Measure::L1 => c_l1_switch_dm(&a, &b, t, dz).value(),
        Measure::Re => c_re(&rho_ab(&switched_register(a, b, t, dz)))?.value(),
        Measure::Delta => c_delta_abs(&a, &b, t, dz),
        Measure::Overlap => {
            let (rho_a, rho_b) = marginals(&switched_register(a, b, t, dz));
            swap_test(&rho_a, &rho_b, spec.shots, seed)?.overlap
        }
    };
    Ok(value)
}

/// Evaluates the spec's measure over its grid. Sampled overlaps at grid
/// position `k` (row order) are seeded with `seed + k`.
pub fn run_sweep(spec: &SweepSpec) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    let ts = spec.t_range.points();
    let a_values: Vec<Option<f64>> = match &spec.a_range {
        Some(r) => r.points().into_iter().map(Some).collect(),
        None => vec![None],
    };
    let grid: Vec<(f64, Option<f64>)> = ts
        .iter()
        .flat_map(|&t| a_values.iter().map(move |&a| (t, a)))
        .collect();

    grid.par_iter()
        .enumerate()
        .map(|(k, &(t, a))| {
            let (qa, qb) = match a {
                Some(angle) => parametrized_states(angle),
                None => reference_states(),
            };
            let value = evaluate(spec, qa, qb, t, spec.seed.wrapping_add(k as u64))?;
            Ok(SweepRow {
                t,
                a,
                dz: spec.dz,
                measure: spec.measure,
                value,
            })
        })
        .collect()
}

/// Formats with 12 significant digits, trailing zeros trimmed (like `%.12g`).
pub fn format_value(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if !(-5..12).contains(&exp) {
        let mantissa = trim_fraction(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (11 - exp) as usize;
    trim_fraction(&format!("{x:.decimals$}")).to_string()
}

fn trim_fraction(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn write_rows(rows: &[SweepRow], out: &mut impl Write) -> Result<()> {
    writeln!(out, "{CSV_HEADER}")?;
    for r in rows {
        let a = r.a.map(format_value).unwrap_or_default();
        writeln!(
            out,
            "{},{},{},{},{}",
            format_value(r.t),
            a,
            format_value(r.dz),
            r.measure,
            format_value(r.value)
        )?;
    }
    Ok(())
}

/// Writes the header and one line per row.
pub fn write_csv(rows: &[SweepRow], path: &Path) -> Result<()> {
    if rows.is_empty() {
        return Err(Error::InvalidArgument("no rows to write".into()));
    }
    let mut w = BufWriter::new(File::create(path)?);
    write_rows(rows, &mut w)?;
    w.flush()?;
    Ok(())
}
