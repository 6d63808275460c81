//! Run configuration: defaults, `key = value` files and `--set` overrides.
//!
//! Keys are dotted and flat (`potential.m = 0.441`). A value is a decimal
//! number, optionally written as a multiple of π (`0.99*pi`, `pi`).

use std::f64::consts::PI;
use std::path::{Path, PathBuf};

use super::ReportError;
use crate::kessence::KEssenceModel;
use crate::kink::KinkProfile;
use crate::nucleation::NucleationInputs;
use crate::potential::PotentialParams;
use crate::slowroll::DEFAULT_FLATNESS_THRESHOLD;
use crate::units::PLANCK;

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub potential: PotentialParams,
    /// Interval scanned for the vacua.
    pub search_lo: f64,
    pub search_hi: f64,
    /// Vacuum positions feeding the bracket route of the normalization constants.
    pub bracket_phi_false: f64,
    pub bracket_phi_true: f64,
    pub kink: KinkProfile,
    pub kessence: KEssenceModel,
    pub nucleation: NucleationInputs,
    alpha_gap_set: bool,
    hubble_set: bool,
    pub output_dir: PathBuf,
    pub grid_points: usize,
    pub flatness_threshold: f64,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            potential: PotentialParams::default(),
            search_lo: 0.0,
            search_hi: 2.0 * PI,
            bracket_phi_false: 0.5472,
            bracket_phi_true: 5.457,
            kink: KinkProfile::default(),
            kessence: KEssenceModel::default(),
            nucleation: NucleationInputs::default(),
            alpha_gap_set: false,
            hubble_set: false,
            output_dir: PathBuf::from("."),
            grid_points: 2001,
            flatness_threshold: DEFAULT_FLATNESS_THRESHOLD,
        }
    }
}

/// Every recognised key, in help order.
pub const KEYS: &[&str] = &[
    "potential.m",
    "potential.phi_star",
    "potential.cos_coeff",
    "potential.rho_init",
    "search.lo",
    "search.hi",
    "bracket.phi_false",
    "bracket.phi_true",
    "kink.length_l",
    "kink.steepness_b",
    "kessence.f0",
    "kessence.f2",
    "kessence.x0",
    "kessence.eps0",
    "kessence.v0",
    "nucleation.prefactor_a",
    "nucleation.s_bounce",
    "nucleation.m_field",
    "nucleation.mass_m",
    "nucleation.e_charge",
    "nucleation.e_field_e0",
    "nucleation.hubble_h",
    "nucleation.s_euclid",
    "nucleation.alpha_gap",
    "nucleation.x_vantage",
    "nucleation.length_l",
    "run.grid_points",
    "run.flatness_threshold",
    "run.output_dir",
];

fn parse_number(key: &str, raw: &str) -> Result<f64, ReportError> {
    let s = raw.trim();
    let lower = s.to_ascii_lowercase();
    let value = if lower == "pi" {
        Some(PI)
    } else if let Some(coef) = lower.strip_suffix("*pi") {
        coef.trim().parse::<f64>().ok().map(|c| c * PI)
    } else {
        s.parse::<f64>().ok()
    };
    match value {
        Some(v) if v.is_finite() => Ok(v),
        _ => Err(ReportError::Config(format!(
            "{key}: cannot parse '{raw}' as a finite number"
        ))),
    }
}

impl RunConfig {
    /// Reads `path` on top of the defaults.
    pub fn from_file(path: &Path) -> Result<Self, ReportError> {
        let mut cfg = Self::default();
        cfg.apply_file(path)?;
        Ok(cfg)
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), ReportError> {
        let text = std::fs::read_to_string(path).map_err(|source| ReportError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        self.apply_text(&text)
            .map_err(|e| ReportError::Config(format!("{}: {}", path.display(), e.detail())))
    }

    pub fn apply_text(&mut self, text: &str) -> Result<(), ReportError> {
        for (lineno, line) in text.lines().enumerate() {
            let content = line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| ReportError::Config(format!("line {}: expected 'key = value'", lineno + 1)))?;
            self.set(key.trim(), value.trim())
                .map_err(|e| ReportError::Config(format!("line {}: {}", lineno + 1, e.detail())))?;
        }
        Ok(())
    }

    /// Applies a `key=value` override.
    pub fn apply_assignment(&mut self, assignment: &str) -> Result<(), ReportError> {
        let (key, value) = assignment
            .split_once('=')
            .ok_or_else(|| ReportError::Config(format!("override '{assignment}' is not key=value")))?;
        self.set(key.trim(), value.trim())
    }

    pub fn set(&mut self, key: &str, value: &str) -> Result<(), ReportError> {
        let num = || parse_number(key, value);
        match key {
            "potential.m" => self.potential.m = num()?,
            "potential.phi_star" => self.potential.phi_star = num()?,
            "potential.cos_coeff" => self.potential.cos_coeff = num()?,
            "potential.rho_init" => self.potential.rho_init = num()?,
            "search.lo" => self.search_lo = num()?,
            "search.hi" => self.search_hi = num()?,
            "bracket.phi_false" => self.bracket_phi_false = num()?,
            "bracket.phi_true" => self.bracket_phi_true = num()?,
            "kink.length_l" => self.kink.length_l = num()?,
            "kink.steepness_b" => self.kink.steepness_b = num()?,
            "kessence.f0" => self.kessence.f0 = num()?,
            "kessence.f2" => self.kessence.f2 = num()?,
            "kessence.x0" => self.kessence.x0 = num()?,
            "kessence.eps0" => self.kessence.eps0 = num()?,
            "kessence.v0" => self.kessence.v0 = num()?,
            "nucleation.prefactor_a" => self.nucleation.prefactor_a = num()?,
            "nucleation.s_bounce" => self.nucleation.s_bounce = num()?,
            "nucleation.m_field" => self.nucleation.m_field = num()?,
            "nucleation.mass_m" => self.nucleation.mass_m = num()?,
            "nucleation.e_charge" => self.nucleation.e_charge = num()?,
            "nucleation.e_field_e0" => self.nucleation.e_field_e0 = num()?,
            "nucleation.hubble_h" => {
                self.nucleation.hubble_h = num()?;
                self.hubble_set = true;
            }
            "nucleation.s_euclid" => self.nucleation.s_euclid = num()?,
            "nucleation.alpha_gap" => {
                self.nucleation.alpha_gap = num()?;
                self.alpha_gap_set = true;
            }
            "nucleation.x_vantage" => self.nucleation.x_vantage = num()?,
            "nucleation.length_l" => self.nucleation.length_l = num()?,
            "run.grid_points" => {
                self.grid_points = value
                    .parse()
                    .map_err(|_| ReportError::Config(format!("{key}: '{value}' is not a positive integer")))?
            }
            "run.flatness_threshold" => self.flatness_threshold = num()?,
            "run.output_dir" => self.output_dir = PathBuf::from(value),
            _ => return Err(ReportError::Config(format!("unknown key '{key}'"))),
        }
        Ok(())
    }

    /// The current value of `key`, formatted for help output.
    pub fn get(&self, key: &str) -> Option<String> {
        let v = match key {
            "potential.m" => self.potential.m,
            "potential.phi_star" => self.potential.phi_star,
            "potential.cos_coeff" => self.potential.cos_coeff,
            "potential.rho_init" => self.potential.rho_init,
            "search.lo" => self.search_lo,
            "search.hi" => self.search_hi,
            "bracket.phi_false" => self.bracket_phi_false,
            "bracket.phi_true" => self.bracket_phi_true,
            "kink.length_l" => self.kink.length_l,
            "kink.steepness_b" => self.kink.steepness_b,
            "kessence.f0" => self.kessence.f0,
            "kessence.f2" => self.kessence.f2,
            "kessence.x0" => self.kessence.x0,
            "kessence.eps0" => self.kessence.eps0,
            "kessence.v0" => self.kessence.v0,
            "nucleation.prefactor_a" => self.nucleation.prefactor_a,
            "nucleation.s_bounce" => self.nucleation.s_bounce,
            "nucleation.m_field" => self.nucleation.m_field,
            "nucleation.mass_m" => self.nucleation.mass_m,
            "nucleation.e_charge" => self.nucleation.e_charge,
            "nucleation.e_field_e0" => self.nucleation.e_field_e0,
            "nucleation.hubble_h" if !self.hubble_set => return Some("sqrt(8*pi/3 * V1(phi_star))".into()),
            "nucleation.hubble_h" => self.nucleation.hubble_h,
            "nucleation.s_euclid" => self.nucleation.s_euclid,
            "nucleation.alpha_gap" if !self.alpha_gap_set => return Some("1 / nucleation.length_l".into()),
            "nucleation.alpha_gap" => self.nucleation.alpha_gap,
            "nucleation.x_vantage" => self.nucleation.x_vantage,
            "nucleation.length_l" => self.nucleation.length_l,
            "run.grid_points" => return Some(self.grid_points.to_string()),
            "run.flatness_threshold" => self.flatness_threshold,
            "run.output_dir" => return Some(self.output_dir.display().to_string()),
            _ => return None,
        };
        Some(format!("{v}"))
    }

    /// Checks invariants and fills in the derived nucleation inputs.
    pub fn resolved(&self) -> Result<Self, ReportError> {
        if self.grid_points < 3 || self.grid_points.is_multiple_of(2) {
            return Err(ReportError::Config(format!(
                "run.grid_points must be odd and at least 3, got {}",
                self.grid_points
            )));
        }
        self.potential.validate()?;
        self.kink.validate()?;
        self.kessence.validate()?;
        if !(self.search_lo < self.search_hi) {
            return Err(ReportError::Config("search.lo must be below search.hi".into()));
        }
        let mut out = self.clone();
        if !self.alpha_gap_set {
            out.nucleation.alpha_gap = 1.0 / self.nucleation.length_l;
        }
        if !self.hubble_set {
            let v = crate::potential::v1(self.potential.phi_star, &self.potential);
            out.nucleation.hubble_h = (8.0 * PI / 3.0 * PLANCK.g * v).sqrt();
        }
        Ok(out)
    }

    /// Help text listing every key with its default.
    pub fn describe_keys() -> String {
        let d = Self::default();
        let width = KEYS.iter().map(|k| k.len()).max().unwrap_or(0);
        let mut s = String::from("Overridable parameters (--set key=value or config file), with defaults:\n");
        for key in KEYS {
            s.push_str(&format!("  {key:<width$}  {}\n", d.get(key).unwrap_or_default()));
        }
        s
    }
}
