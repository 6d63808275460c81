//! Hubble rate and the flatness / negative-pressure diagnostics.
//!
//! Evaluated against `V1` alone: the constant initial energy density is not
//! part of `H²` here.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::potential::{v1, v1_d1, v1_d2, PotentialParams};
use crate::units::PLANCK;

/// Default cutoff for `|V''| / H² ≪ 1`.
pub const DEFAULT_FLATNESS_THRESHOLD: f64 = 0.15;

/// `H² = (8π/3) G V`.
pub fn hubble_squared(v: f64) -> Result<f64> {
    if !(v >= 0.0) {
        return Err(domain(format!(
            "potential must be non-negative where H² is evaluated, got {v}"
        )));
    }
    Ok(8.0 * PI / 3.0 * PLANCK.g * v)
}

/// `(ε, η)` from a potential value and its first two derivatives,
/// `ε = M̃²/2 (V'/V)²`, `η = M̃² V''/V`, `M̃² = M_p²/8π`.
pub fn slow_roll_parameters(v: f64, v_d1: f64, v_d2: f64) -> (f64, f64) {
    let m2 = PLANCK.reduced_mass_sq();
    let r = v_d1 / v;
    (0.5 * m2 * r * r, m2 * v_d2 / v)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SlowRollReport {
    pub phi: f64,
    pub v: f64,
    pub h_squared: f64,
    pub v_dd_abs: f64,
    /// `|V''| / H²`.
    pub ratio: f64,
    pub epsilon_sr: f64,
    pub eta_sr: f64,
    pub passes_flat: bool,
    pub passes_negative_pressure: bool,
}

pub fn slow_roll_report(phi: f64, p: &PotentialParams, flatness_threshold: f64) -> Result<SlowRollReport> {
    let v = v1(phi, p);
    if !(v > 0.0) {
        return Err(domain(format!("slow-roll diagnostics need V > 0, got V({phi}) = {v}")));
    }
    let h_squared = hubble_squared(v)?;
    let v_dd = v1_d2(phi, p);
    let v_dd_abs = v_dd.abs();
    let ratio = v_dd_abs / h_squared;
    let (epsilon_sr, eta_sr) = slow_roll_parameters(v, v1_d1(phi, p), v_dd);
    Ok(SlowRollReport {
        phi,
        v,
        h_squared,
        v_dd_abs,
        ratio,
        epsilon_sr,
        eta_sr,
        passes_flat: ratio < flatness_threshold,
        passes_negative_pressure: epsilon_sr < 1.0 && eta_sr.abs() < 1.0,
    })
}
