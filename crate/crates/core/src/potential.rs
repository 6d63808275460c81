//! The scalar potential family: the tilted sine-Gordon well, its chaotic
//! inflation parent, the extended sine-Gordon template, and the energy-gap
//! bookkeeping between the two vacua.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::units::PLANCK;

mod vacua;

pub use vacua::{find_vacua, StationaryKind, StationaryPoint, VacuumSolution};

/// Constants of the tilted double well
/// `V1(φ) = a (1 - cos φ) + m²/2 (φ - φ*)²`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PotentialParams {
    /// Scalar mass `m`, in Planck masses.
    pub m: f64,
    /// Centre of the quadratic tilt, `φ*`.
    pub phi_star: f64,
    /// Coefficient `a` of the `(1 - cos φ)` term.
    pub cos_coeff: f64,
    /// Constant initial energy density added on top of `V1`.
    pub rho_init: f64,
}

impl Default for PotentialParams {
    fn default() -> Self {
        Self {
            m: 0.441,
            phi_star: 0.99 * PI,
            cos_coeff: 0.5 * PLANCK.m_p * PLANCK.m_p,
            rho_init: 0.0,
        }
    }
}

impl PotentialParams {
    /// The alternate cosine coefficient used for the wave-functional template.
    pub const ALT_COS_COEFF: f64 = 0.5989;

    pub fn with_cos_coeff(self, cos_coeff: f64) -> Self {
        Self { cos_coeff, ..self }
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.m > 0.0) {
            return Err(domain(format!("potential mass must be positive, got {}", self.m)));
        }
        if !(self.cos_coeff > 0.0) {
            return Err(domain(format!(
                "cosine coefficient must be positive, got {}",
                self.cos_coeff
            )));
        }
        if !(self.rho_init >= 0.0) {
            return Err(domain(format!(
                "initial energy density must be non-negative, got {}",
                self.rho_init
            )));
        }
        if !self.phi_star.is_finite() {
            return Err(domain("phi_star must be finite"));
        }
        Ok(())
    }
}

pub fn v1(phi: f64, p: &PotentialParams) -> f64 {
    let d = phi - p.phi_star;
    p.cos_coeff * (1.0 - phi.cos()) + 0.5 * p.m * p.m * d * d
}

/// `V = ρ_init + V1`.
pub fn v_total(phi: f64, p: &PotentialParams) -> f64 {
    p.rho_init + v1(phi, p)
}

pub fn v1_d1(phi: f64, p: &PotentialParams) -> f64 {
    p.cos_coeff * phi.sin() + p.m * p.m * (phi - p.phi_star)
}

pub fn v1_d2(phi: f64, p: &PotentialParams) -> f64 {
    p.cos_coeff * phi.cos() + p.m * p.m
}

/// Massive chaotic-inflation potential `m² φ² / 2`.
pub fn chaotic_potential(phi: f64, m: f64) -> f64 {
    0.5 * m * m * phi * phi
}

/// Slow-roll trajectory of the chaotic model, `φ(t) = φ̃₀ - m t / √(12πG)`.
pub fn chaotic_phi_of_t(t: f64, phi0: f64, m: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(domain(format!("time must be non-negative, got {t}")));
    }
    Ok(phi0 - m / (12.0 * PI * PLANCK.g).sqrt() * t)
}

/// Lower bound on the initial inflaton value, `√(60 / 2π)` Planck masses.
pub fn guth_bound() -> f64 {
    (60.0 / (2.0 * PI)).sqrt() * PLANCK.m_p
}

/// Field value where classical and quantum fluctuations match in the chaotic
/// model, `(3/16π)^{1/4} M_p^{3/2} / √m`.
pub fn phi_star_formula(m: f64) -> Result<f64> {
    if !(m > 0.0) {
        return Err(domain(format!("mass must be positive, got {m}")));
    }
    Ok((3.0 / (16.0 * PI)).powf(0.25) * PLANCK.m_p.powf(1.5) / m.sqrt())
}

/// The Bogomol'nyi bracket `{ } = { }_A - { }_B` and the gap it implies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketTerms {
    pub bracket_a: f64,
    pub bracket_b: f64,
    pub bracket: f64,
    pub gap_from_brackets: f64,
}

impl BracketTerms {
    /// Pair separation implied by the bracket route, `L = 2 / { }`.
    pub fn length(&self) -> Option<f64> {
        (self.gap_from_brackets != 0.0).then(|| 1.0 / self.gap_from_brackets)
    }
}

/// Brackets for the located vacua.
pub fn bracket_terms(p: &PotentialParams, vs: &VacuumSolution) -> Result<BracketTerms> {
    bracket_terms_from(p.m, vs.phi_false, vs.phi_true)
}

/// Brackets for arbitrary vacuum positions.
///
/// `{ }_A = (m⁻² + 1) / (2 m⁻²)`, the whole numerator over the whole
/// denominator, which is `(1 + m²)/2`; `{ }_B = φ_T φ_F M_p² / 6`.
pub fn bracket_terms_from(m: f64, phi_false: f64, phi_true: f64) -> Result<BracketTerms> {
    if m == 0.0 || !m.is_finite() {
        return Err(domain(format!("bracket terms need a finite non-zero mass, got {m}")));
    }
    let inv_m2 = 1.0 / (m * m);
    let bracket_a = (inv_m2 + 1.0) / (2.0 * inv_m2);
    let bracket_b = phi_true * phi_false * PLANCK.m_p * PLANCK.m_p / 6.0;
    let bracket = bracket_a - bracket_b;
    Ok(BracketTerms {
        bracket_a,
        bracket_b,
        bracket,
        gap_from_brackets: bracket / 2.0,
    })
}

/// Coefficients of the extended sine-Gordon template.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExtendedSGParams {
    pub c1: f64,
    pub c2: f64,
    pub phi_0: f64,
}

/// `c1 (φ-φ0)² - 4 c2 φ φ0 (φ-φ0)² + c2 (φ²-φ0²)²`.
pub fn extended_sg(phi: f64, q: &ExtendedSGParams) -> f64 {
    let d = phi - q.phi_0;
    let s = phi * phi - q.phi_0 * q.phi_0;
    q.c1 * d * d - 4.0 * q.c2 * phi * q.phi_0 * d * d + q.c2 * s * s
}

/// Static, quasi one-dimensional Lagrangian density `½ (∂ₓφ)² - V(φ)`.
pub fn lagrangian_density(phi: f64, dphi_dx: f64, p: &PotentialParams) -> f64 {
    0.5 * dphi_dx * dphi_dx - v_total(phi, p)
}

/// Bogomol'nyi lower bound on the Euclidean Lagrangian,
/// `|Q| + ½ (φ₀ - φ_C)² { }`.
pub fn bogomolnyi_bound(phi_0: f64, phi_c: f64, bracket: f64, topological_q: f64) -> f64 {
    let d = phi_0 - phi_c;
    topological_q.abs() + 0.5 * d * d * bracket
}
