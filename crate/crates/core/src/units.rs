//! Unit conventions and fixed physical constants.
//!
//! Everything in this crate is dimensionless: masses are measured in Planck
//! masses, lengths in Planck lengths and times in Planck times, with
//! ħ = c = G = 1. Nothing is ever converted back to SI.
//!
//! Run-time parameters (potential mass, steepness, ...) live on their own
//! parameter structs; the constants here are the ones that never change.

/// The Planck normalization. Every field is exactly 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanckUnits {
    pub m_p: f64,
    pub hbar: f64,
    pub c: f64,
    pub g: f64,
    pub t_p: f64,
    pub l_p: f64,
}

/// The canonical normalization record.
pub const PLANCK: PlanckUnits = PlanckUnits {
    m_p: 1.0,
    hbar: 1.0,
    c: 1.0,
    g: 1.0,
    t_p: 1.0,
    l_p: 1.0,
};

pub fn planck_units() -> PlanckUnits {
    PLANCK
}

impl PlanckUnits {
    /// Reduced Planck mass squared, M_p² / 8π.
    pub fn reduced_mass_sq(&self) -> f64 {
        self.m_p * self.m_p / (8.0 * std::f64::consts::PI)
    }
}

/// Particle masses in Planck units.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MassConstants {
    /// Electron mass.
    pub m_e: f64,
    /// Effective pair mass, `2 m_e`.
    pub m_star: f64,
}

const ELECTRON_MASS: f64 = 4.338e-20;

pub const MASSES: MassConstants = MassConstants {
    m_e: ELECTRON_MASS,
    m_star: 2.0 * ELECTRON_MASS,
};

pub fn mass_constants() -> MassConstants {
    MASSES
}

/// Numerical tolerances shared by the solvers.
pub mod tol {
    /// Largest grid step of the stationary-point scan.
    pub const SCAN_STEP: f64 = 1e-3;
    /// Bisection stops once the bracket is narrower than this.
    pub const BISECTION_WIDTH: f64 = 1e-12;
    /// Relative potential difference below which two wells count as degenerate.
    pub const DEGENERATE_GAP: f64 = 1e-12;
    /// Relative accuracy requested from adaptive quadrature.
    pub const QUAD_REL: f64 = 1e-10;
    /// Overlap magnitude below which a tunneling integral is flagged as underflowed.
    pub const UNDERFLOW: f64 = 1e-300;
    /// Steepness above which the kink is refused as a pure box.
    pub const MAX_STEEPNESS: f64 = 1e6;
}
