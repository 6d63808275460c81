//! Pure-kinetic k-essence: `p = V(φ) F(X)` with `F` expanded about an
//! extremum, `F = F₀ + F₂ (X - X₀)²`.
//!
//! Two conventions for `X` coexist. The wall analysis uses the static
//! gradient `X = ½ (∂φ/∂x)²` from [`crate::kink`]; the background dynamics in
//! [`field_equation`] uses the homogeneous `X = ½ φ̇²`.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::potential::{v1, PotentialParams};

pub mod field_equation;

pub use field_equation::{integrate_field_equation, Background, Trajectory};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KEssenceModel {
    pub f0: f64,
    pub f2: f64,
    /// Extremal kinetic value `X₀`, where `F_X = 0`.
    pub x0: f64,
    /// Offset `ε̃₀` of `X` from the extremum.
    pub eps0: f64,
    /// Background potential `V₀`.
    pub v0: f64,
}

impl Default for KEssenceModel {
    /// Wall parameters. `F₀` is not fixed by the model; `F₂²` makes the
    /// exact equation of state and its first-order wall forms coincide.
    fn default() -> Self {
        let f2 = 1e3;
        Self {
            f0: f2 * f2,
            f2,
            x0: 1e3,
            eps0: 1e-2,
            v0: 0.775,
        }
    }
}

impl KEssenceModel {
    pub fn validate(&self) -> Result<()> {
        if !(self.f2 > 0.0) {
            return Err(Error::Domain(format!("F_2 must be positive, got {}", self.f2)));
        }
        if !(self.eps0 >= 0.0) {
            return Err(Error::Domain(format!("eps0 must be non-negative, got {}", self.eps0)));
        }
        if !(self.v0 > 0.0) {
            return Err(Error::Domain(format!("V_0 must be positive, got {}", self.v0)));
        }
        Ok(())
    }

    /// The same model re-centred on another extremal kinetic value.
    pub fn at_extremum(self, x0: f64) -> Self {
        Self { x0, ..self }
    }

    /// `X₀ + ε̃₀`, the evaluation point next to the extremum.
    pub fn wall_x(&self) -> f64 {
        self.x0 + self.eps0
    }
}

pub fn f_of_x(x_val: f64, m: &KEssenceModel) -> f64 {
    let d = x_val - m.x0;
    m.f0 + m.f2 * d * d
}

pub fn f_x(x_val: f64, m: &KEssenceModel) -> f64 {
    2.0 * m.f2 * (x_val - m.x0)
}

pub fn f_xx(_x_val: f64, m: &KEssenceModel) -> f64 {
    2.0 * m.f2
}

/// `2 X F_X - F`, the density per unit potential.
fn density_factor(x_val: f64, m: &KEssenceModel) -> f64 {
    2.0 * x_val * f_x(x_val, m) - f_of_x(x_val, m)
}

/// `p = V F(X)` for an explicit potential value.
pub fn pressure_with(v: f64, x_val: f64, m: &KEssenceModel) -> f64 {
    v * f_of_x(x_val, m)
}

/// `ρ = V (2 X F_X - F)` for an explicit potential value.
pub fn density_with(v: f64, x_val: f64, m: &KEssenceModel) -> f64 {
    v * density_factor(x_val, m)
}

pub fn pressure(phi_val: f64, x_val: f64, m: &KEssenceModel, p: &PotentialParams) -> f64 {
    pressure_with(v1(phi_val, p), x_val, m)
}

pub fn density(phi_val: f64, x_val: f64, m: &KEssenceModel, p: &PotentialParams) -> f64 {
    density_with(v1(phi_val, p), x_val, m)
}

/// Wall pressure on a constant background, `V₀ [F₀ + F₂ ε̃₀²]`.
pub fn wall_pressure(m: &KEssenceModel) -> f64 {
    pressure_with(m.v0, m.wall_x(), m)
}

/// First-order wall density, `V₀ [4 F₂ X₀ ε̃₀ - F₀]`.
pub fn wall_density_first_order(m: &KEssenceModel) -> f64 {
    m.v0 * (4.0 * m.f2 * m.x0 * m.eps0 - m.f0)
}

/// `w = p/ρ = F / (2 X F_X - F)`; the potential cancels.
pub fn equation_of_state(x_val: f64, m: &KEssenceModel) -> Result<f64> {
    let den = density_factor(x_val, m);
    if den == 0.0 {
        return Err(Error::EosSingular { x_val });
    }
    Ok(f_of_x(x_val, m) / den)
}

/// First-order wall equation of state with the correction `4 X₀ (F₂/F₀) ε̃₀`.
pub fn eos_wall_f2_over_f0(m: &KEssenceModel) -> f64 {
    -1.0 / (1.0 - 4.0 * m.x0 * (m.f2 / m.f0) * m.eps0)
}

/// First-order wall equation of state with the correction `4 X₀ ε̃₀ / F₂`.
pub fn eos_wall_over_f2(m: &KEssenceModel) -> f64 {
    -1.0 / (1.0 - 4.0 * m.x0 * m.eps0 / m.f2)
}

/// Effective sound speed `c_s² = F_X / (F_X + 2 X F_XX)`.
///
/// For the quadratic `F` at `X = X₀ + ε` this is `ε / (3ε + 2X₀)`.
pub fn sound_speed_sq(x_val: f64, m: &KEssenceModel) -> Result<f64> {
    let fx = f_x(x_val, m);
    let den = fx + 2.0 * x_val * f_xx(x_val, m);
    if den == 0.0 {
        return Err(Error::Cs2Singular { x_val });
    }
    Ok(fx / den)
}

/// The closed form `1 / (1 + 4 X₀ (1 + X₀ / 2ε̃₀))`.
///
/// Kept alongside [`sound_speed_sq`] for comparison; the two disagree as
/// `X₀ → 0` (this form tends to 1, the exact one to 1/3).
pub fn closed_form_cs2(x0: f64, eps0: f64) -> f64 {
    if eps0 == 0.0 {
        return if x0 == 0.0 { 1.0 } else { 0.0 };
    }
    1.0 / (1.0 + 4.0 * x0 * (1.0 + x0 / (2.0 * eps0)))
}

/// Offset decay on a constant background, `ε̃₀ exp(-8π V₀ t)`.
pub fn epsilon_decay(t: f64, eps0: f64, v0: f64) -> Result<f64> {
    if !(t >= 0.0) {
        return Err(Error::Domain(format!("time must be non-negative, got {t}")));
    }
    Ok(eps0 * (-8.0 * PI * v0 * t).exp())
}

/// Equation of state, pressure, density and both sound speeds at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EosPoint {
    pub x_val: f64,
    pub pressure: f64,
    pub density: f64,
    pub w: f64,
    pub cs2: f64,
}

pub fn eos_point(v: f64, x_val: f64, m: &KEssenceModel) -> Result<EosPoint> {
    Ok(EosPoint {
        x_val,
        pressure: pressure_with(v, x_val, m),
        density: density_with(v, x_val, m),
        w: equation_of_state(x_val, m)?,
        cs2: sound_speed_sq(x_val, m)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::central_difference;

    fn unit_f0() -> KEssenceModel {
        KEssenceModel {
            f0: 1.0,
            ..Default::default()
        }
    }

    #[test]
    fn f_expansion() {
        let m = unit_f0();
        assert_eq!(f_of_x(m.x0, &m), m.f0);
        assert_eq!(f_x(m.x0, &m), 0.0);
        assert_eq!(f_of_x(m.x0 + 1.0, &m), m.f0 + 1e3);
        for x in [3.0, 999.0, 1000.5, 4000.0] {
            let fd = central_difference(|y| f_of_x(y, &m), x, 1e-3);
            assert!(((f_x(x, &m) - fd) / f_x(x, &m)).abs() < 1e-6);
        }
        assert_eq!(f_xx(12.0, &m), 2e3);
    }

    #[test]
    fn pressure_examples() {
        let m = unit_f0();
        let p = PotentialParams {
            phi_star: 0.0,
            ..Default::default()
        };
        assert_eq!(pressure(0.0, 17.0, &m, &p), 0.0);
        assert!((wall_pressure(&m) - 0.8525).abs() < 1e-12);
        let x = 1000.3;
        let v = 0.6;
        let w = equation_of_state(x, &m).unwrap();
        assert!((pressure_with(v, x, &m) / density_with(v, x, &m) - w).abs() < 1e-15);
    }

    #[test]
    fn density_examples() {
        let m = unit_f0();
        assert_eq!(density_with(0.9, m.x0, &m), -0.9 * m.f0);
        let approx = wall_density_first_order(&m);
        assert!((approx - 0.775 * (4e4 - 1.0)).abs() < 1e-9);
        assert!((approx - 3.1e4).abs() < 100.0);
        let exact = density_with(m.v0, m.wall_x(), &m);
        assert!((exact / approx - 1.0).abs() < 1e-3);
        assert!((density_with(2.0 * 0.4, 1001.0, &m) - 2.0 * density_with(0.4, 1001.0, &m)).abs() < 1e-9);
    }

    #[test]
    fn first_order_density_error() {
        for eps0 in [1e-2, 1e-3, 1e-4] {
            for m in [unit_f0(), KEssenceModel::default()] {
                let m = KEssenceModel { eps0, ..m };
                let exact = density_with(m.v0, m.wall_x(), &m);
                let approx = wall_density_first_order(&m);
                assert!((exact / approx - 1.0).abs() < 2.0 * eps0);
            }
        }
    }

    #[test]
    fn equation_of_state_at_wall() {
        // default F₀ = F₂²: both first-order forms give -1/(1 - 0.04)
        let m = KEssenceModel::default();
        let w = equation_of_state(m.wall_x(), &m).unwrap();
        assert!((w + 1.041_667_096_354_300_9).abs() < 1e-12);
        assert!((eos_wall_over_f2(&m) + 1.0 / 0.96).abs() < 1e-12);
        assert!((eos_wall_f2_over_f0(&m) + 1.0 / 0.96).abs() < 1e-12);
        assert!((w + 1.0).abs() <= 0.05);
    }

    #[test]
    fn equation_of_state_limits() {
        let m = KEssenceModel::default();
        assert_eq!(equation_of_state(m.x0, &m).unwrap(), -1.0);
        let mut prev = f64::INFINITY;
        for eps in [1e-2, 1e-4, 1e-6] {
            let d = (equation_of_state(m.x0 + eps, &m).unwrap() + 1.0).abs();
            assert!(d < prev);
            prev = d;
        }
        // far above the extremum the quadratic term wins and w turns positive
        let w = equation_of_state(10.0 * m.x0, &m).unwrap();
        // (9000² · 10³ + 10⁶) / (2·10⁴·1.8·10⁷ - 8.1·10¹⁰ - 10⁶)
        let f = 1e6 + 1e3 * 9e3 * 9e3;
        let expect = f / (2.0 * 1e4 * 1.8e7 - f);
        assert!((w - expect).abs() < 1e-14);
        assert!(w > 0.0);
    }

    #[test]
    fn equation_of_state_singular() {
        // 2X F_X = F at X = 0 requires F(0) = 0
        let m = KEssenceModel {
            f0: -1e3 * 1e6,
            ..Default::default()
        };
        assert!(matches!(equation_of_state(0.0, &m), Err(Error::EosSingular { .. })));
    }

    #[test]
    fn sound_speed_examples() {
        let m = KEssenceModel::default();
        let cs2 = sound_speed_sq(m.wall_x(), &m).unwrap();
        assert!((cs2 / (0.01 / (0.03 + 2e3)) - 1.0).abs() < 1e-10);
        assert!(cs2 < 1e-5);

        let m0 = m.at_extremum(0.0);
        assert!((sound_speed_sq(0.5, &m0).unwrap() - 1.0 / 3.0).abs() < 1e-15);
        assert_eq!(sound_speed_sq(m.x0, &m).unwrap(), 0.0);
        assert!(matches!(sound_speed_sq(0.0, &m0), Err(Error::Cs2Singular { .. })));
    }

    #[test]
    fn closed_form_cs2_examples() {
        let v = closed_form_cs2(1e3, 1e-2);
        assert!((v - 1.0 / (1.0 + 4e3 * (1.0 + 5e4))).abs() < 1e-20);
        assert!(v < 1e-8);
        assert_eq!(closed_form_cs2(0.0, 1e-2), 1.0);
        assert!((closed_form_cs2(1.0, 1.0) - 1.0 / 7.0).abs() < 1e-15);
        assert_eq!(closed_form_cs2(1.0, 0.0), 0.0);
        assert_eq!(closed_form_cs2(0.0, 0.0), 1.0);
    }

    #[test]
    fn decay_examples() {
        assert_eq!(epsilon_decay(0.0, 0.3, 0.75).unwrap(), 0.3);
        let r = epsilon_decay(1.0, 1.0, 0.75).unwrap();
        assert!((r - (-6.0 * PI).exp()).abs() < 1e-20);
        assert!((r - 6.5e-9).abs() < 1e-10);
        let mut prev = f64::INFINITY;
        for t in [0.0, 0.1, 0.5, 2.0] {
            let e = epsilon_decay(t, 0.01, 0.775).unwrap();
            assert!(e < prev);
            prev = e;
        }
        assert!(epsilon_decay(-1.0, 0.01, 0.775).is_err());
    }

    #[test]
    fn validation() {
        assert!(KEssenceModel::default().validate().is_ok());
        assert!(KEssenceModel {
            f2: 0.0,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(KEssenceModel {
            eps0: -1.0,
            ..Default::default()
        }
        .validate()
        .is_err());
        assert!(KEssenceModel {
            v0: 0.0,
            ..Default::default()
        }
        .validate()
        .is_err());
    }
}
