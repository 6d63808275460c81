//! Homogeneous background dynamics of the k-essence field,
//!
//! ```text
//! (F_X + 2X F_XX) φ̈ + 3H F_X φ̇ + (2X F_X - F) V_φ / V = 0,   X = ½ φ̇²
//! ```
//!
//! integrated with fixed-step RK4 so the output is reproducible.

use std::f64::consts::PI;

use super::{f_of_x, f_x, f_xx, KEssenceModel};
use crate::error::{finite, Error, Result};
use crate::grid::GridSeries;
use crate::numeric::rk4_step;
use crate::potential::{v1, v1_d1, PotentialParams};
use crate::units::PLANCK;

/// What the field rolls on.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Background {
    /// `V = V1(φ)` with `H = √(8πG V / 3)` evaluated along the path.
    Potential(PotentialParams),
    /// Constant `V`: the `V_φ` force drops out and `H` is fixed.
    Constant { v: f64, hubble: f64 },
}

impl Background {
    /// Constant background at the model's `V₀` with its own Hubble rate.
    pub fn constant(m: &KEssenceModel) -> Self {
        Background::Constant {
            v: m.v0,
            hubble: (8.0 * PI / 3.0 * PLANCK.g * m.v0).sqrt(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    pub t: Vec<f64>,
    pub phi: Vec<f64>,
    pub dphi: Vec<f64>,
}

impl Trajectory {
    /// `X = ½ φ̇²` at every step.
    pub fn kinetic(&self) -> Vec<f64> {
        self.dphi.iter().map(|d| 0.5 * d * d).collect()
    }

    /// Offset `ε = X - X₀` at every step.
    pub fn epsilon(&self, x0: f64) -> Vec<f64> {
        self.kinetic().into_iter().map(|x| x - x0).collect()
    }

    pub fn phi_series(&self) -> Result<GridSeries> {
        GridSeries::new("phi", self.t.clone(), self.phi.clone())
    }

    pub fn kinetic_series(&self) -> Result<GridSeries> {
        GridSeries::new("X", self.t.clone(), self.kinetic())
    }

    pub fn last(&self) -> (f64, f64, f64) {
        let n = self.t.len() - 1;
        (self.t[n], self.phi[n], self.dphi[n])
    }
}

fn kinetic_coefficient(dphi: f64, m: &KEssenceModel) -> f64 {
    let x = 0.5 * dphi * dphi;
    f_x(x, m) + 2.0 * x * f_xx(x, m)
}

fn acceleration(phi: f64, dphi: f64, m: &KEssenceModel, bg: &Background) -> f64 {
    let x = 0.5 * dphi * dphi;
    let fx = f_x(x, m);
    let coef = fx + 2.0 * x * f_xx(x, m);
    let (hubble, force) = match bg {
        Background::Potential(p) => {
            let v = v1(phi, p);
            let h = (8.0 * PI / 3.0 * PLANCK.g * v).sqrt();
            (h, (2.0 * x * fx - f_of_x(x, m)) * v1_d1(phi, p) / v)
        }
        Background::Constant { hubble, .. } => (*hubble, 0.0),
    };
    -(3.0 * hubble * fx * dphi + force) / coef
}

/// Integrates from `(φ, φ̇) = (phi_init, dphi_init)` at `t = 0` to `t_end`.
///
/// The step is shrunk slightly if needed so an integer number of steps lands
/// exactly on `t_end`.
pub fn integrate_field_equation(
    m: &KEssenceModel,
    background: &Background,
    phi_init: f64,
    dphi_init: f64,
    t_end: f64,
    dt: f64,
) -> Result<Trajectory> {
    if !(dt > 0.0) || !dt.is_finite() {
        return Err(Error::Domain(format!("time step must be positive, got {dt}")));
    }
    if !(t_end >= 0.0) || !t_end.is_finite() {
        return Err(Error::Domain(format!("end time must be non-negative, got {t_end}")));
    }
    let steps = ((t_end / dt) - 1e-9).ceil().max(0.0) as usize;
    let h = if steps == 0 { 0.0 } else { t_end / steps as f64 };

    let coef0 = kinetic_coefficient(dphi_init, m);
    if coef0 == 0.0 {
        return Err(Error::DegenerateKinetic { t: 0.0 });
    }
    let sign0 = coef0 > 0.0;

    let rhs = |_t: f64, y: &[f64; 2]| [y[1], acceleration(y[0], y[1], m, background)];

    let mut out = Trajectory {
        t: Vec::with_capacity(steps + 1),
        phi: Vec::with_capacity(steps + 1),
        dphi: Vec::with_capacity(steps + 1),
    };
    let mut y = [phi_init, dphi_init];
    out.t.push(0.0);
    out.phi.push(y[0]);
    out.dphi.push(y[1]);
    for i in 0..steps {
        let t = i as f64 * h;
        let next = rk4_step(&rhs, t, &y, h);
        let t_next = if i + 1 == steps { t_end } else { (i + 1) as f64 * h };
        finite(next[0], "field trajectory")?;
        finite(next[1], "field velocity")?;
        let coef = kinetic_coefficient(next[1], m);
        if coef == 0.0 || (coef > 0.0) != sign0 {
            return Err(Error::DegenerateKinetic { t: t_next });
        }
        y = next;
        out.t.push(t_next);
        out.phi.push(y[0]);
        out.dphi.push(y[1]);
    }
    Ok(out)
}
