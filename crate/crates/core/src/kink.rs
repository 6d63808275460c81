//! The kink–antikink (S-S') profile and its wall kinematics.
//!
//! The field is a smoothed box of height `2π` and width `L`,
//!
//! ```text
//! φ(x) = π [tanh(b (x + L/2)) - tanh(b (x - L/2))]
//! ```
//!
//! and the kinetic argument uses the static spatial-gradient convention
//! `X = ½ (∂φ/∂x)²`. Increasing the steepness `b` concentrates `X` at the
//! walls `x = ±L/2`, a smooth stand-in for a pair of delta functions.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::grid::{linspace, GridSeries};
use crate::units::tol;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KinkProfile {
    pub length_l: f64,
    pub steepness_b: f64,
}

impl Default for KinkProfile {
    fn default() -> Self {
        Self {
            length_l: 1.0,
            steepness_b: 10.0,
        }
    }
}

impl KinkProfile {
    /// Plateau amplitude factor; the plateau sits at `2 × HEIGHT`.
    pub const HEIGHT: f64 = PI;

    pub fn new(length_l: f64, steepness_b: f64) -> Result<Self> {
        let k = Self { length_l, steepness_b };
        k.validate()?;
        Ok(k)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.length_l > 0.0 && self.length_l.is_finite()) {
            return Err(Error::Domain(format!(
                "wall separation must be positive, got {}",
                self.length_l
            )));
        }
        if !(self.steepness_b > 0.0 && self.steepness_b.is_finite()) {
            return Err(Error::Domain(format!(
                "steepness must be positive, got {}",
                self.steepness_b
            )));
        }
        Ok(())
    }

    fn walls(&self, x: f64) -> (f64, f64) {
        let half = 0.5 * self.length_l;
        (self.steepness_b * (x + half), self.steepness_b * (x - half))
    }
}

fn sech2(u: f64) -> f64 {
    let c = u.cosh();
    1.0 / (c * c)
}

pub fn phi_of_x(x: f64, k: &KinkProfile) -> f64 {
    let (a, b) = k.walls(x);
    KinkProfile::HEIGHT * (a.tanh() - b.tanh())
}

pub fn dphi_dx(x: f64, k: &KinkProfile) -> f64 {
    let (a, b) = k.walls(x);
    KinkProfile::HEIGHT * k.steepness_b * (sech2(a) - sech2(b))
}

/// `X = ½ (∂φ/∂x)²`.
pub fn kinetic_x(x: f64, k: &KinkProfile) -> f64 {
    let d = dphi_dx(x, k);
    0.5 * d * d
}

/// `s(x) = X(x)²`.
pub fn s_of_x(x: f64, k: &KinkProfile) -> f64 {
    let xk = kinetic_x(x, k);
    xk * xk
}

/// Integral and peak of `X` for one steepness.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WallSample {
    pub steepness_b: f64,
    /// Midpoint-rule integral of `X` over `[-L, L]`.
    pub integral: f64,
    /// Largest `X` on a node grid that contains both walls.
    pub peak: f64,
}

/// Panels used by [`wall_delta_check`]; a multiple of 4 so the nodes hit `±L/2`.
pub const WALL_PANELS: usize = 20_000;

/// Midpoint integral of `X` over `[-L, L]` with `panels` panels.
pub fn kinetic_integral(k: &KinkProfile, panels: usize) -> f64 {
    crate::numeric::midpoint(|x| kinetic_x(x, k), -k.length_l, k.length_l, panels)
}

/// Tracks how the wall kinetic energy sharpens as the steepness grows.
///
/// Peaks grow like `b²` while the profile localizes at the walls. Steepness
/// above [`tol::MAX_STEEPNESS`] is the pure box limit and is refused.
pub fn wall_delta_check(k: &KinkProfile, b_sequence: &[f64]) -> Result<Vec<WallSample>> {
    k.validate()?;
    if b_sequence.windows(2).any(|w| !(w[1] > w[0])) {
        return Err(Error::Domain("steepness sequence must be increasing".into()));
    }
    b_sequence
        .iter()
        .map(|&b| {
            if b > tol::MAX_STEEPNESS {
                return Err(Error::UnphysicalBoxLimit {
                    b,
                    max: tol::MAX_STEEPNESS,
                });
            }
            let kb = KinkProfile::new(k.length_l, b)?;
            let nodes = linspace(-k.length_l, k.length_l, WALL_PANELS + 1);
            let peak = nodes.iter().map(|&x| kinetic_x(x, &kb)).fold(0.0, f64::max);
            Ok(WallSample {
                steepness_b: b,
                integral: kinetic_integral(&kb, WALL_PANELS),
                peak,
            })
        })
        .collect()
}

/// Splits a wall scan into `(integral, peak)` series keyed by steepness.
pub fn wall_series(samples: &[WallSample]) -> Result<(GridSeries, GridSeries)> {
    let bs: Vec<f64> = samples.iter().map(|s| s.steepness_b).collect();
    let integral = GridSeries::new("integral_X", bs.clone(), samples.iter().map(|s| s.integral).collect())?;
    let peak = GridSeries::new("peak_X", bs, samples.iter().map(|s| s.peak).collect())?;
    Ok((integral, peak))
}

/// Momentum-space transform of a box of width `L`,
/// `√(2/π) sin(k L/2) / k`, with the removable point `k = 0` filled in.
pub fn momentum_basis(k_n: f64, length_l: f64) -> f64 {
    let norm = (2.0 / PI).sqrt();
    let arg = 0.5 * k_n * length_l;
    if arg.abs() < 1e-8 {
        // sin(a)/k = (L/2)(1 - a²/6 + ...)
        norm * 0.5 * length_l * (1.0 - arg * arg / 6.0)
    } else {
        norm * arg.sin() / k_n
    }
}

/// Samples `φ`, `∂φ/∂x`, `X` and `s` on `n` points over `[-L, L]`.
pub fn profile_series(k: &KinkProfile, n: usize) -> Result<[GridSeries; 4]> {
    let xs = linspace(-k.length_l, k.length_l, n);
    Ok([
        GridSeries::tabulate("phi", xs.clone(), |x| phi_of_x(x, k))?,
        GridSeries::tabulate("dphi_dx", xs.clone(), |x| dphi_dx(x, k))?,
        GridSeries::tabulate("X", xs.clone(), |x| kinetic_x(x, k))?,
        GridSeries::tabulate("s", xs, |x| s_of_x(x, k))?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::central_difference;

    #[test]
    fn plateau_and_tails() {
        let k = KinkProfile::default();
        // 2π tanh 5 = 6.28261482073636966935
        assert!((phi_of_x(0.0, &k) - 6.282_614_820_736_37).abs() < 1e-12);
        assert!((phi_of_x(0.0, &k) - 2.0 * PI).abs() < 1e-3);
        assert!(phi_of_x(50.0, &k).abs() < 1e-12);
        assert!(phi_of_x(-50.0, &k).abs() < 1e-12);
        let wide = KinkProfile::new(4.0, 10.0).unwrap();
        assert!((phi_of_x(2.0, &wide) - PI * (40f64).tanh()).abs() < 1e-14);
        assert!((phi_of_x(2.0, &wide) - PI).abs() < 1e-12);
    }

    #[test]
    fn slope_at_the_wall() {
        let k = KinkProfile::default();
        assert_eq!(dphi_dx(0.0, &k), 0.0);
        let d = dphi_dx(0.5, &k);
        assert!((d + PI * 10.0).abs() < 1e-6);
        let fd = central_difference(|x| phi_of_x(x, &k), 0.5, 1e-6);
        assert!((d - fd).abs() < 1e-6);
        for x in [0.1, 0.37, 0.5, 0.9] {
            assert_eq!(dphi_dx(x, &k), -dphi_dx(-x, &k));
        }
    }

    #[test]
    fn kinetic_peak() {
        let k = KinkProfile::default();
        // 50 π² (1 - sech² 10)² = 493.480211917359653
        assert!((kinetic_x(0.5, &k) - 493.480_211_917_359_65).abs() < 1e-9);
        assert_eq!(kinetic_x(0.0, &k), 0.0);
        assert!((s_of_x(0.5, &k) - 493.480_211_917_359_65f64.powi(2)).abs() < 1e-5);
        assert!((s_of_x(0.5, &k) - 2.44e5).abs() < 1e3);
    }

    #[test]
    fn s_scales_as_b_to_the_fourth() {
        let a = KinkProfile::new(1.0, 10.0).unwrap();
        let b = KinkProfile::new(1.0, 20.0).unwrap();
        let ratio = s_of_x(0.5, &b) / s_of_x(0.5, &a);
        assert!((ratio - 16.0).abs() < 1e-6);
    }

    #[test]
    fn delta_check_peaks() {
        let k = KinkProfile::default();
        let samples = wall_delta_check(&k, &[0.1, 10.0, 20.0, 40.0]).unwrap();
        assert!(samples[0].peak < 1.0);
        for w in samples[1..].windows(2) {
            let r = w[1].peak / w[0].peak;
            assert!((r - 4.0).abs() < 0.08, "ratio {r}");
        }
        let (integral, peak) = wall_series(&samples).unwrap();
        assert_eq!(integral.len(), 4);
        assert_eq!(peak.ys()[1], samples[1].peak);
    }

    #[test]
    fn delta_check_rejects_box_limit() {
        let k = KinkProfile::default();
        assert!(matches!(
            wall_delta_check(&k, &[10.0, 2e6]),
            Err(Error::UnphysicalBoxLimit { .. })
        ));
        assert!(wall_delta_check(&k, &[20.0, 10.0]).is_err());
    }

    #[test]
    fn field_drop_across_one_wall() {
        // ∫₀^∞ φ' dx = φ(∞) - φ(0) = -2π tanh(bL/2)
        let k = KinkProfile::default();
        let drop = crate::numeric::integrate(|x| dphi_dx(x, &k), 0.0, 10.0, 1e-12, 0.0).unwrap();
        assert!((drop + phi_of_x(0.0, &k) - phi_of_x(10.0, &k)).abs() < 1e-9);
        // the outer wall alone carries a drop of π
        let outer = crate::numeric::integrate(|x| dphi_dx(x, &k), 0.5, 10.0, 1e-12, 0.0).unwrap();
        assert!((outer + PI).abs() < 1e-3);
    }

    #[test]
    fn momentum_basis_values() {
        let l = 24.39;
        // √(2/π) · 12.195 = 9.73020221899094301
        assert!((momentum_basis(0.0, l) - 9.730_202_218_990_943).abs() < 1e-12);
        assert!((momentum_basis(1e-12, l) - momentum_basis(0.0, l)).abs() < 1e-12);
        assert!(momentum_basis(2.0 * PI / l, l).abs() < 1e-12);
        let v = momentum_basis(PI / 2.0, 2.0);
        assert!((v - (2.0 / PI).sqrt() * 2.0 / PI).abs() < 1e-15);
    }

    #[test]
    fn invalid_profile() {
        assert!(KinkProfile::new(0.0, 10.0).is_err());
        assert!(KinkProfile::new(1.0, -1.0).is_err());
    }

    #[test]
    fn profile_series_shape() {
        let [phi, d, x, s] = profile_series(&KinkProfile::default(), 5).unwrap();
        assert_eq!(phi.xs(), &[-1.0, -0.5, 0.0, 0.5, 1.0]);
        assert_eq!(d.len(), 5);
        for (xv, sv) in x.ys().iter().zip(s.ys()) {
            assert_eq!(*sv, xv * xv);
        }
    }
}
