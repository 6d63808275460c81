//! Nucleation rates and the Gaussian wave-functional tunneling machinery.
//!
//! Three independent estimates are provided: the gravitationally corrected
//! bounce rate, the de Sitter pair number density per unit length, and a
//! tunneling matrix element between Gaussian wave functionals, both in a
//! closed thin-wall form and by direct quadrature over one collective mode.

use std::f64::consts::PI;

use crate::error::{domain, finite, Error, Result};
use crate::grid::{trapezoid_weights, GridSeries};
use crate::numeric::integrate;
use crate::potential::{v1, PotentialParams};
use crate::units::{tol, MASSES, PLANCK};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NucleationInputs {
    pub prefactor_a: f64,
    /// Euclidean bounce action `S_b`.
    pub s_bounce: f64,
    /// Scalar mass entering the gravitational correction.
    pub m_field: f64,
    pub mass_m: f64,
    /// Coupling to the applied field; zero switches the field off.
    pub e_charge: f64,
    pub e_field_e0: f64,
    pub hubble_h: f64,
    /// Euclidean action `S_E` of the pair.
    pub s_euclid: f64,
    /// Gaussian width, `α ≈ 1/L`.
    pub alpha_gap: f64,
    /// Vantage point `x` of the closed-form matrix element.
    pub x_vantage: f64,
    pub length_l: f64,
}

impl Default for NucleationInputs {
    fn default() -> Self {
        let p = PotentialParams::default();
        let length_l = 24.39;
        Self {
            prefactor_a: 1.0,
            s_bounce: 0.0,
            m_field: p.m,
            mass_m: PLANCK.m_p,
            e_charge: 0.0,
            e_field_e0: 0.0,
            hubble_h: (8.0 * PI / 3.0 * PLANCK.g * v1(p.phi_star, &p)).sqrt(),
            s_euclid: 0.0,
            alpha_gap: 1.0 / length_l,
            x_vantage: 0.663,
            length_l,
        }
    }
}

/// Energy density of the gravitational correction, taken at its lower
/// bound `ρ_t = (60/4π) M_p² m²`.
pub fn rho_t(m_field: f64) -> f64 {
    60.0 / (4.0 * PI) * PLANCK.m_p * PLANCK.m_p * m_field * m_field
}

/// `Γ = A exp(-S_b + S_t)` with `S_t = -3ρ_t/8`.
pub fn cdl_rate(n: &NucleationInputs) -> f64 {
    let s_t = -3.0 / 8.0 * rho_t(n.m_field);
    n.prefactor_a * (-n.s_bounce + s_t).exp()
}

/// Pair number density per unit length,
/// `(1/2π) √(M² + e E₀²/H²) exp(-S_E)`.
pub fn garriga_density(n: &NucleationInputs) -> Result<f64> {
    let field = n.e_charge * n.e_field_e0 * n.e_field_e0;
    let field_term = if field == 0.0 {
        0.0
    } else {
        if !(n.hubble_h > 0.0) {
            return Err(domain(format!(
                "Hubble rate must be positive with an applied field, got {}",
                n.hubble_h
            )));
        }
        field / (n.hubble_h * n.hubble_h)
    };
    let arg = n.mass_m * n.mass_m + field_term;
    if arg < 0.0 {
        return Err(domain(format!("negative effective mass squared {arg}")));
    }
    Ok(arg.sqrt() / (2.0 * PI) * (-n.s_euclid).exp())
}

/// The three factors of the closed-form matrix element, kept apart so the
/// exponent can be audited.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferFactors {
    pub prefactor: f64,
    pub cosh_factor: f64,
    pub exponent: f64,
}

impl TransferFactors {
    pub fn value(&self) -> f64 {
        self.prefactor * self.cosh_factor * self.exponent.exp()
    }
}

pub fn transfer_factors(n: &NucleationInputs, c1: f64, c2: f64) -> Result<TransferFactors> {
    if !(n.x_vantage > 0.0) {
        return Err(domain(format!("vantage point must be positive, got {}", n.x_vantage)));
    }
    if !(n.length_l > 0.0) {
        return Err(domain(format!("pair separation must be positive, got {}", n.length_l)));
    }
    let (x, l) = (n.x_vantage, n.length_l);
    let arg = 2.0 * (x / (2.0 * l)).sqrt() - (l / (2.0 * x)).sqrt();
    Ok(TransferFactors {
        prefactor: c1 * c2 / MASSES.m_star,
        cosh_factor: arg.cosh(),
        exponent: -n.alpha_gap * l * (l / (2.0 * x)),
    })
}

/// `|T| ≈ (C₁C₂/m*) cosh(2√(x/2L) - √(L/2x)) exp(-α L · L/2x)`.
pub fn transfer_closed_form(n: &NucleationInputs, c1: f64, c2: f64) -> Result<f64> {
    Ok(transfer_factors(n, c1, c2)?.value())
}

/// Upper limit `L²/2π` of the collective-mode integrals.
pub fn mode_upper_limit(length_l: f64) -> f64 {
    length_l * length_l / (2.0 * PI)
}

/// `C = [∫₀^{L²/2π} exp(-2 { } u²) du]^{-1/2}`.
pub fn normalization_constant(bracket: f64, length_l: f64) -> Result<f64> {
    if !(length_l > 0.0) {
        return Err(domain(format!("pair separation must be positive, got {length_l}")));
    }
    if !bracket.is_finite() {
        return Err(Error::NonFinite("normalization bracket".into()));
    }
    let upper = mode_upper_limit(length_l);
    let integral = integrate(|u| (-2.0 * bracket * u * u).exp(), 0.0, upper, tol::QUAD_REL, 0.0)?;
    finite(integral.powf(-0.5), "normalization constant")
}

/// Whether a wave functional is the state before or after tunneling.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Label {
    Initial,
    Final,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Center {
    /// A uniform field configuration.
    Constant(f64),
    /// A sampled configuration, e.g. a kink profile.
    Profile(GridSeries),
}

/// `Ψ[φ] = c exp(-α ∫ (φ - φ_c)² dx)`, discretized with trapezoid weights.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunctional {
    pub norm_c: f64,
    pub width_alpha: f64,
    pub center: Center,
    pub label: Label,
}

impl WaveFunctional {
    pub fn new(label: Label, width_alpha: f64, norm_c: f64, center: Center) -> Result<Self> {
        if !(norm_c > 0.0) {
            return Err(domain(format!("normalization must be positive, got {norm_c}")));
        }
        if !(width_alpha > 0.0) {
            return Err(domain(format!("width must be positive, got {width_alpha}")));
        }
        Ok(Self {
            norm_c,
            width_alpha,
            center,
            label,
        })
    }

    fn center_values(&self, xs: &[f64]) -> Result<Vec<f64>> {
        match &self.center {
            Center::Constant(c) => Ok(vec![*c; xs.len()]),
            Center::Profile(g) => {
                if g.xs() != xs {
                    return Err(Error::Shape(
                        "wave functional centre is sampled on a different grid".into(),
                    ));
                }
                Ok(g.ys().to_vec())
            }
        }
    }

    pub fn evaluate(&self, field: &GridSeries) -> Result<f64> {
        let centre = self.center_values(field.xs())?;
        let weights = field.trapezoid_weights();
        let action: f64 = field
            .ys()
            .iter()
            .zip(&centre)
            .zip(&weights)
            .map(|((phi, c), w)| (phi - c) * (phi - c) * w)
            .sum();
        Ok(self.norm_c * (-self.width_alpha * action).exp())
    }

    /// Restriction to uniform configurations `φ(x) ≡ u` on the grid `xs`.
    ///
    /// With total weight `W` and weighted centre mean `c̄` the functional
    /// becomes `c e^{-α σ} exp(-α W (u - c̄)²)`, where `σ` is the weighted
    /// spread of the centre about `c̄`.
    pub fn collective_mode(&self, xs: &[f64]) -> Result<ModeGaussian> {
        let centre = self.center_values(xs)?;
        let weights = trapezoid_weights(xs);
        let total: f64 = weights.iter().sum();
        if !(total > 0.0) {
            return Err(Error::Shape("collective mode needs at least two grid points".into()));
        }
        let mean = centre.iter().zip(&weights).map(|(c, w)| c * w).sum::<f64>() / total;
        let spread: f64 = centre
            .iter()
            .zip(&weights)
            .map(|(c, w)| (c - mean) * (c - mean) * w)
            .sum();
        Ok(ModeGaussian {
            amplitude: self.norm_c * (-self.width_alpha * spread).exp(),
            width: self.width_alpha * total,
            center: mean,
        })
    }
}

/// Builds a wave functional on `center`'s grid and evaluates it at `field`.
pub fn gaussian_functional(
    label: Label,
    alpha: f64,
    c_norm: f64,
    field: &GridSeries,
    center: &GridSeries,
) -> Result<f64> {
    if !field.same_abscissae(center) {
        return Err(Error::Shape("field and centre must share abscissae".into()));
    }
    WaveFunctional::new(label, alpha, c_norm, Center::Profile(center.clone()))?.evaluate(field)
}

/// A one-dimensional Gaussian `A exp(-a (u - μ)²)` in a collective coordinate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModeGaussian {
    pub amplitude: f64,
    pub width: f64,
    pub center: f64,
}

impl ModeGaussian {
    pub fn value(&self, u: f64) -> f64 {
        let d = u - self.center;
        self.amplitude * (-self.width * d * d).exp()
    }

    pub fn second_derivative(&self, u: f64) -> f64 {
        let d = u - self.center;
        let a = self.width;
        self.value(u) * (4.0 * a * a * d * d - 2.0 * a)
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferResult {
    pub value: f64,
    /// Set when the two states do not overlap at all in double precision;
    /// `value` is then 0.
    pub underflow: bool,
}

/// `(ħ²/2m) ∫_{max(lo, φ₀)}^{hi} (Ψᵢ Ψ_f'' - Ψ_f Ψᵢ'') du` with `θ(u - φ₀)`
/// taken as 1 for `u ≥ φ₀`.
pub fn transfer_one_mode(
    psi_i: &ModeGaussian,
    psi_f: &ModeGaussian,
    threshold: f64,
    lo: f64,
    hi: f64,
    mass: f64,
) -> Result<TransferResult> {
    if !(mass > 0.0) {
        return Err(domain(format!("mass must be positive, got {mass}")));
    }
    let start = lo.max(threshold);
    if start >= hi {
        return Ok(TransferResult {
            value: 0.0,
            underflow: false,
        });
    }
    let magnitude = integrate(
        |u| (psi_i.value(u) * psi_f.second_derivative(u)).abs() + (psi_f.value(u) * psi_i.second_derivative(u)).abs(),
        start,
        hi,
        tol::QUAD_REL,
        0.0,
    )?;
    if magnitude < tol::UNDERFLOW {
        return Ok(TransferResult {
            value: 0.0,
            underflow: true,
        });
    }
    let integral = integrate(
        |u| psi_i.value(u) * psi_f.second_derivative(u) - psi_f.value(u) * psi_i.second_derivative(u),
        start,
        hi,
        tol::QUAD_REL,
        tol::QUAD_REL * magnitude,
    )?;
    Ok(TransferResult {
        value: PLANCK.hbar * PLANCK.hbar / (2.0 * mass) * integral,
        underflow: false,
    })
}

/// Tunneling matrix element between two wave functionals, reduced to the
/// uniform collective mode on `grid`.
///
/// The barrier configuration enters through its weighted mean, which becomes
/// the step threshold; the mode integral runs over `[0, L²/2π]`.
pub fn transfer_discretized(
    psi_i: &WaveFunctional,
    psi_f: &WaveFunctional,
    grid: &[f64],
    barrier_phi0: &GridSeries,
    length_l: f64,
) -> Result<TransferResult> {
    if barrier_phi0.xs() != grid {
        return Err(Error::Shape(
            "barrier configuration is sampled on a different grid".into(),
        ));
    }
    if !(length_l > 0.0) {
        return Err(domain(format!("pair separation must be positive, got {length_l}")));
    }
    let mi = psi_i.collective_mode(grid)?;
    let mf = psi_f.collective_mode(grid)?;
    let weights = trapezoid_weights(grid);
    let total: f64 = weights.iter().sum();
    let threshold = barrier_phi0.ys().iter().zip(&weights).map(|(b, w)| b * w).sum::<f64>() / total;
    transfer_one_mode(&mi, &mf, threshold, 0.0, mode_upper_limit(length_l), MASSES.m_e)
}

/// `W = (2π/ħ) |T|² ρ`.
pub fn golden_rule_rate(t_matrix: f64, rho_states: f64) -> Result<f64> {
    if !(rho_states >= 0.0) {
        return Err(domain(format!(
            "density of states must be non-negative, got {rho_states}"
        )));
    }
    Ok(2.0 * PI / PLANCK.hbar * t_matrix * t_matrix * rho_states)
}

/// `|log₁₀ a - log₁₀ b|`, the number of decades separating two rates.
pub fn decades_apart(a: f64, b: f64) -> f64 {
    (a.log10() - b.log10()).abs()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::linspace;

    fn quoted_inputs() -> NucleationInputs {
        NucleationInputs {
            alpha_gap: 0.041,
            ..Default::default()
        }
    }

    #[test]
    fn cdl_examples() {
        let n = NucleationInputs::default();
        // ρ_t = 0.928583..., S_t = -0.348219..., exp = 0.705945746694232046
        assert!((cdl_rate(&n) - 0.705_945_746_694_232).abs() < 1e-14);
        assert_eq!(cdl_rate(&NucleationInputs { prefactor_a: 0.0, ..n }), 0.0);
        let mut prev = f64::INFINITY;
        for s in [0.0, 0.5, 3.0, 10.0] {
            let r = cdl_rate(&NucleationInputs { s_bounce: s, ..n });
            assert!(r < prev && r > 0.0);
            prev = r;
        }
    }

    #[test]
    fn garriga_examples() {
        let n = NucleationInputs::default();
        assert!((garriga_density(&n).unwrap() - 1.0 / (2.0 * PI)).abs() < 1e-15);
        let one = garriga_density(&NucleationInputs { s_euclid: 1.0, ..n }).unwrap();
        assert!((one - (-1f64).exp() / (2.0 * PI)).abs() < 1e-15);
        assert!((one - 0.058_55).abs() < 1e-5);
        let mut prev = 0.0;
        for e0 in [0.0, 0.5, 1.0, 4.0] {
            let d = garriga_density(&NucleationInputs {
                e_charge: 0.3,
                e_field_e0: e0,
                ..n
            })
            .unwrap();
            assert!(d >= prev);
            prev = d;
        }
        let bad = NucleationInputs {
            e_charge: 1.0,
            e_field_e0: 1.0,
            hubble_h: 0.0,
            ..n
        };
        assert!(garriga_density(&bad).is_err());
    }

    #[test]
    fn closed_form_with_quoted_inputs() {
        let n = quoted_inputs();
        let t = transfer_closed_form(&n, 1.0, 1.0).unwrap();
        // 3419208713454.887 from a 30-digit evaluation
        assert!((t / 3_419_208_713_454.887 - 1.0).abs() < 1e-12);
        let f = transfer_factors(&n, 1.0, 1.0).unwrap();
        assert!((f.cosh_factor / 28.869_053_975_229_953 - 1.0).abs() < 1e-12);
        assert!((f.exponent.exp() / 1.027_572_805_932_18e-8 - 1.0).abs() < 1e-12);
        let t2 = transfer_closed_form(&n, 2.0, 3.0).unwrap();
        assert!((t2 / t - 6.0).abs() < 1e-12);
    }

    #[test]
    fn closed_form_cosh_vanishes_at_half_length() {
        for l in [0.5, 1.0, 2.0, 24.39, 100.0] {
            let n = NucleationInputs {
                length_l: l,
                x_vantage: l / 2.0,
                ..Default::default()
            };
            let f = transfer_factors(&n, 1.0, 1.0).unwrap();
            assert!((f.cosh_factor - 1.0).abs() < 1e-12);
        }
        let bad = NucleationInputs {
            x_vantage: 0.0,
            ..Default::default()
        };
        assert!(transfer_closed_form(&bad, 1.0, 1.0).is_err());
    }

    #[test]
    fn normalization_examples() {
        let l = 3.0;
        let c = normalization_constant(0.0, l).unwrap();
        assert!((c - (2.0 * PI).sqrt() / l).abs() < 1e-14);
        // half-Gaussian regime
        let b = 0.5;
        let closed = (0.5 * (PI / (2.0 * b)).sqrt()).powf(-0.5);
        let c = normalization_constant(b, 24.39).unwrap();
        assert!((c / closed - 1.0).abs() < 1e-8);
        assert!(normalization_constant(0.1, l).unwrap() < normalization_constant(0.2, l).unwrap());
        assert!(normalization_constant(0.1, 0.0).is_err());
    }

    #[test]
    fn functional_examples() {
        let xs = linspace(0.0, 1.0, 11);
        let center = GridSeries::tabulate("c", xs.clone(), |x| x * x).unwrap();
        let v = gaussian_functional(Label::Initial, 0.7, 1.3, &center, &center).unwrap();
        assert_eq!(v, 1.3);

        let d = 0.4;
        let mut ys = center.ys().to_vec();
        ys[4] += d;
        let field = GridSeries::new("f", xs.clone(), ys).unwrap();
        let v = gaussian_functional(Label::Final, 0.7, 1.3, &field, &center).unwrap();
        assert!((v - 1.3 * (-0.7 * d * d * 0.1).exp()).abs() < 1e-15);

        let other = GridSeries::tabulate("o", linspace(0.0, 2.0, 11), |x| x).unwrap();
        assert!(matches!(
            gaussian_functional(Label::Initial, 0.7, 1.3, &other, &center),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn one_mode_transfer_basics() {
        let a = ModeGaussian {
            amplitude: 1.0,
            width: 1.0,
            center: 0.0,
        };
        let b = ModeGaussian { center: 1.0, ..a };
        let same = transfer_one_mode(&a, &a, 0.5, 0.0, 10.0, 1.0).unwrap();
        assert_eq!(same.value, 0.0);
        assert!(!same.underflow);
        let ab = transfer_one_mode(&a, &b, 0.5, 0.0, 10.0, 1.0).unwrap();
        let ba = transfer_one_mode(&b, &a, 0.5, 0.0, 10.0, 1.0).unwrap();
        assert_eq!(ab.value, -ba.value);
        assert!(ab.value != 0.0);
    }

    #[test]
    fn far_apart_states_underflow() {
        let a = ModeGaussian {
            amplitude: 1.0,
            width: 50.0,
            center: 0.0,
        };
        let b = ModeGaussian { center: 40.0, ..a };
        let r = transfer_one_mode(&a, &b, 15.0, 15.0, 25.0, 1.0).unwrap();
        assert!(r.underflow);
        assert_eq!(r.value, 0.0);
    }

    #[test]
    fn collective_mode_of_constant_centre() {
        let xs = linspace(-2.0, 2.0, 9);
        let psi = WaveFunctional::new(Label::Initial, 0.25, 2.0, Center::Constant(1.5)).unwrap();
        let m = psi.collective_mode(&xs).unwrap();
        assert!((m.width - 1.0).abs() < 1e-15);
        assert_eq!(m.center, 1.5);
        assert_eq!(m.amplitude, 2.0);
        // agrees with the functional on uniform configurations
        for u in [0.0, 1.0, 2.7] {
            let field = GridSeries::tabulate("u", xs.clone(), |_| u).unwrap();
            assert!((psi.evaluate(&field).unwrap() - m.value(u)).abs() < 1e-14);
        }
    }

    #[test]
    fn discretized_transfer_checks_grids() {
        let xs = linspace(-1.0, 1.0, 5);
        let psi = WaveFunctional::new(Label::Initial, 1.0, 1.0, Center::Constant(0.0)).unwrap();
        let barrier = GridSeries::tabulate("b", linspace(0.0, 1.0, 5), |_| 0.5).unwrap();
        assert!(transfer_discretized(&psi, &psi, &xs, &barrier, 2.0).is_err());
    }

    #[test]
    fn golden_rule_examples() {
        assert_eq!(golden_rule_rate(0.0, 3.0).unwrap(), 0.0);
        assert!((golden_rule_rate(1.0, 1.0).unwrap() - 2.0 * PI).abs() < 1e-15);
        let r1 = golden_rule_rate(0.3, 2.0).unwrap();
        let r2 = golden_rule_rate(0.6, 2.0).unwrap();
        assert!((r2 / r1 - 4.0).abs() < 1e-14);
        assert!(golden_rule_rate(1.0, -1.0).is_err());
    }

    #[test]
    fn decades() {
        assert!((decades_apart(1e5, 1e2) - 3.0).abs() < 1e-12);
        assert!((decades_apart(1e2, 1e5) - 3.0).abs() < 1e-12);
    }

    #[test]
    fn rates_positive() {
        let n = NucleationInputs {
            s_bounce: 3.0,
            s_euclid: 2.0,
            ..Default::default()
        };
        assert!(cdl_rate(&n) > 0.0);
        assert!(garriga_density(&n).unwrap() > 0.0);
    }
}
