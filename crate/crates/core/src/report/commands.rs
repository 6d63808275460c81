use std::f64::consts::PI;
use std::path::PathBuf;

use super::audit::{audit_rows, QUOTED_SLOWROLL};
use super::table::{Cell, Table};
use super::{ReportError, RunConfig};
use crate::grid::{linspace, GridSeries};
use crate::kessence::{closed_form_cs2, density_with, equation_of_state, pressure_with, sound_speed_sq};
use crate::kink::{dphi_dx, kinetic_x, phi_of_x, s_of_x};
use crate::nucleation::{
    cdl_rate, decades_apart, garriga_density, normalization_constant, rho_t, transfer_discretized, transfer_factors,
    Center, Label, WaveFunctional,
};
use crate::potential::{bracket_terms, bracket_terms_from, find_vacua, v1, v1_d1, v1_d2};
use crate::slowroll::slow_roll_report;

fn prepare(cfg: &RunConfig) -> Result<RunConfig, ReportError> {
    let cfg = cfg.resolved()?;
    std::fs::create_dir_all(&cfg.output_dir).map_err(|source| ReportError::Io {
        path: cfg.output_dir.clone(),
        source,
    })?;
    Ok(cfg)
}

/// `landscape.csv` over `[-1, 2π + 1]` and `vacua.csv` with the located
/// vacua and both pair-separation candidates.
pub fn cmd_landscape(cfg: &RunConfig) -> Result<Vec<PathBuf>, ReportError> {
    let cfg = prepare(cfg)?;
    let p = &cfg.potential;
    let mut landscape = Table::new(&["phi", "v1", "v1_d1", "v1_d2"]);
    for phi in linspace(-1.0, 2.0 * PI + 1.0, cfg.grid_points) {
        landscape.push(vec![
            phi.into(),
            v1(phi, p).into(),
            v1_d1(phi, p).into(),
            v1_d2(phi, p).into(),
        ]);
    }

    let vs = find_vacua(p, cfg.search_lo, cfg.search_hi)?;
    let computed = bracket_terms(p, &vs)?;
    let quoted = bracket_terms_from(p.m, cfg.bracket_phi_false, cfg.bracket_phi_true)?;
    let degenerate = if vs.degenerate { "degenerate" } else { "" };

    let mut vacua = Table::new(&["quantity", "value", "note"]);
    let mut row = |q: &str, v: Cell, note: &str| vacua.push(vec![q.into(), v, note.into()]);
    row("phi_false", vs.phi_false.into(), "");
    row("phi_true", vs.phi_true.into(), "");
    row("phi_barrier", vs.phi_barrier.into(), "");
    row("v_false", v1(vs.phi_false, p).into(), "");
    row("v_true", v1(vs.phi_true, p).into(), "");
    row("delta_E", vs.delta_e.into(), degenerate);
    row("degenerate", vs.degenerate.into(), degenerate);
    row(
        "length_l_from_delta_E",
        vs.length_l.into(),
        if vs.degenerate {
            "undefined for degenerate wells"
        } else {
            "1 / delta_E"
        },
    );
    for (prefix, terms, note) in [
        ("", &computed, "located vacua"),
        ("bracket_inputs_", &quoted, "bracket.phi_false and bracket.phi_true"),
    ] {
        row(&format!("{prefix}bracket_a"), terms.bracket_a.into(), note);
        row(&format!("{prefix}bracket_b"), terms.bracket_b.into(), note);
        row(&format!("{prefix}bracket"), terms.bracket.into(), note);
        row(
            &format!("{prefix}gap_from_brackets"),
            terms.gap_from_brackets.into(),
            note,
        );
        row(&format!("{prefix}length_l_from_brackets"), terms.length().into(), note);
    }

    Ok(vec![
        landscape.write(&cfg.output_dir, "landscape.csv")?,
        vacua.write(&cfg.output_dir, "vacua.csv")?,
    ])
}

fn profile_grid(cfg: &RunConfig) -> Vec<f64> {
    let l = cfg.kink.length_l;
    linspace(-l, l, cfg.grid_points)
}

/// `profile.csv`: the kink-antikink profile over `[-L, L]`.
pub fn cmd_profile(cfg: &RunConfig) -> Result<Vec<PathBuf>, ReportError> {
    let cfg = prepare(cfg)?;
    let k = &cfg.kink;
    let mut t = Table::new(&["x", "phi", "dphi_dx", "X", "s"]);
    for x in profile_grid(&cfg) {
        t.push(vec![
            x.into(),
            phi_of_x(x, k).into(),
            dphi_dx(x, k).into(),
            kinetic_x(x, k).into(),
            s_of_x(x, k).into(),
        ]);
    }
    Ok(vec![t.write(&cfg.output_dir, "profile.csv")?])
}

/// `eos.csv`: equation of state and sound speeds across the wall.
///
/// At each point the model is centred on the local kinetic value `X(x)` and
/// evaluated at `X(x) + ε̃₀`.
pub fn cmd_kessence(cfg: &RunConfig) -> Result<Vec<PathBuf>, ReportError> {
    let cfg = prepare(cfg)?;
    let k = &cfg.kink;
    let mut t = Table::new(&[
        "x",
        "X",
        "w_eq43_route",
        "cs2_eq43",
        "cs2_eq50_form",
        "pressure",
        "density",
    ]);
    for x in profile_grid(&cfg) {
        let kin = kinetic_x(x, k);
        let model = cfg.kessence.at_extremum(kin);
        let x_val = model.wall_x();
        let v = v1(phi_of_x(x, k), &cfg.potential);
        t.push(vec![
            x.into(),
            kin.into(),
            equation_of_state(x_val, &model)?.into(),
            sound_speed_sq(x_val, &model)?.into(),
            closed_form_cs2(kin, model.eps0).into(),
            pressure_with(v, x_val, &model).into(),
            density_with(v, x_val, &model).into(),
        ]);
    }
    Ok(vec![t.write(&cfg.output_dir, "eos.csv")?])
}

/// `slowroll.csv`: diagnostics at both minima, the barrier top and `φ*`.
pub fn cmd_slowroll(cfg: &RunConfig) -> Result<Vec<PathBuf>, ReportError> {
    let cfg = prepare(cfg)?;
    let p = &cfg.potential;
    let vs = find_vacua(p, cfg.search_lo, cfg.search_hi)?;
    let mut t = Table::new(&[
        "point",
        "phi",
        "v",
        "h_squared",
        "v_dd_abs",
        "ratio",
        "epsilon_sr",
        "eta_sr",
        "passes_flat",
        "passes_negative_pressure",
        "paper_v_dd_abs",
        "paper_h_squared",
    ]);
    for (name, phi) in [
        ("phi_F", vs.phi_false),
        ("phi_barrier", vs.phi_barrier),
        ("phi_T", vs.phi_true),
        ("phi_star", p.phi_star),
    ] {
        let r = slow_roll_report(phi, p, cfg.flatness_threshold)?;
        let quoted = QUOTED_SLOWROLL.iter().find(|q| q.0 == name);
        t.push(vec![
            name.into(),
            r.phi.into(),
            r.v.into(),
            r.h_squared.into(),
            r.v_dd_abs.into(),
            r.ratio.into(),
            r.epsilon_sr.into(),
            r.eta_sr.into(),
            r.passes_flat.into(),
            r.passes_negative_pressure.into(),
            quoted.map(|q| q.1).into(),
            quoted.map(|q| q.2).into(),
        ]);
    }
    Ok(vec![t.write(&cfg.output_dir, "slowroll.csv")?])
}

/// `rates.csv`: every rate estimate in long `quantity,value` form.
pub fn cmd_rates(cfg: &RunConfig) -> Result<Vec<PathBuf>, ReportError> {
    let cfg = prepare(cfg)?;
    let n = &cfg.nucleation;
    let terms = bracket_terms_from(cfg.potential.m, cfg.bracket_phi_false, cfg.bracket_phi_true)?;
    let c1 = normalization_constant(terms.bracket, n.length_l)?;
    let c2 = c1;
    let factors = transfer_factors(n, c1, c2)?;
    let closed = factors.value();
    let garriga = garriga_density(n)?;

    let vs = find_vacua(&cfg.potential, cfg.search_lo, cfg.search_hi)?;
    let grid = linspace(-n.length_l / 2.0, n.length_l / 2.0, cfg.grid_points);
    let psi_i = WaveFunctional::new(Label::Initial, n.alpha_gap, c1, Center::Constant(vs.phi_false))?;
    let psi_f = WaveFunctional::new(Label::Final, n.alpha_gap, c2, Center::Constant(vs.phi_true))?;
    let barrier = GridSeries::tabulate("phi_barrier", grid.clone(), |_| vs.phi_barrier)?;
    let discretized = transfer_discretized(&psi_i, &psi_f, &grid, &barrier, n.length_l)?;

    let mut t = Table::new(&["quantity", "value"]);
    let mut row = |q: &str, v: Cell| t.push(vec![q.into(), v]);
    row("rho_t", rho_t(n.m_field).into());
    row("cdl_rate", cdl_rate(n).into());
    row("garriga_density", garriga.into());
    row("hubble_h", n.hubble_h.into());
    row("alpha_gap", n.alpha_gap.into());
    row("bracket", terms.bracket.into());
    row("normalization_c1", c1.into());
    row("normalization_c2", c2.into());
    row("transfer_prefactor", factors.prefactor.into());
    row("transfer_cosh_factor", factors.cosh_factor.into());
    row("transfer_exponent", factors.exponent.into());
    row("transfer_closed_form", closed.into());
    row("transfer_discretized", discretized.value.into());
    row("transfer_discretized_underflow", discretized.underflow.into());
    row("log10_transfer_closed_form", closed.abs().log10().into());
    row("log10_garriga_density", garriga.log10().into());
    row(
        "decades_apart_closed_form_vs_garriga",
        decades_apart(closed.abs(), garriga).into(),
    );
    Ok(vec![t.write(&cfg.output_dir, "rates.csv")?])
}

/// `audit.csv`: every quoted value against its recomputation. Mismatches
/// are reported in the file, not as a failure.
pub fn cmd_audit(cfg: &RunConfig) -> Result<Vec<PathBuf>, ReportError> {
    let cfg = prepare(cfg)?;
    let mut t = Table::new(&["claim_id", "paper_value", "computed_value", "abs_diff", "status"]);
    for r in audit_rows(&cfg)? {
        t.push(vec![
            r.claim_id.clone().into(),
            r.paper_value.into(),
            r.computed_value.into(),
            r.abs_diff().into(),
            r.status().as_str().into(),
        ]);
    }
    Ok(vec![t.write(&cfg.output_dir, "audit.csv")?])
}
