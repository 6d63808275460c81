//! Locating the stationary points of `V1`.
//!
//! The derivative is scanned on a uniform grid no coarser than
//! [`tol::SCAN_STEP`]; every sign change is bisected down to
//! [`tol::BISECTION_WIDTH`] and finished with one Newton step.

use super::{v1, v1_d1, v1_d2, PotentialParams};
use crate::error::{finite, Error, Result};
use crate::grid::linspace;
use crate::units::tol;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StationaryKind {
    Minimum,
    Maximum,
    Inflection,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryPoint {
    pub phi: f64,
    pub value: f64,
    pub curvature: f64,
    pub kind: StationaryKind,
}

/// The two competing minima and the barrier between them.
///
/// The false vacuum is the minimum with the larger `V1`. When the two wells
/// are level to within [`tol::DEGENERATE_GAP`] the gap is reported as zero,
/// the left minimum is labelled false and `length_l` is `None`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VacuumSolution {
    pub phi_false: f64,
    pub phi_true: f64,
    pub phi_barrier: f64,
    /// `V1(φ_F) - V1(φ_T)`, never negative.
    pub delta_e: f64,
    /// `1 / delta_e`, undefined for level wells.
    pub length_l: Option<f64>,
    pub degenerate: bool,
}

impl VacuumSolution {
    pub fn points(&self) -> [f64; 3] {
        [self.phi_false, self.phi_barrier, self.phi_true]
    }
}

fn refine(p: &PotentialParams, mut a: f64, mut b: f64) -> Result<f64> {
    let mut fa = v1_d1(a, p);
    let mut iterations = 0;
    while b - a >= tol::BISECTION_WIDTH && iterations < 200 {
        let mid = 0.5 * (a + b);
        if mid <= a || mid >= b {
            break;
        }
        let fm = finite(v1_d1(mid, p), "V1'")?;
        if fm == 0.0 {
            return Ok(mid);
        }
        if (fm < 0.0) == (fa < 0.0) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
        iterations += 1;
    }
    let root = 0.5 * (a + b);
    // Newton polish; only accepted if it stays inside the original scale of the bracket.
    let curvature = v1_d2(root, p);
    if curvature != 0.0 {
        let step = v1_d1(root, p) / curvature;
        if step.is_finite() && step.abs() <= tol::BISECTION_WIDTH {
            return Ok(root - step);
        }
    }
    Ok(root)
}

fn classify(phi: f64, p: &PotentialParams) -> Result<StationaryPoint> {
    let curvature = finite(v1_d2(phi, p), "V1''")?;
    let kind = if curvature > 0.0 {
        StationaryKind::Minimum
    } else if curvature < 0.0 {
        StationaryKind::Maximum
    } else {
        StationaryKind::Inflection
    };
    Ok(StationaryPoint {
        phi,
        value: finite(v1(phi, p), "V1")?,
        curvature,
        kind,
    })
}

/// Every stationary point of `V1` in `[lo, hi]`, in increasing order.
pub fn stationary_points(p: &PotentialParams, lo: f64, hi: f64) -> Result<Vec<StationaryPoint>> {
    if !(lo < hi) || !lo.is_finite() || !hi.is_finite() {
        return Err(Error::Domain(format!("search interval [{lo}, {hi}] is empty")));
    }
    let panels = ((hi - lo) / tol::SCAN_STEP).ceil().max(1.0) as usize;
    let nodes = linspace(lo, hi, panels + 1);
    let slopes = nodes
        .iter()
        .map(|&x| finite(v1_d1(x, p), "V1'"))
        .collect::<Result<Vec<_>>>()?;

    let mut roots = Vec::new();
    for i in 0..nodes.len() {
        if slopes[i] == 0.0 {
            roots.push(nodes[i]);
            continue;
        }
        if i + 1 < nodes.len() && slopes[i + 1] != 0.0 && (slopes[i] < 0.0) != (slopes[i + 1] < 0.0) {
            roots.push(refine(p, nodes[i], nodes[i + 1])?);
        }
    }
    roots.iter().map(|&phi| classify(phi, p)).collect()
}

/// Locates the false vacuum, the true vacuum and the barrier between them.
///
/// When the interval holds more than one double well, the pair containing the
/// deepest minimum is returned, with the lower of its neighbours as partner.
pub fn find_vacua(p: &PotentialParams, search_lo: f64, search_hi: f64) -> Result<VacuumSolution> {
    let points = stationary_points(p, search_lo, search_hi)?;
    let minima: Vec<usize> = points
        .iter()
        .enumerate()
        .filter(|(_, s)| s.kind == StationaryKind::Minimum)
        .map(|(i, _)| i)
        .collect();

    let mut best: Option<(f64, f64, usize, usize, usize)> = None;
    for pair in minima.windows(2) {
        let (l, r) = (pair[0], pair[1]);
        let barrier = points[l + 1..r]
            .iter()
            .enumerate()
            .filter(|(_, s)| s.kind == StationaryKind::Maximum)
            .max_by(|a, b| a.1.value.total_cmp(&b.1.value))
            .map(|(k, _)| l + 1 + k);
        let Some(barrier) = barrier else { continue };
        let (va, vb) = (points[l].value, points[r].value);
        let key = (va.min(vb), va.max(vb));
        let better = match best {
            None => true,
            Some((lo_v, hi_v, ..)) => key.0 < lo_v || (key.0 == lo_v && key.1 < hi_v),
        };
        if better {
            best = Some((key.0, key.1, l, barrier, r));
        }
    }

    let Some((_, _, l, barrier, r)) = best else {
        return Err(Error::NoDoubleWell {
            params: format!("m = {}, phi_star = {}, cos_coeff = {}", p.m, p.phi_star, p.cos_coeff),
            lo: search_lo,
            hi: search_hi,
        });
    };

    let (left, right) = (points[l], points[r]);
    let scale = 1f64.max(left.value.abs()).max(right.value.abs());
    let degenerate = (left.value - right.value).abs() <= tol::DEGENERATE_GAP * scale;
    let (fals, tru) = if degenerate || left.value >= right.value {
        (left, right)
    } else {
        (right, left)
    };
    let delta_e = if degenerate { 0.0 } else { fals.value - tru.value };
    Ok(VacuumSolution {
        phi_false: fals.phi,
        phi_true: tru.phi,
        phi_barrier: points[barrier].phi,
        delta_e,
        length_l: (delta_e > 0.0).then(|| 1.0 / delta_e),
        degenerate,
    })
}
