//! Numerical toolkit for a tilted sine-Gordon false-vacuum model.
//!
//! All quantities are dimensionless in Planck units. The crate covers
//!
//! * the potential landscape and its vacua ([`potential`]),
//! * slow-roll diagnostics ([`slowroll`]),
//! * the thin-wall kink-antikink profile ([`kink`]),
//! * a quadratic k-essence equation of state and field equation ([`kessence`]),
//! * nucleation rates and Gaussian tunneling amplitudes ([`nucleation`]),
//! * CSV reports behind the `falsevac` binary ([`report`]).
//!
//! ```
//! use falsevac::potential::{find_vacua, PotentialParams};
//!
//! let p = PotentialParams::default();
//! let vs = find_vacua(&p, 0.0, 2.0 * std::f64::consts::PI).unwrap();
//! assert!(vs.delta_e > 0.0);
//! ```

#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod grid;
pub mod kessence;
pub mod kink;
pub mod nucleation;
pub mod numeric;
pub mod potential;
pub mod report;
pub mod slowroll;
pub mod units;

pub use error::{Error, Result};
pub use grid::{linspace, GridSeries};
pub use units::{mass_constants, planck_units, MassConstants, PlanckUnits};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/units.md")]
    mod units {}
    #[doc = include_str!("../../../book/src/potential.md")]
    mod potential {}
    #[doc = include_str!("../../../book/src/slowroll.md")]
    mod slowroll {}
    #[doc = include_str!("../../../book/src/kink.md")]
    mod kink {}
    #[doc = include_str!("../../../book/src/kessence.md")]
    mod kessence {}
    #[doc = include_str!("../../../book/src/nucleation.md")]
    mod nucleation {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
