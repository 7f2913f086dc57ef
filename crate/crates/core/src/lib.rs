//! Numerical certification toolkit for starlikeness-type criteria on the unit disc.
//!
//! The crate builds normalized analytic functions (`f(0) = 0`, `f'(0) = 1`) from
//! closed forms, truncated Taylor series, or defining differential profiles, and
//! estimates extrema of boundary functionals such as `Re[zf'(z)/f(z)]` or
//! `|arg(α + zf''(z)/f'(z))|` over the disc. Each criterion pairs a hypothesis
//! supremum against a threshold with a conclusion infimum, producing a
//! machine-readable certification report.
//!
//! Modules:
//! - [`series`] — truncated complex Taylor arithmetic (add/mul/div, exp/log/pow,
//!   logarithmic derivative, normalized integration).
//! - [`quadrature`] — Gauss–Legendre panel integration along radial segments.
//! - [`catalog`] — concrete functions (Koebe, identity, Möbius-power examples)
//!   and reconstruction from convexity/starlikeness profiles.
//! - [`scan`] — grid + golden-section extremization of functionals over circles.
//! - [`criteria`] — criterion identifiers, thresholds, and `certify`.
//! - [`geometry`] — disc-in-sector predicate, radius functions, boundary-touch
//!   equality family.
//! - [`verify`] — the one-shot verification suite driven by `starcert verify-paper`.

pub mod catalog;
pub mod criteria;
pub mod geometry;
pub mod quadrature;
pub mod scan;
pub mod series;
pub mod verify;

pub use num_complex::Complex64;

pub use catalog::AnalyticFunction;
pub use criteria::{CriterionId, CriterionReport};
pub use scan::{Functional, ScanGrid, ScanResult};
pub use series::TaylorSeries;

/// Default truncation order for series representations.
///
/// Chosen so that catalog functions (whose coefficients decay algebraically on
/// top of the geometric factor) agree with their closed forms to better than
/// 1e-8 everywhere on `|z| <= 0.9`.
pub const DEFAULT_SERIES_ORDER: usize = 256;

/// Largest modulus at which disc quantities are evaluated. Scan grids and
/// series evaluation both cap at this radius; closed-form evaluators stay
/// accurate here while truncated series degrade, which is why scans near the
/// boundary prefer closed forms.
pub const R_MAX: f64 = 0.999;
