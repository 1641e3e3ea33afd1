//! Leja sequences for the closed unit disk and explicit Kergin / Hakopian
//! mean-value interpolation in the plane.
//!
//! The crate is organised bottom-up:
//!
//! * [`geometry`]: plane points, the quarter-turn rotation, disk sampling grids.
//! * [`polys`]: univariate, bivariate and complex polynomials plus sign/log products.
//! * [`leja`]: the canonical Leja sequence, its binary block decomposition and
//!   the product identities satisfied by its sections.
//! * [`mean_value`]: scalar fields and Gauss-Legendre realisations of the
//!   segment and simplex functionals.
//! * [`interpolants`]: the chord polynomials `h_st`, the cardinal parts
//!   `P_j`, `P_st`, `Q_st`, and the assembled Kergin and Hakopian interpolants.
//! * [`bounds`]: Lebesgue-type constants and the magnitude bounds of the chord
//!   polynomials at Leja sections.
//! * [`registry`] and [`experiments`]: test functions and the experiment
//!   drivers used by the command-line tool.

pub mod bounds;
pub mod error;
pub mod experiments;
pub mod geometry;
pub mod interpolants;
pub mod leja;
pub mod mean_value;
pub mod polys;
pub mod registry;

pub use error::{Error, Result};
pub use geometry::{make_disk_grid, DiskGrid, PlanePoint};
pub use interpolants::{
    hakopian, kergin, HakopianInterpolant, Interpolant, InterpolantKind, KerginInterpolant,
    NodeConfiguration,
};
pub use leja::{canonical_leja, decompose, LejaSection};
pub use mean_value::{QuadratureRule, ScalarField};
pub use polys::{Axis, BivariatePoly, ComplexPoly, SignLogValue, UnivariatePoly};
