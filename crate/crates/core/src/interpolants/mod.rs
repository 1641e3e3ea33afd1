//! Kergin and Hakopian interpolation at plane nodes in general position.
//!
//! For a pair `s != t` let `v = (a_s - a_t)^perp` and
//! `h_st(w) = prod_{m != s} (w - <v, a_m>)`. Then
//!
//! * `P_st(x) = h_st(<v, x>) / (|a_s - a_t|^2 h_st'(<v, a_s>))`,
//! * `Q_st(x) = h_st'(<v, x>) / h_st'(<v, a_s>)`,
//! * `P_j = Re` of the complex Lagrange cardinal polynomial of `a_j`,
//!
//! and the interpolants are
//!
//! * `K[A; f] = sum_j f(a_j) P_j + sum_{s<t} P_st int_[a_s,a_t] D_v f`,
//! * `H[A; f] = sum_{s<t} Q_st int_[a_s,a_t] f`.
//!
//! Every part is kept in product form. Values and derivatives of an
//! interpolant are evaluated through that form, which stays accurate for
//! large node counts. The monomial coefficient table is built on demand; it
//! loses roughly a factor `4 sqrt 2` of relative accuracy per degree and is
//! only trustworthy for small `d`.

mod chord;
mod hakopian;
mod kergin;
mod lagrange;
mod verify;

use std::fmt;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::PlanePoint;
use crate::leja::LejaSection;
use crate::mean_value::{GradientSource, QuadratureRule, ScalarField};
use crate::polys::{BivariatePoly, PolyFile};

pub use chord::{build_h_st, build_p_st, build_q_st, ChordPair};
pub use hakopian::{hakopian, hakopian_with, HakopianInterpolant};
pub use kergin::{kergin, kergin_with, KerginInterpolant};
pub use lagrange::{build_p_j, LagrangeCardinal};
pub use verify::{
    affine_invariance_check, affine_invariance_discrepancy, kronecker_matrix, newton_term, verify_mean_value_conditions,
    KroneckerReport, MeanValueReport, MeanValueResidual, NewtonTau,
};

/// Relative tolerance of the triple collinearity test.
pub const COLLINEARITY_TOL: f64 = 1e-12;

/// Largest derivative order served by [`Interpolant::derivative`].
pub const MAX_DIRECT_ORDER: usize = 4;

/// Multi-indices of [`Interpolant::jet2`].
pub const JET2_ALPHAS: [[usize; 2]; 6] = [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2]];

/// `[g, g' v1, g' v2, g'' v1^2, g'' v1 v2, g'' v2^2]` for a ridge function `g(<v, x>)`.
pub(crate) fn ridge_jet2(g: [f64; 3], v: PlanePoint) -> [f64; 6] {
    [g[0], g[1] * v.x1, g[1] * v.x2, g[2] * v.x1 * v.x1, g[2] * v.x1 * v.x2, g[2] * v.x2 * v.x2]
}

/// Nodes `a_0, .., a_(d-1)` together with their general-position status.
#[derive(Clone, Debug, PartialEq)]
pub struct NodeConfiguration {
    points: Vec<PlanePoint>,
    degeneracy: Option<(usize, usize, usize, f64)>,
    section_ref: Option<String>,
}

impl NodeConfiguration {
    /// Fails on an empty list or on coincident points; collinear triples are
    /// recorded, not rejected.
    pub fn new(points: Vec<PlanePoint>) -> Result<Self> {
        if points.is_empty() {
            return Err(Error::InvalidParameter("node configuration is empty".into()));
        }
        let d = points.len();
        for i in 0..d {
            for j in i + 1..d {
                if points[i] == points[j] {
                    return Err(Error::CoincidentNodes(i, j));
                }
            }
        }
        let mut degeneracy = None;
        'outer: for i in 0..d {
            for j in i + 1..d {
                for k in j + 1..d {
                    let (u, w) = (points[j] - points[i], points[k] - points[i]);
                    let cross = u.cross(w);
                    if cross.abs() < COLLINEARITY_TOL * u.norm() * w.norm() {
                        degeneracy = Some((i, j, k, cross));
                        break 'outer;
                    }
                }
            }
        }
        Ok(Self { points, degeneracy, section_ref: None })
    }

    /// Nodes of a Leja section, tagged `leja:<d>`.
    pub fn from_section(section: &LejaSection) -> Result<Self> {
        let mut cfg = Self::new(section.nodes().to_vec())?;
        cfg.section_ref = Some(format!("leja:{}", section.d()));
        Ok(cfg)
    }

    pub fn with_section_ref(mut self, reference: impl Into<String>) -> Self {
        self.section_ref = Some(reference.into());
        self
    }

    pub fn section_ref(&self) -> Option<&str> {
        self.section_ref.as_deref()
    }

    pub fn points(&self) -> &[PlanePoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn is_general_position(&self) -> bool {
        self.degeneracy.is_none()
    }

    pub fn require_general_position(&self) -> Result<()> {
        match self.degeneracy {
            Some((i, j, k, c)) => Err(Error::Collinear(i, j, k, c)),
            None => Ok(()),
        }
    }

    /// Same nodes in a different order.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.len()];
        if order.len() != self.len() || order.iter().any(|&i| i >= self.len() || std::mem::replace(&mut seen[i], true)) {
            return Err(Error::InvalidParameter("not a permutation of the nodes".into()));
        }
        let mut cfg = Self::new(order.iter().map(|&i| self.points[i]).collect())?;
        cfg.section_ref = self.section_ref.clone();
        Ok(cfg)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum InterpolantKind {
    Kergin,
    Hakopian,
}

impl InterpolantKind {
    /// Degree bound of the interpolant on `d` nodes.
    pub fn degree_bound(self, d: usize) -> usize {
        match self {
            InterpolantKind::Kergin => d.saturating_sub(1),
            InterpolantKind::Hakopian => d.saturating_sub(2),
        }
    }
}

impl fmt::Display for InterpolantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            InterpolantKind::Kergin => "kergin",
            InterpolantKind::Hakopian => "hakopian",
        })
    }
}

impl std::str::FromStr for InterpolantKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "kergin" => Ok(InterpolantKind::Kergin),
            "hakopian" => Ok(InterpolantKind::Hakopian),
            other => Err(Error::InvalidParameter(format!("unknown interpolant kind `{other}`"))),
        }
    }
}

/// Options shared by the two constructors.
#[derive(Clone, Debug, Default)]
pub struct BuildOptions {
    /// Segment rule; `None` picks one from the field's polynomial degree.
    pub rule: Option<QuadratureRule>,
    /// Allow central differences when the field has no gradient.
    pub allow_fd: bool,
}

impl BuildOptions {
    pub(crate) fn rule_for(&self, f: &ScalarField) -> QuadratureRule {
        match (&self.rule, f.poly_degree()) {
            (Some(rule), _) => rule.clone(),
            (None, Some(deg)) => QuadratureRule::for_degree(deg),
            (None, None) => QuadratureRule::default(),
        }
    }
}

/// Common interface of the assembled interpolants.
pub trait Interpolant: Send + Sync {
    fn kind(&self) -> InterpolantKind;

    fn nodes(&self) -> &NodeConfiguration;

    fn eval(&self, x: PlanePoint) -> f64;

    /// `D^alpha` of the interpolant at `x` through the product form,
    /// `|alpha| <= MAX_DIRECT_ORDER`.
    fn derivative(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64>;

    /// All derivatives of order `<= 2` at once, ordered as [`JET2_ALPHAS`].
    fn jet2(&self, x: PlanePoint) -> [f64; 6] {
        JET2_ALPHAS.map(|alpha| self.derivative(alpha, x).expect("order <= 2 is always served"))
    }

    /// Monomial coefficients, built on first use.
    fn poly(&self) -> &BivariatePoly;

    /// Where the gradients behind the interpolant came from, if any were used.
    fn gradient_source(&self) -> Option<GradientSource>;

    fn degree_bound(&self) -> usize {
        self.kind().degree_bound(self.nodes().len())
    }

    fn to_file(&self) -> InterpolantFile {
        let poly = self.poly().to_file();
        InterpolantFile {
            kind: self.kind(),
            d: self.nodes().len(),
            node_section_ref: self.nodes().section_ref().map(str::to_owned),
            degree: poly.degree,
            coeffs: poly.coeffs,
        }
    }
}

/// JSON export of an interpolant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct InterpolantFile {
    pub kind: InterpolantKind,
    pub d: usize,
    pub node_section_ref: Option<String>,
    pub degree: usize,
    pub coeffs: Vec<f64>,
}

impl InterpolantFile {
    pub fn poly(&self) -> Result<BivariatePoly> {
        BivariatePoly::from_file(PolyFile { degree: self.degree, coeffs: self.coeffs.clone() })
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(self)?)?;
        Ok(())
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        Ok(serde_json::from_str(&std::fs::read_to_string(path)?)?)
    }
}

/// Kahan-Babuska-Neumaier summation.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct NeumaierSum {
    sum: f64,
    comp: f64,
}

impl NeumaierSum {
    pub(crate) fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub(crate) fn value(self) -> f64 {
        self.sum + self.comp
    }
}

pub(crate) fn check_order(alpha: [usize; 2]) -> Result<()> {
    if alpha[0] + alpha[1] > MAX_DIRECT_ORDER {
        return Err(Error::InvalidParameter(format!(
            "direct evaluation supports derivative order <= {MAX_DIRECT_ORDER}, got {}",
            alpha[0] + alpha[1]
        )));
    }
    Ok(())
}
