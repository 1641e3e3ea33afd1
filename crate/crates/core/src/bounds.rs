//! Lebesgue-type constants of Leja sections and the magnitude bounds behind
//! them.
//!
//! For nodes `e_n = exp(i theta_n)` write `alpha_st = exp(i (theta_s + theta_t) / 2)`
//! and `beta_st = -2 sin((theta_s - theta_t) / 2)`, so that
//! `(e_s - e_t)^perp = alpha_st beta_st`. With `d = 2^n0 + .. + 2^nr`:
//!
//! * `|h_st'(<v, e_s>)| >= 2^(2r) |beta|^(d-4) / 2^(d-2)`,
//! * `sup_D |h_st(<v, x>)| <= 2^(2r+1) d |beta|^(d-2) / 2^(d-2)`,
//! * `sup_D |h_st'(<v, x>)| <= 2^(2r+1) d^3 |beta|^(d-3) / 2^(d-2)`,
//!
//! hence `|P_st| <= 2d` and `|Q_st| <= 4d^3` on the disk.
//!
//! Every grid sup is a lower estimate of the true sup, and every grid-based
//! comparison is made with the multiplicative slack [`GRID_SLACK`]. Products
//! are compared through logarithms.

use std::f64::consts::LN_2;
use std::path::Path;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{DiskGrid, PlanePoint};
use crate::interpolants::{ChordPair, InterpolantKind, LagrangeCardinal, NodeConfiguration};
use crate::leja::LejaSection;
use crate::mean_value::ScalarField;
use crate::polys::{sup_norm_disk, BivariatePoly, SignLogValue};

pub use crate::polys::GRID_SLACK;

/// Absolute floor for comparisons whose exact right-hand side is zero.
pub const ROUNDOFF_FLOOR: f64 = 1e-12;

/// Log-space tolerance of the exact product identity for `|h_st'|`.
pub const IDENTITY_TOL: f64 = 1e-9;

/// `alpha_st` and `beta_st` of a node pair.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PairGeometry {
    pub s: usize,
    pub t: usize,
    pub alpha: Complex64,
    pub beta: f64,
}

impl PairGeometry {
    pub fn new(section: &LejaSection, s: usize, t: usize) -> Self {
        let (ts, tt) = (section.theta(s), section.theta(t));
        Self { s, t, alpha: Complex64::from_polar(1.0, 0.5 * (ts + tt)), beta: -2.0 * (0.5 * (ts - tt)).sin() }
    }

    /// `max(|(e_s - e_t)^perp - alpha beta|, ||e_s - e_t| - |beta||)`
    pub fn identity_gap(&self, section: &LejaSection) -> f64 {
        let e = section.nodes();
        let chord = e[self.s] - e[self.t];
        let lhs = chord.perp().to_complex();
        let gap_perp = (lhs - self.alpha * self.beta).norm();
        gap_perp.max((chord.norm() - self.beta.abs()).abs())
    }
}

/// `| |<alpha_st, (e_s - e_m) / (-beta_sm)>| - |e_t - e_m| / 2 |`
pub fn outer_product_gap(section: &LejaSection, s: usize, t: usize, m: usize) -> f64 {
    let e = section.nodes();
    let st = PairGeometry::new(section, s, t);
    let sm = PairGeometry::new(section, s, m);
    let u = (e[s] - e[m]) * (-1.0 / sm.beta);
    let lhs = PlanePoint::from_complex(st.alpha).inner(u).abs();
    (lhs - (e[t] - e[m]).norm() / 2.0).abs()
}

/// Grid estimate of `sum_j |P_j|_D`.
pub fn lagrange_lebesgue(section: &LejaSection, grid: &DiskGrid) -> Result<f64> {
    let nodes = NodeConfiguration::from_section(section)?;
    lagrange_lebesgue_nodes(&nodes, grid)
}

pub fn lagrange_lebesgue_nodes(nodes: &NodeConfiguration, grid: &DiskGrid) -> Result<f64> {
    let cardinals = (0..nodes.len()).map(|j| LagrangeCardinal::new(nodes, j)).collect::<Result<Vec<_>>>()?;
    Ok(cardinals.par_iter().map(|l| sup_norm_disk(grid, |x| l.value(x))).sum())
}

/// Grid sups of `|h_st(<v, x>)|` and `|h_st'(<v, x>)|`, evaluated root by
/// root over the whole grid.
fn chord_sups(pair: &ChordPair, x1: &[f64], x2: &[f64]) -> (f64, f64) {
    let v = pair.direction();
    let w: Vec<f64> = x1.iter().zip(x2).map(|(a, b)| v.x1 * a + v.x2 * b).collect();
    let mut h = vec![1.0; w.len()];
    let mut hp = vec![0.0; w.len()];
    for &r in pair.roots() {
        for ((hi, hpi), &wi) in h.iter_mut().zip(hp.iter_mut()).zip(&w) {
            let delta = wi - r;
            *hpi = *hpi * delta + *hi;
            *hi *= delta;
        }
    }
    let sup = |v: &[f64]| v.iter().fold(0.0f64, |m, x| m.max(x.abs()));
    (sup(&h), sup(&hp))
}

/// One node pair: grid sups, bounds and log-space checks.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairRow {
    pub s: usize,
    pub t: usize,
    pub beta: f64,
    pub p_norm: f64,
    pub q_norm: f64,
    pub h_sup: f64,
    pub h_prime_sup: f64,
    pub log_h_prime_anchor: f64,
    pub log_lower_bound: f64,
    pub log_h_bound: f64,
    pub log_h_prime_bound: f64,
    /// Log-space gap of the exact identity
    /// `|h'| = |beta|^(d-4) / 2^(d-2) prod_{m != t} |e_t - e_m| prod_{m != s} |e_s - e_m|`.
    pub identity_gap: f64,
}

fn slack_log() -> f64 {
    (1.0 + GRID_SLACK).ln()
}

impl PairRow {
    pub fn lower_bound_holds(&self) -> bool {
        self.log_h_prime_anchor + slack_log() >= self.log_lower_bound
    }

    pub fn h_bound_holds(&self) -> bool {
        self.h_sup.ln() <= self.log_h_bound + slack_log()
    }

    pub fn h_prime_bound_holds(&self) -> bool {
        self.h_prime_sup.ln() <= self.log_h_prime_bound + slack_log()
    }

    pub fn identity_holds(&self) -> bool {
        self.identity_gap <= IDENTITY_TOL
    }
}

fn pair_row(section: &LejaSection, pair: &ChordPair, x1: &[f64], x2: &[f64]) -> PairRow {
    let d = section.d();
    let (s, t) = (pair.s(), pair.t());
    let r = section.r() as f64;
    let df = d as f64;
    let geometry = PairGeometry::new(section, s, t);
    let log_beta = geometry.beta.abs().ln();
    let (h_sup, h_prime_sup) = chord_sups(pair, x1, x2);
    let log_h_prime_anchor = pair.h_prime_anchor().log_abs();
    let common = (2.0 * r + 1.0) * LN_2 - (df - 2.0) * LN_2;
    let e = section.nodes();
    let log_prod = |a: usize| SignLogValue::product((0..d).filter(|&m| m != a).map(|m| (e[a] - e[m]).norm())).log_abs();
    let identity = (df - 4.0) * log_beta - (df - 2.0) * LN_2 + log_prod(t) + log_prod(s);
    PairRow {
        s,
        t,
        beta: geometry.beta,
        p_norm: h_sup * pair.p_scale().abs(),
        q_norm: h_prime_sup * pair.q_scale().abs(),
        h_sup,
        h_prime_sup,
        log_h_prime_anchor,
        log_lower_bound: 2.0 * r * LN_2 + (df - 4.0) * log_beta - (df - 2.0) * LN_2,
        log_h_bound: common + df.ln() + (df - 2.0) * log_beta,
        log_h_prime_bound: common + 3.0 * df.ln() + (df - 3.0) * log_beta,
        identity_gap: (identity - log_h_prime_anchor).abs(),
    }
}

fn grid_columns(grid: &DiskGrid) -> (Vec<f64>, Vec<f64>) {
    grid.points().iter().map(|p| (p.x1, p.x2)).unzip()
}

/// Bounds of a single pair `s < t`.
pub fn hst_magnitude_bounds(section: &LejaSection, s: usize, t: usize, grid: &DiskGrid) -> Result<PairRow> {
    let d = section.d();
    if d < 2 || s >= t || t >= d {
        return Err(Error::InvalidParameter(format!("pair ({s}, {t}) invalid for d = {d}")));
    }
    let nodes = NodeConfiguration::from_section(section)?;
    let pair = ChordPair::new(&nodes, s, t)?;
    let (x1, x2) = grid_columns(grid);
    Ok(pair_row(section, &pair, &x1, &x2))
}

/// Every pair of a section, plus the Lagrange Lebesgue sum.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub d: usize,
    pub r: usize,
    pub grid_radial: usize,
    pub grid_angular: usize,
    pub lagrange_lebesgue: f64,
    pub rows: Vec<PairRow>,
}

/// JSON summary of a [`BoundsReport`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundsSummary {
    pub d: usize,
    pub r: usize,
    pub grid_radial: usize,
    pub grid_angular: usize,
    pub pairs: usize,
    pub lagrange_lebesgue: f64,
    pub max_p_ratio: f64,
    pub max_q_ratio: f64,
    pub p_sum: f64,
    pub p_sum_bound: f64,
    pub q_sum: f64,
    pub q_sum_bound: f64,
    pub kergin_pass: bool,
    pub hakopian_pass: bool,
    /// `None` for `d < 4`, where the lower bound is reported only.
    pub lower_bound_pass: Option<bool>,
    pub h_bound_pass: bool,
    pub h_prime_bound_pass: bool,
    pub identity_pass: bool,
    pub all_pass: bool,
}

/// Norms of all `P_st`, `Q_st` and the chord bounds for every pair.
pub fn pair_bounds(section: &LejaSection, grid: &DiskGrid) -> Result<BoundsReport> {
    let d = section.d();
    if d < 2 {
        return Err(Error::InvalidParameter("pair bounds need d >= 2".into()));
    }
    let nodes = NodeConfiguration::from_section(section)?;
    let (x1, x2) = grid_columns(grid);
    let index: Vec<(usize, usize)> = (0..d).flat_map(|s| (s + 1..d).map(move |t| (s, t))).collect();
    let rows = index
        .par_iter()
        .map(|&(s, t)| Ok(pair_row(section, &ChordPair::new(&nodes, s, t)?, &x1, &x2)))
        .collect::<Result<Vec<_>>>()?;
    Ok(BoundsReport {
        d,
        r: section.r(),
        grid_radial: grid.radial_count(),
        grid_angular: grid.angular_count(),
        lagrange_lebesgue: lagrange_lebesgue_nodes(&nodes, grid)?,
        rows,
    })
}

/// `|P_st|_D <= 2d` for every pair; see [`BoundsReport::kergin_pass`].
pub fn kergin_pair_norms(section: &LejaSection, grid: &DiskGrid) -> Result<BoundsReport> {
    pair_bounds(section, grid)
}

/// `|Q_st|_D <= 4d^3` for every pair; see [`BoundsReport::hakopian_pass`].
pub fn hakopian_pair_norms(section: &LejaSection, grid: &DiskGrid) -> Result<BoundsReport> {
    pair_bounds(section, grid)
}

impl BoundsReport {
    fn df(&self) -> f64 {
        self.d as f64
    }

    pub fn max_p_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.p_norm).fold(0.0, f64::max) / (2.0 * self.df())
    }

    pub fn max_q_ratio(&self) -> f64 {
        self.rows.iter().map(|r| r.q_norm).fold(0.0, f64::max) / (4.0 * self.df().powi(3))
    }

    pub fn p_sum(&self) -> f64 {
        self.rows.iter().map(|r| r.p_norm).sum()
    }

    pub fn q_sum(&self) -> f64 {
        self.rows.iter().map(|r| r.q_norm).sum()
    }

    /// `d^2 (d - 1)`
    pub fn p_sum_bound(&self) -> f64 {
        self.df().powi(2) * (self.df() - 1.0)
    }

    /// `2 d^4 (d - 1)`
    pub fn q_sum_bound(&self) -> f64 {
        2.0 * self.df().powi(4) * (self.df() - 1.0)
    }

    pub fn kergin_pass(&self) -> bool {
        self.max_p_ratio() <= 1.0 + GRID_SLACK && self.p_sum() <= self.p_sum_bound() * (1.0 + GRID_SLACK)
    }

    pub fn hakopian_pass(&self) -> bool {
        self.max_q_ratio() <= 1.0 + GRID_SLACK && self.q_sum() <= self.q_sum_bound() * (1.0 + GRID_SLACK)
    }

    pub fn lower_bound_pass(&self) -> Option<bool> {
        (self.d >= 4).then(|| self.rows.iter().all(PairRow::lower_bound_holds))
    }

    pub fn summary(&self) -> BoundsSummary {
        let kergin_pass = self.kergin_pass();
        let hakopian_pass = self.hakopian_pass();
        let lower_bound_pass = self.lower_bound_pass();
        let h_bound_pass = self.rows.iter().all(PairRow::h_bound_holds);
        let h_prime_bound_pass = self.rows.iter().all(PairRow::h_prime_bound_holds);
        let identity_pass = self.rows.iter().all(PairRow::identity_holds);
        BoundsSummary {
            d: self.d,
            r: self.r,
            grid_radial: self.grid_radial,
            grid_angular: self.grid_angular,
            pairs: self.rows.len(),
            lagrange_lebesgue: self.lagrange_lebesgue,
            max_p_ratio: self.max_p_ratio(),
            max_q_ratio: self.max_q_ratio(),
            p_sum: self.p_sum(),
            p_sum_bound: self.p_sum_bound(),
            q_sum: self.q_sum(),
            q_sum_bound: self.q_sum_bound(),
            kergin_pass,
            hakopian_pass,
            lower_bound_pass,
            h_bound_pass,
            h_prime_bound_pass,
            identity_pass,
            all_pass: kergin_pass
                && hakopian_pass
                && lower_bound_pass.unwrap_or(true)
                && h_bound_pass
                && h_prime_bound_pass
                && identity_pass,
        }
    }

    /// One CSV row per pair.
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        write_reports_csv(std::slice::from_ref(self), out)
    }

    fn write_rows<W: std::io::Write>(&self, w: &mut csv::Writer<W>) -> Result<()> {
        let f = |x: f64| format!("{x:.16e}");
        for row in &self.rows {
            w.write_record([
                self.d.to_string(),
                self.r.to_string(),
                self.grid_radial.to_string(),
                self.grid_angular.to_string(),
                row.s.to_string(),
                row.t.to_string(),
                f(row.beta),
                f(row.p_norm),
                f(2.0 * self.df()),
                f(row.q_norm),
                f(4.0 * self.df().powi(3)),
                f(row.h_sup),
                f(row.log_h_bound),
                f(row.h_prime_sup),
                f(row.log_h_prime_bound),
                f(row.log_h_prime_anchor),
                f(row.log_lower_bound),
                f(row.identity_gap),
            ])?;
        }
        Ok(())
    }

    pub fn write_csv_file(&self, path: &Path) -> Result<()> {
        self.write_csv(std::fs::File::create(path)?)
    }
}

/// Pair rows of several sections under a single header.
pub fn write_reports_csv<W: std::io::Write>(reports: &[BoundsReport], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "d", "r", "grid_radial", "grid_angular", "s", "t", "beta", "p_norm", "p_bound", "q_norm", "q_bound", "h_sup",
        "log_h_bound", "h_prime_sup", "log_h_prime_bound", "log_h_prime_anchor", "log_lower_bound", "identity_gap",
    ])?;
    for report in reports {
        report.write_rows(&mut w)?;
    }
    w.flush()?;
    Ok(())
}

/// Both sides of the Lebesgue inequality for a comparison polynomial `q`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct LebesgueSides {
    pub lhs: f64,
    pub rhs: f64,
}

impl LebesgueSides {
    /// `lhs <= rhs (1 + slack)`, with an absolute floor for round-off when
    /// the right-hand side vanishes.
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs * (1.0 + GRID_SLACK) + ROUNDOFF_FLOOR
    }
}

/// Diameter of the unit disk.
pub const DISK_DIAMETER: f64 = 2.0;

/// Kergin: `|f - K f| <= (1 + sum |P_j|) |f - q| + diam sum |P_st| |D(f - q)|`.
/// Hakopian: `|f - H f| <= (1 + sum |Q_st|) |f - q|`.
/// `|D g|` is the sup of the Euclidean gradient norm.
pub fn lebesgue_inequality_sides(
    f: &ScalarField,
    q: &BivariatePoly,
    section: &LejaSection,
    grid: &DiskGrid,
    kind: InterpolantKind,
) -> Result<LebesgueSides> {
    let d = section.d();
    if q.degree() > kind.degree_bound(d) {
        return Err(Error::InvalidParameter(format!(
            "comparison polynomial has degree {} > {} for {kind} on {d} nodes",
            q.degree(),
            kind.degree_bound(d)
        )));
    }
    let nodes = NodeConfiguration::from_section(section)?;
    let dist = sup_norm_disk(grid, |x| f.value(x) - q.eval(x));
    match kind {
        InterpolantKind::Kergin => {
            let k = crate::interpolants::kergin(f, &nodes)?;
            let lhs = sup_norm_disk(grid, |x| f.value(x) - crate::interpolants::Interpolant::eval(&k, x));
            let (lag, pair_sum) = if d >= 2 {
                let report = pair_bounds(section, grid)?;
                (report.lagrange_lebesgue, report.p_sum())
            } else {
                (lagrange_lebesgue_nodes(&nodes, grid)?, 0.0)
            };
            let (q1, q2) = (q.derivative([1, 0]), q.derivative([0, 1]));
            let grad_dist = sup_norm_disk(grid, |x| {
                let g = f.gradient(x, false).expect("kergin already required a gradient");
                PlanePoint::new(g.x1 - q1.eval(x), g.x2 - q2.eval(x)).norm()
            });
            Ok(LebesgueSides { lhs, rhs: (1.0 + lag) * dist + DISK_DIAMETER * pair_sum * grad_dist })
        }
        InterpolantKind::Hakopian => {
            let h = crate::interpolants::hakopian(f, &nodes)?;
            let lhs = sup_norm_disk(grid, |x| f.value(x) - crate::interpolants::Interpolant::eval(&h, x));
            let report = pair_bounds(section, grid)?;
            Ok(LebesgueSides { lhs, rhs: (1.0 + report.q_sum()) * dist })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::make_disk_grid;
    use crate::leja::canonical_leja;
    use crate::mean_value::Smoothness;
    use crate::polys::ComplexPoly;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn grid() -> DiskGrid {
        make_disk_grid(16, 256).unwrap()
    }

    #[test]
    fn pair_geometry_identity() {
        for d in [2, 5, 13, 32, 64] {
            let section = canonical_leja(d).unwrap();
            for s in 0..d {
                for t in s + 1..d {
                    assert!(PairGeometry::new(&section, s, t).identity_gap(&section) < 1e-12);
                }
            }
        }
    }

    #[test]
    fn outer_product_identity() {
        for d in [4, 7, 16] {
            let section = canonical_leja(d).unwrap();
            for s in 0..d {
                for t in (0..d).filter(|&t| t != s) {
                    for m in (0..d).filter(|&m| m != s && m != t) {
                        assert!(outer_product_gap(&section, s, t, m) < 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn lagrange_lebesgue_examples() {
        let g = grid();
        assert!((lagrange_lebesgue(&canonical_leja(1).unwrap(), &g).unwrap() - 1.0).abs() < 1e-15);
        assert!((lagrange_lebesgue(&canonical_leja(2).unwrap(), &g).unwrap() - 2.0).abs() < 1e-15);
    }

    #[test]
    fn two_nodes() {
        let report = pair_bounds(&canonical_leja(2).unwrap(), &grid()).unwrap();
        assert_eq!(report.rows.len(), 1);
        // P_01 = x2 / 2 and Q_01 = 1
        assert!((report.rows[0].p_norm - 0.5).abs() < 1e-15);
        assert!((report.rows[0].q_norm - 1.0).abs() < 1e-15);
        let summary = report.summary();
        assert!(summary.kergin_pass && summary.hakopian_pass);
        assert_eq!(summary.lower_bound_pass, None);
        assert!(pair_bounds(&canonical_leja(1).unwrap(), &grid()).is_err());
    }

    #[test]
    fn all_bounds_hold_small_sections() {
        let g = grid();
        for d in [4, 5, 8, 13, 16] {
            let summary = pair_bounds(&canonical_leja(d).unwrap(), &g).unwrap().summary();
            assert!(summary.all_pass, "{summary:?}");
            assert_eq!(summary.lower_bound_pass, Some(true));
        }
        let row = hst_magnitude_bounds(&canonical_leja(4).unwrap(), 0, 2, &g).unwrap();
        // 2^0 |beta|^0 / 2^2
        assert!((row.log_lower_bound - 0.25f64.ln()).abs() < 1e-15);
        assert!(hst_magnitude_bounds(&canonical_leja(4).unwrap(), 2, 1, &g).is_err());
    }

    #[test]
    fn random_pairs_d13() {
        let g = grid();
        let section = canonical_leja(13).unwrap();
        assert_eq!(section.r(), 2);
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let s = rng.gen_range(0..12);
            let t = rng.gen_range(s + 1..13);
            let row = hst_magnitude_bounds(&section, s, t, &g).unwrap();
            assert!(row.lower_bound_holds() && row.h_bound_holds() && row.h_prime_bound_holds() && row.identity_holds());
        }
    }

    #[test]
    fn csv_export_has_one_row_per_pair() {
        let report = pair_bounds(&canonical_leja(5).unwrap(), &grid()).unwrap();
        let mut buf = Vec::new();
        report.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 10);
        let json = serde_json::to_string(&report.summary()).unwrap();
        assert!(json.contains("\"all_pass\":true"));
    }

    #[test]
    fn lebesgue_inequalities() {
        let g = grid();
        let mut rng = ChaCha8Rng::seed_from_u64(61);
        let mut q = BivariatePoly::zero(5);
        for j in 0..=5 {
            for k in 0..=5 - j {
                q.set(j, k, rng.gen_range(-1.0..1.0));
            }
        }
        let fq = ScalarField::from_polynomial("q", q.clone());
        let section = canonical_leja(8).unwrap();
        for kind in [InterpolantKind::Kergin, InterpolantKind::Hakopian] {
            let sides = lebesgue_inequality_sides(&fq, &q, &section, &g, kind).unwrap();
            assert_eq!(sides.rhs, 0.0);
            assert!(sides.lhs <= ROUNDOFF_FLOOR && sides.holds(), "{kind} {sides:?}");
        }
        let f = ScalarField::new("expcos", Smoothness::Infinite, |x| x.x1.exp() * x.x2.cos())
            .with_gradient(|x| PlanePoint::new(x.x1.exp() * x.x2.cos(), -x.x1.exp() * x.x2.sin()));
        for (kind, deg) in [(InterpolantKind::Kergin, 7), (InterpolantKind::Hakopian, 6)] {
            let coeffs = (0..=deg).map(|k| Complex64::new(1.0 / (1..=k).map(|i| i as f64).product::<f64>(), 0.0)).collect();
            let taylor = ComplexPoly::new(coeffs).real_part();
            let sides = lebesgue_inequality_sides(&f, &taylor, &section, &g, kind).unwrap();
            assert!(sides.holds() && sides.lhs > 0.0, "{kind} {sides:?}");
        }
        assert!(lebesgue_inequality_sides(&fq, &q, &canonical_leja(5).unwrap(), &g, InterpolantKind::Hakopian).is_err());
    }
}
