//! Experiment drivers behind the command-line tool.
//!
//! Outputs are deterministic: rows come in the order of the requested
//! degrees, floats are printed with 17 significant digits, and timings are
//! kept out of every file.

use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{pair_bounds, BoundsReport};
use crate::error::{Error, Result};
use crate::geometry::{make_disk_grid, DiskGrid};
use crate::interpolants::{
    affine_invariance_discrepancy, hakopian_with, kergin_with, kronecker_matrix, newton_term, verify_mean_value_conditions,
    BuildOptions, Interpolant, InterpolantKind, NodeConfiguration, JET2_ALPHAS,
};
use crate::leja::{canonical_leja, check_leja_nodes, LejaSection};
use crate::mean_value::{AffineMap, QuadratureRule, ScalarField, Smoothness};
use crate::registry::{lookup, random_polynomial};

/// Dyadic degrees plus two non-dyadic ones exercising `r > 0`.
pub const DEFAULT_DEGREES: [usize; 7] = [2, 4, 5, 8, 13, 16, 32];

/// For C-infinity fields: `error(32) < CONVERGENCE_FACTOR * error(4)`.
/// An empirical calibration, not a proven rate.
pub const CONVERGENCE_FACTOR: f64 = 1e-3;

/// Parses `"4,8,16"`, `"2-32"` or mixtures such as `"2-5,13"`.
pub fn parse_degrees(spec: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidParameter(format!("cannot parse degree list `{spec}`"));
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once('-') {
            Some((a, b)) => {
                let (a, b): (usize, usize) = (a.trim().parse().map_err(|_| bad())?, b.trim().parse().map_err(|_| bad())?);
                if a > b {
                    return Err(bad());
                }
                out.extend(a..=b);
            }
            None => out.push(part.parse().map_err(|_| bad())?),
        }
    }
    if out.is_empty() || out.contains(&0) {
        return Err(bad());
    }
    Ok(out)
}

/// Parameters of a run, echoed into every output.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub command: String,
    pub degrees: Vec<usize>,
    pub function: String,
    pub kind: InterpolantKind,
    pub grid_radial: usize,
    pub grid_angular: usize,
    /// Segment rule size; `None` selects it from the field.
    pub quad_nodes: Option<usize>,
    pub seed: u64,
}

impl Default for ExperimentConfig {
    fn default() -> Self {
        Self {
            command: "converge".into(),
            degrees: DEFAULT_DEGREES.to_vec(),
            function: "smooth-expcos".into(),
            kind: InterpolantKind::Kergin,
            grid_radial: crate::geometry::DEFAULT_GRID_RADIAL,
            grid_angular: crate::geometry::DEFAULT_GRID_ANGULAR,
            quad_nodes: None,
            seed: 0,
        }
    }
}

impl ExperimentConfig {
    pub fn grid(&self) -> Result<DiskGrid> {
        make_disk_grid(self.grid_radial, self.grid_angular)
    }

    fn build_options(&self) -> Result<BuildOptions> {
        let rule = self.quad_nodes.map(QuadratureRule::gauss_legendre).transpose()?;
        Ok(BuildOptions { rule, allow_fd: false })
    }
}

/// One degree of a convergence run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentRecord {
    pub kind: InterpolantKind,
    pub function: String,
    pub d: usize,
    pub r: usize,
    pub grid_radial: usize,
    pub grid_angular: usize,
    /// Segment rule size actually used.
    pub quad_nodes: usize,
    pub sup_error: f64,
    pub err_d10: f64,
    pub err_d01: f64,
    pub err_d20: f64,
    pub err_d11: f64,
    pub err_d02: f64,
    /// `sum_j |P_j|` (Kergin only, `NaN` otherwise).
    pub lebesgue_lagrange: f64,
    /// `sum |P_st|` or `sum |Q_st|`.
    pub lebesgue_pairs: f64,
    /// Round-off level of `sup_error`, see [`roundoff_floor`].
    pub roundoff_floor: f64,
    #[serde(skip)]
    pub wall_seconds: f64,
}

pub const CONVERGE_COLUMNS: [&str; 16] = [
    "kind",
    "function",
    "d",
    "r",
    "grid_radial",
    "grid_angular",
    "quad_nodes",
    "sup_error",
    "err_d10",
    "err_d01",
    "err_d20",
    "err_d11",
    "err_d02",
    "lebesgue_lagrange",
    "lebesgue_pairs",
    "roundoff_floor",
];

fn fmt_float(x: f64) -> String {
    format!("{x:.16e}")
}

impl ExperimentRecord {
    /// Round-off level of the first-derivative errors: the value level
    /// times the Markov factor `deg^2`.
    pub fn roundoff_floor_d1(&self) -> f64 {
        let deg = self.kind.degree_bound(self.d) as f64;
        self.roundoff_floor * deg * deg
    }

    pub fn derivative_errors(&self) -> [f64; 5] {
        [self.err_d10, self.err_d01, self.err_d20, self.err_d11, self.err_d02]
    }

    fn csv_fields(&self) -> Vec<String> {
        let mut v = vec![
            self.kind.to_string(),
            self.function.clone(),
            self.d.to_string(),
            self.r.to_string(),
            self.grid_radial.to_string(),
            self.grid_angular.to_string(),
            self.quad_nodes.to_string(),
        ];
        v.extend(
            [self.sup_error, self.err_d10, self.err_d01, self.err_d20, self.err_d11, self.err_d02, self.lebesgue_lagrange, self.lebesgue_pairs, self.roundoff_floor]
                .map(fmt_float),
        );
        v
    }
}

pub fn write_records_csv<W: std::io::Write>(records: &[ExperimentRecord], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(CONVERGE_COLUMNS)?;
    for r in records {
        w.write_record(r.csv_fields())?;
    }
    w.flush()?;
    Ok(())
}

/// Sup errors of the value and all derivatives of order `<= 2`. Entries
/// whose derivative the field does not provide are `NaN`.
pub fn grid_errors(f: &ScalarField, interp: &dyn Interpolant, grid: &DiskGrid) -> [f64; 6] {
    let order = f.derivative_order();
    grid.points()
        .par_iter()
        .map(|&x| {
            let jet = interp.jet2(x);
            let mut e = [0.0; 6];
            for (i, alpha) in JET2_ALPHAS.iter().enumerate() {
                e[i] = if alpha[0] + alpha[1] <= order {
                    (f.partial(*alpha, x).unwrap_or(f64::NAN) - jet[i]).abs()
                } else {
                    f64::NAN
                };
            }
            e
        })
        .reduce(|| [0.0; 6], |a, b| std::array::from_fn(|i| if a[i].is_nan() || b[i].is_nan() { f64::NAN } else { a[i].max(b[i]) }))
}

/// Forward round-off bound of the product-form evaluation:
/// `d eps (1 + sum |P_j| + diam sum |P_st|) scale` for Kergin and
/// `d eps (1 + sum |Q_st|) scale` for Hakopian, where `scale` bounds the
/// data (`max(|f|, |grad f|)` on the grid). Each of the `O(d)` products
/// carries relative error `~ d eps`, and the terms add up to at most the
/// Lebesgue-type sum times the data size.
pub fn roundoff_floor(kind: InterpolantKind, d: usize, lebesgue_lagrange: f64, lebesgue_pairs: f64, scale: f64) -> f64 {
    let amplification = match kind {
        InterpolantKind::Kergin => 1.0 + lebesgue_lagrange + crate::bounds::DISK_DIAMETER * lebesgue_pairs,
        InterpolantKind::Hakopian => 1.0 + lebesgue_pairs,
    };
    d as f64 * f64::EPSILON * amplification * scale
}

fn data_scale(f: &ScalarField, grid: &DiskGrid) -> f64 {
    let value = crate::polys::sup_norm_disk(grid, |x| f.value(x));
    let gradient = if f.has_gradient() {
        crate::polys::sup_norm_disk(grid, |x| f.gradient(x, false).map_or(0.0, |g| g.norm()))
    } else {
        0.0
    };
    value.max(gradient)
}

fn build(kind: InterpolantKind, f: &ScalarField, nodes: &NodeConfiguration, options: &BuildOptions) -> Result<Box<dyn Interpolant>> {
    Ok(match kind {
        InterpolantKind::Kergin => Box::new(kergin_with(f, nodes, options)?),
        InterpolantKind::Hakopian => Box::new(hakopian_with(f, nodes, options)?),
    })
}

/// Builds the interpolant of `config.function` at the Leja section of `d` nodes.
pub fn build_interpolant(config: &ExperimentConfig, d: usize) -> Result<Box<dyn Interpolant>> {
    build_interpolant_at(config, &canonical_leja(d)?)
}

/// Same as [`build_interpolant`] at a given section, e.g. one read from disk.
pub fn build_interpolant_at(config: &ExperimentConfig, section: &LejaSection) -> Result<Box<dyn Interpolant>> {
    let nodes = NodeConfiguration::from_section(section)?;
    let f = lookup(&config.function, config.kind, section.d(), config.seed)?;
    build(config.kind, &f, &nodes, &config.build_options()?)
}

/// One record per requested degree.
pub fn run_converge(config: &ExperimentConfig) -> Result<Vec<ExperimentRecord>> {
    let grid = config.grid()?;
    let options = config.build_options()?;
    let mut records = Vec::with_capacity(config.degrees.len());
    for &d in &config.degrees {
        let started = Instant::now();
        let section = canonical_leja(d)?;
        let nodes = NodeConfiguration::from_section(&section)?;
        let f = lookup(&config.function, config.kind, d, config.seed)?;
        let interp = build(config.kind, &f, &nodes, &options)?;
        let errors = grid_errors(&f, interp.as_ref(), &grid);
        let (lebesgue_lagrange, lebesgue_pairs) = if d >= 2 {
            let report = pair_bounds(&section, &grid)?;
            match config.kind {
                InterpolantKind::Kergin => (report.lagrange_lebesgue, report.p_sum()),
                InterpolantKind::Hakopian => (f64::NAN, report.q_sum()),
            }
        } else {
            (1.0, 0.0)
        };
        let lagrange_part = if lebesgue_lagrange.is_nan() { 0.0 } else { lebesgue_lagrange };
        let floor = roundoff_floor(config.kind, d, lagrange_part, lebesgue_pairs, data_scale(&f, &grid));
        records.push(ExperimentRecord {
            kind: config.kind,
            function: config.function.clone(),
            d,
            r: section.r(),
            grid_radial: config.grid_radial,
            grid_angular: config.grid_angular,
            quad_nodes: options.rule_for(&f).node_count(),
            sup_error: errors[0],
            err_d10: errors[1],
            err_d01: errors[2],
            err_d20: errors[3],
            err_d11: errors[4],
            err_d02: errors[5],
            lebesgue_lagrange,
            lebesgue_pairs,
            roundoff_floor: floor,
            wall_seconds: started.elapsed().as_secs_f64(),
        });
    }
    Ok(records)
}

/// Verdict of a convergence run.
///
/// A step `d_k -> d_(k+1)` counts as a decrease if the error drops, or if
/// the new error already sits at its round-off floor: past that point the
/// measured value is evaluation noise, not approximation error.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConvergenceVerdict {
    /// Raw strict decrease of the sup error, for reporting.
    pub strictly_decreasing: bool,
    pub decreasing: bool,
    pub first_derivatives_decreasing: bool,
    /// `error(32) / error(4)` when both degrees were run.
    pub ratio_32_over_4: Option<f64>,
    /// Only asserted for C-infinity fields; `None` otherwise.
    pub meets_factor: Option<bool>,
}

impl ConvergenceVerdict {
    pub fn pass(&self) -> bool {
        self.decreasing && self.meets_factor.unwrap_or(true)
    }
}

fn decreasing_to_floor(records: &[ExperimentRecord], err: fn(&ExperimentRecord) -> f64, floor: fn(&ExperimentRecord) -> f64) -> bool {
    records.windows(2).all(|w| err(&w[1]) < err(&w[0]) || err(&w[1]) <= floor(&w[1]))
}

pub fn convergence_verdict(records: &[ExperimentRecord], smoothness: Smoothness) -> ConvergenceVerdict {
    let at = |d: usize| records.iter().find(|r| r.d == d).map(|r| r.sup_error);
    let ratio = at(32).zip(at(4)).map(|(a, b)| a / b);
    let d1 = ExperimentRecord::roundoff_floor_d1;
    ConvergenceVerdict {
        strictly_decreasing: records.windows(2).all(|w| w[1].sup_error < w[0].sup_error),
        decreasing: decreasing_to_floor(records, |r| r.sup_error, |r| r.roundoff_floor),
        first_derivatives_decreasing: decreasing_to_floor(records, |r| r.err_d10, d1)
            && decreasing_to_floor(records, |r| r.err_d01, d1),
        ratio_32_over_4: ratio,
        meets_factor: match smoothness {
            Smoothness::Infinite => ratio.map(|q| q < CONVERGENCE_FACTOR),
            Smoothness::C(_) => None,
        },
    }
}

/// Pair bounds for every requested degree `>= 2`.
pub fn run_bounds(degrees: &[usize], grid: &DiskGrid) -> Result<Vec<BoundsReport>> {
    degrees.iter().filter(|&&d| d >= 2).map(|&d| pair_bounds(&canonical_leja(d)?, grid)).collect()
}

/// Outcome of one oracle check.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub value: f64,
    pub tolerance: f64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub d: usize,
    pub seed: u64,
    pub perturbed: bool,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    fn push(&mut self, name: &str, value: f64, tolerance: f64, detail: impl Into<String>) {
        self.checks.push(CheckResult { name: name.into(), passed: value <= tolerance, value, tolerance, detail: detail.into() });
    }

    fn push_flag(&mut self, name: &str, passed: bool, detail: impl Into<String>) {
        self.checks.push(CheckResult { name: name.into(), passed, value: if passed { 0.0 } else { 1.0 }, tolerance: 0.0, detail: detail.into() });
    }
}

/// Brute-force samples used by the Leja check of `verify`.
pub const VERIFY_LEJA_SAMPLES: usize = 4096;

/// Oracle suite at the Leja section of `d` nodes. With `perturb = Some(eps)`
/// the last node is pushed off the circle by a factor `1 + eps`.
pub fn run_verify(d: usize, seed: u64, perturb: Option<f64>) -> Result<VerifyReport> {
    let section = canonical_leja(d)?;
    let mut points = section.nodes().to_vec();
    if let Some(eps) = perturb {
        let last = points.len() - 1;
        points[last] = points[last] * (1.0 + eps);
    }
    let mut report = VerifyReport { d, seed, perturbed: perturb.is_some(), checks: Vec::new() };
    let grid = make_disk_grid(16, 128)?;
    let rule = QuadratureRule::gauss_legendre(16)?;

    let violations = check_leja_nodes(&points, VERIFY_LEJA_SAMPLES.max(4 * (d + 1)));
    let detail = violations.iter().map(ToString::to_string).collect::<Vec<_>>().join("; ");
    report.push_flag("leja-invariants", violations.is_empty(), detail);

    let nodes = NodeConfiguration::new(points.clone())?;
    report.push_flag("general-position", nodes.is_general_position(), "");
    if !nodes.is_general_position() {
        return Ok(report);
    }

    for kind in [InterpolantKind::Kergin, InterpolantKind::Hakopian] {
        if kind == InterpolantKind::Hakopian && d < 2 {
            continue;
        }
        let p = random_polynomial(kind.degree_bound(d), seed);
        let f = ScalarField::from_polynomial("projector", p.clone());
        let interp = build(kind, &f, &nodes, &BuildOptions::default())?;
        let scale = p.sup_norm(&grid).max(f64::MIN_POSITIVE);
        let err = crate::polys::sup_norm_disk(&grid, |x| interp.eval(x) - p.eval(x)) / scale;
        report.push(&format!("{kind}-projector"), err, 1e-8, "relative sup error on the grid");
    }

    let smooth = crate::registry::expcos();
    let k = kergin_with(&smooth, &nodes, &BuildOptions::default())?;
    let node_err = points.iter().map(|&a| (k.eval(a) - smooth.value(a)).abs() / (1.0 + smooth.value(a).abs())).fold(0.0, f64::max);
    report.push("kergin-node-interpolation", node_err, 1e-9, "smooth-expcos");

    if d >= 2 {
        let kron = kronecker_matrix(&nodes, &rule)?;
        report.push("kronecker", kron.max_deviation(), 1e-9, format!("{} pairs", kron.pairs.len()));
    }

    let poly_f = ScalarField::from_polynomial("mean-value", random_polynomial(d + 1, seed ^ 0x5eed));
    if d <= 5 {
        let k = kergin_with(&poly_f, &nodes, &BuildOptions::default())?;
        let res = verify_mean_value_conditions(k.poly(), &poly_f, &points, 0, &rule)?;
        report.push("kergin-mean-value", res.max_abs(), 1e-9, format!("{} conditions", res.residuals.len()));
    }
    if (2..=6).contains(&d) {
        let h = hakopian_with(&poly_f, &nodes, &BuildOptions::default())?;
        let res = verify_mean_value_conditions(h.poly(), &poly_f, &points, 1, &rule)?;
        report.push("hakopian-mean-value", res.max_abs(), 1e-9, format!("{} conditions", res.residuals.len()));
    }

    if d <= 4 && perturb.is_none() {
        let newton_f = ScalarField::from_polynomial("newton", random_polynomial(4, seed ^ 0xbeef));
        let next: LejaSection = canonical_leja(d + 1)?;
        let lower = kergin_with(&newton_f, &nodes, &BuildOptions::default())?;
        let upper = kergin_with(&newton_f, &NodeConfiguration::from_section(&next)?, &BuildOptions::default())?;
        let term = newton_term(&newton_f, &next, d, &rule)?;
        let err = crate::polys::sup_norm_disk(&grid, |x| upper.eval(x) - lower.eval(x) - term.eval(x));
        report.push("newton-difference", err, 1e-8, format!("term {d}"));
    }

    for (name, map) in [("affine-rotation", AffineMap::rotation(std::f64::consts::FRAC_PI_4)), ("affine-scaling", AffineMap::scaling(0.5))] {
        let f = ScalarField::from_polynomial("affine", random_polynomial(d + 2, seed ^ 0xaff1));
        let gap = affine_invariance_discrepancy(&f, &nodes, map, seed)?;
        report.push(name, gap, 1e-8, "relative, 100 random points");
    }
    Ok(report)
}
