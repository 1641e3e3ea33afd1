//! Leja sections for the closed unit disk and their binary block structure.
//!
//! With `d = 2^n0 + 2^n1 + ... + 2^nr`, `n0 > n1 > ... > nr`, a Leja section
//! splits into `r + 1` consecutive blocks. Block 0 holds the `2^n0`-th roots
//! of unity; block `b >= 1` holds the `2^nb`-th roots of unity rotated by
//! `rho_0 ... rho_(b-1)`, where each `rho_j` is a `2^nj`-th root of `-1`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::Range;
use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{unit_circle_samples, PlanePoint};
use crate::polys::SignLogValue;

/// An angle measured in units of `pi`. Dyadic rationals are kept exact.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Angle {
    /// `num / 2^log2_den` times `pi`.
    Dyadic { num: u64, log2_den: u32 },
    /// Arbitrary multiple of `pi`.
    PiUnits(f64),
}

impl Angle {
    /// Reduced dyadic angle `num / 2^log2_den` (times `pi`).
    pub fn dyadic(mut num: u64, mut log2_den: u32) -> Self {
        while log2_den > 0 && num.is_multiple_of(2) {
            num /= 2;
            log2_den -= 1;
        }
        Angle::Dyadic { num, log2_den }
    }

    pub fn pi_units(&self) -> f64 {
        match *self {
            Angle::Dyadic { num, log2_den } => num as f64 / (1u64 << log2_den) as f64,
            Angle::PiUnits(x) => x,
        }
    }

    pub fn radians(&self) -> f64 {
        PI * self.pi_units()
    }

    /// The point `exp(i angle)`; multiples of `pi/2` are exact.
    pub fn unit_point(&self) -> PlanePoint {
        if let Angle::Dyadic { num, log2_den } = *self {
            if log2_den <= 1 {
                // quarter turns: num / 2^log2_den in {0, 1/2, 1, 3/2} mod 2
                let quarter = (num << (1 - log2_den)) % 4;
                return match quarter {
                    0 => PlanePoint::new(1.0, 0.0),
                    1 => PlanePoint::new(0.0, 1.0),
                    2 => PlanePoint::new(-1.0, 0.0),
                    _ => PlanePoint::new(0.0, -1.0),
                };
            }
        }
        PlanePoint::from_angle(self.radians())
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Angle::Dyadic { num, log2_den: 0 } => write!(f, "{num}"),
            Angle::Dyadic { num, log2_den } => write!(f, "{num}/{}", 1u64 << log2_den),
            Angle::PiUnits(x) => write!(f, "{x}"),
        }
    }
}

impl Serialize for Angle {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Angle::Dyadic { .. } => s.serialize_str(&self.to_string()),
            Angle::PiUnits(x) => s.serialize_f64(*x),
        }
    }
}

impl<'de> Deserialize<'de> for Angle {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Number(x) => Ok(Angle::PiUnits(x)),
            Raw::Text(t) => parse_dyadic(&t).map_err(serde::de::Error::custom),
        }
    }
}

fn parse_dyadic(text: &str) -> std::result::Result<Angle, String> {
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text.trim(), "1"),
    };
    let num: u64 = num.parse().map_err(|_| format!("bad angle numerator in `{text}`"))?;
    let den: u64 = den.parse().map_err(|_| format!("bad angle denominator in `{text}`"))?;
    if den == 0 || !den.is_power_of_two() {
        return Err(format!("angle denominator must be a power of two in `{text}`"));
    }
    Ok(Angle::dyadic(num, den.trailing_zeros()))
}

/// Binary expansion `d = 2^n0 + ... + 2^nr` with `n0 > ... > nr` and the
/// cumulative block bounds `d_j = 2^n0 + ... + 2^nj`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub exponents: Vec<u32>,
    pub block_bounds: Vec<usize>,
}

impl Decomposition {
    /// Number of blocks minus one.
    pub fn r(&self) -> usize {
        self.exponents.len() - 1
    }

    /// Index range of block `b` (`b = 0` is the leading `2^n0` block).
    pub fn block_range(&self, b: usize) -> Range<usize> {
        let start = if b == 0 { 0 } else { self.block_bounds[b - 1] };
        start..self.block_bounds[b]
    }

    /// Block containing node index `s`.
    pub fn block_of(&self, s: usize) -> usize {
        self.block_bounds.iter().position(|&bound| s < bound).expect("index inside the section")
    }
}

pub fn decompose(d: usize) -> Result<Decomposition> {
    if d == 0 {
        return Err(Error::InvalidParameter("section size must be >= 1".into()));
    }
    let mut exponents = Vec::new();
    for bit in (0..usize::BITS).rev() {
        if d & (1usize << bit) != 0 {
            exponents.push(bit);
        }
    }
    let mut acc = 0;
    let block_bounds = exponents
        .iter()
        .map(|&n| {
            acc += 1usize << n;
            acc
        })
        .collect();
    Ok(Decomposition { exponents, block_bounds })
}

/// The first `d` entries `e_0, .., e_(d-1)` of a Leja sequence for the unit disk.
#[derive(Clone, Debug)]
pub struct LejaSection {
    nodes: Vec<PlanePoint>,
    thetas: Vec<Angle>,
    decomposition: Decomposition,
    rotation_args: Vec<Angle>,
}

/// The canonical binary-digit Leja section: for `k = sum a_j 2^j`,
/// `e_k = exp(i pi sum a_j 2^-j)`. The rotations are `rho_j = exp(i pi / 2^nj)`.
pub fn canonical_leja(d: usize) -> Result<LejaSection> {
    let decomposition = decompose(d)?;
    let bits = usize::BITS - (d - 1).leading_zeros();
    let thetas: Vec<Angle> = (0..d)
        .map(|k| {
            // sum_j a_j 2^(bits - j), measured in units of pi / 2^bits
            let mut num = 0u64;
            for j in 0..bits {
                if k & (1 << j) != 0 {
                    num += 1u64 << (bits - j);
                }
            }
            Angle::dyadic(num, bits)
        })
        .collect();
    let r = decomposition.r();
    let rotation_args = decomposition.exponents[..r].iter().map(|&n| Angle::dyadic(1, n)).collect();
    let nodes = thetas.iter().map(Angle::unit_point).collect();
    Ok(LejaSection { nodes, thetas, decomposition, rotation_args })
}

/// JSON form of a section: angles in units of `pi`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SectionFile {
    pub d: usize,
    pub thetas: Vec<Angle>,
    pub exponents: Vec<u32>,
    pub rotation_args: Vec<Angle>,
}

impl LejaSection {
    pub fn d(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[PlanePoint] {
        &self.nodes
    }

    pub fn thetas(&self) -> &[Angle] {
        &self.thetas
    }

    /// `theta_n` in radians.
    pub fn theta(&self, n: usize) -> f64 {
        self.thetas[n].radians()
    }

    pub fn decomposition(&self) -> &Decomposition {
        &self.decomposition
    }

    pub fn exponents(&self) -> &[u32] {
        &self.decomposition.exponents
    }

    pub fn block_bounds(&self) -> &[usize] {
        &self.decomposition.block_bounds
    }

    pub fn r(&self) -> usize {
        self.decomposition.r()
    }

    pub fn rotation_args(&self) -> &[Angle] {
        &self.rotation_args
    }

    pub fn to_file(&self) -> SectionFile {
        SectionFile {
            d: self.d(),
            thetas: self.thetas.clone(),
            exponents: self.decomposition.exponents.clone(),
            rotation_args: self.rotation_args.clone(),
        }
    }

    pub fn from_file(file: SectionFile) -> Result<Self> {
        let decomposition = decompose(file.d)?;
        if file.thetas.len() != file.d {
            return Err(Error::MalformedSection(format!("d = {} but {} angles given", file.d, file.thetas.len())));
        }
        if file.exponents != decomposition.exponents {
            return Err(Error::MalformedSection(format!(
                "exponents {:?} do not match the binary expansion {:?} of d = {}",
                file.exponents, decomposition.exponents, file.d
            )));
        }
        if file.rotation_args.len() != decomposition.r() {
            return Err(Error::MalformedSection(format!(
                "expected {} rotation arguments, got {}",
                decomposition.r(),
                file.rotation_args.len()
            )));
        }
        for (j, phi) in file.rotation_args.iter().enumerate() {
            let n = decomposition.exponents[j];
            let c = (phi.radians() * (1u64 << n) as f64).cos();
            if (c + 1.0).abs() > 1e-12 {
                return Err(Error::MalformedSection(format!("rotation {j} is not a 2^{n}-th root of -1")));
            }
        }
        let nodes = file.thetas.iter().map(Angle::unit_point).collect();
        Ok(Self { nodes, thetas: file.thetas, decomposition, rotation_args: file.rotation_args })
    }

    pub fn write_json(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(&self.to_file())?)?;
        Ok(())
    }

    pub fn read_json(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_file(serde_json::from_str(&text)?)
    }

    /// Sum `phi_0 + ... + phi_(b-1)` of the rotation arguments preceding block `b`.
    pub fn rotation_sum(&self, b: usize) -> f64 {
        self.rotation_args[..b].iter().map(Angle::radians).sum()
    }

    fn check_block(&self, b: usize) -> Result<()> {
        let blocks = self.decomposition.exponents.len();
        if b >= blocks {
            return Err(Error::BlockOutOfRange { index: b, blocks });
        }
        Ok(())
    }
}

/// `prod_{m in block b} |z - e_m|`, accumulated through log-magnitudes.
pub fn block_product(section: &LejaSection, b: usize, z: PlanePoint) -> Result<f64> {
    section.check_block(b)?;
    let range = section.decomposition.block_range(b);
    let nodes = &section.nodes[range];
    Ok(SignLogValue::product(nodes.iter().map(|&e| (z - e).norm())).to_f64())
}

/// Closed form of [`block_product`]: `|z^(2^n0) - 1|` for block 0 and
/// `|(z / (rho_0 ... rho_(b-1)))^(2^nb) - 1|` for later blocks.
pub fn block_closed_form(section: &LejaSection, b: usize, z: PlanePoint) -> Result<f64> {
    section.check_block(b)?;
    let n = section.decomposition.exponents[b];
    let rotation = Complex64::from_polar(1.0, -section.rotation_sum(b));
    let w = (z.to_complex() * rotation).powu(1u32 << n);
    Ok((w - 1.0).norm())
}

/// Per-node products `prod_{m != s} |e_s - e_m|` of a section.
#[derive(Clone, Debug)]
pub struct NodeProductReport {
    pub log_products: Vec<f64>,
    pub min_product: f64,
    pub argmin: usize,
    pub r: usize,
}

impl NodeProductReport {
    pub fn products(&self) -> Vec<f64> {
        self.log_products.iter().map(|l| l.exp()).collect()
    }

    /// Lower bound `2^r`.
    pub fn bound(&self) -> f64 {
        2f64.powi(self.r as i32)
    }

    pub fn holds(&self, tolerance: f64) -> bool {
        self.min_product >= self.bound() - tolerance
    }
}

/// `log prod_{m != s} |x_s - x_m|`.
pub fn log_node_product(nodes: &[PlanePoint], s: usize) -> f64 {
    let others = nodes.iter().enumerate().filter(|&(m, _)| m != s).map(|(_, &e)| (nodes[s] - e).norm());
    SignLogValue::product(others).log_abs()
}

pub fn node_products(section: &LejaSection) -> Result<NodeProductReport> {
    let d = section.d();
    if d < 2 {
        return Err(Error::InvalidParameter("node products need d >= 2".into()));
    }
    let log_products: Vec<f64> = (0..d).map(|s| log_node_product(&section.nodes, s)).collect();
    let (argmin, min_log) = log_products
        .iter()
        .copied()
        .enumerate()
        .fold((0, f64::INFINITY), |best, (i, v)| if v < best.1 { (i, v) } else { best });
    Ok(NodeProductReport { log_products, min_product: min_log.exp(), argmin, r: section.r() })
}

/// Both sides of the trigonometric inequality
/// `prod_{j<r} |sin 2^(n_(j+1)-1) (phi - phi_0 - ... - phi_j)| >= 2^-(n0-nr) |cos 2^(n0-1) phi|`.
/// `None` when the section has a single block.
pub fn trig_inequality_sides(section: &LejaSection, phi: f64) -> Option<(f64, f64)> {
    let r = section.r();
    if r == 0 {
        return None;
    }
    let n = &section.decomposition.exponents;
    let mut lhs = 1.0;
    let mut shift = 0.0;
    for j in 0..r {
        shift += section.rotation_args[j].radians();
        let factor = 2f64.powi(n[j + 1] as i32 - 1);
        lhs *= (factor * (phi - shift)).sin().abs();
    }
    let rhs = 2f64.powi(-((n[0] - n[r]) as i32)) * (2f64.powi(n[0] as i32 - 1) * phi).cos().abs();
    Some((lhs, rhs))
}

fn log_distance_product(nodes: &[PlanePoint], z: PlanePoint) -> f64 {
    SignLogValue::product(nodes.iter().map(|&e| (z - e).norm())).log_abs()
}

/// Maximiser of `prod |z - e_j|` over `samples` equispaced points of the unit
/// circle. Ties (within `1e-12` relative) go to the smallest argument in `[0, 2 pi)`.
pub fn brute_force_next(nodes: &[PlanePoint], samples: usize) -> Result<PlanePoint> {
    if samples < 4 * (nodes.len() + 1) {
        return Err(Error::InvalidParameter(format!(
            "need at least {} boundary samples, got {samples}",
            4 * (nodes.len() + 1)
        )));
    }
    let circle = unit_circle_samples(samples);
    let mut best = (circle[0], log_distance_product(nodes, circle[0]));
    for &z in &circle[1..] {
        let v = log_distance_product(nodes, z);
        if v > best.1 + 1e-12 {
            best = (z, v);
        }
    }
    Ok(best.0)
}

/// For each `1 <= k < d`, the ratio of `prod_{j<k} |e_k - e_j|` to its maximum
/// over `samples` points of the unit circle.
pub fn maximality_ratios(nodes: &[PlanePoint], samples: usize) -> Vec<f64> {
    let circle = unit_circle_samples(samples);
    (1..nodes.len())
        .map(|k| {
            let prefix = &nodes[..k];
            let max = circle.iter().map(|&z| log_distance_product(prefix, z)).fold(f64::NEG_INFINITY, f64::max);
            (log_distance_product(prefix, nodes[k]) - max).exp()
        })
        .collect()
}

/// A failed Leja-section invariant.
#[derive(Clone, Debug, PartialEq)]
pub enum LejaViolation {
    FirstNodeNotOne { found: PlanePoint },
    OffCircle { index: usize, modulus: f64 },
    NotRootsOfUnity { power: u32 },
    NotMaximal { index: usize, ratio: f64 },
}

impl fmt::Display for LejaViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LejaViolation::FirstNodeNotOne { found } => write!(f, "first node is ({}, {}), not 1", found.x1, found.x2),
            LejaViolation::OffCircle { index, modulus } => write!(f, "node {index} has modulus {modulus}"),
            LejaViolation::NotRootsOfUnity { power } => {
                write!(f, "first 2^{power} nodes are not the 2^{power}-th roots of unity")
            }
            LejaViolation::NotMaximal { index, ratio } => {
                write!(f, "node {index} reaches only {ratio} of the maximal distance product")
            }
        }
    }
}

/// `true` if the nodes are the `n`-th roots of unity in some order, to `tol`.
pub fn is_roots_of_unity(nodes: &[PlanePoint], tol: f64) -> bool {
    let n = nodes.len();
    let mut seen = vec![false; n];
    for p in nodes {
        let theta = p.x2.atan2(p.x1).rem_euclid(2.0 * PI);
        let k = ((theta * n as f64 / (2.0 * PI)).round() as usize) % n;
        let root = PlanePoint::from_angle(2.0 * PI * k as f64 / n as f64);
        if seen[k] || (root - *p).norm() > tol {
            return false;
        }
        seen[k] = true;
    }
    true
}

/// Checks the Leja invariants of a node list: first node `1`, all nodes on
/// the circle, power-of-two prefixes are roots of unity, and each node
/// maximises the distance product over `samples` boundary points (ratio
/// `>= 1 - 1e-6`).
pub fn check_leja_nodes(nodes: &[PlanePoint], samples: usize) -> Vec<LejaViolation> {
    let mut out = Vec::new();
    if let Some(&first) = nodes.first() {
        if (first - PlanePoint::new(1.0, 0.0)).norm() > 1e-12 {
            out.push(LejaViolation::FirstNodeNotOne { found: first });
        }
    }
    for (index, p) in nodes.iter().enumerate() {
        let modulus = p.norm();
        if (modulus - 1.0).abs() > 1e-12 {
            out.push(LejaViolation::OffCircle { index, modulus });
        }
    }
    let mut power = 0;
    while (1usize << power) <= nodes.len() {
        if !is_roots_of_unity(&nodes[..1 << power], 1e-12) {
            out.push(LejaViolation::NotRootsOfUnity { power });
        }
        power += 1;
    }
    for (i, ratio) in maximality_ratios(nodes, samples).into_iter().enumerate() {
        if ratio < 1.0 - 1e-6 {
            out.push(LejaViolation::NotMaximal { index: i + 1, ratio });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_disk_point;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn close(a: PlanePoint, b: PlanePoint) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn small_sections() {
        let s2 = canonical_leja(2).unwrap();
        assert_eq!(s2.nodes(), &[PlanePoint::new(1.0, 0.0), PlanePoint::new(-1.0, 0.0)]);
        let s4 = canonical_leja(4).unwrap();
        assert_eq!(
            s4.nodes(),
            &[PlanePoint::new(1.0, 0.0), PlanePoint::new(-1.0, 0.0), PlanePoint::new(0.0, 1.0), PlanePoint::new(0.0, -1.0)]
        );
        assert!(is_roots_of_unity(s4.nodes(), 1e-12));
        let s5 = canonical_leja(5).unwrap();
        assert!(close(s5.nodes()[4], PlanePoint::from_angle(PI / 4.0)));
        assert_eq!(s5.thetas()[4], Angle::dyadic(1, 2));
        assert!(canonical_leja(0).is_err());
    }

    #[test]
    fn fifth_node_attains_the_fine_grid_maximum() {
        let s4 = canonical_leja(4).unwrap();
        let e4 = canonical_leja(5).unwrap().nodes()[4];
        let circle = unit_circle_samples(1 << 20);
        let max = circle.iter().map(|&z| log_distance_product(s4.nodes(), z)).fold(f64::NEG_INFINITY, f64::max);
        assert!((log_distance_product(s4.nodes(), e4) - max).abs() < 1e-12);
    }

    #[test]
    fn brute_force_examples() {
        let one = [PlanePoint::new(1.0, 0.0)];
        assert!(close(brute_force_next(&one, 64).unwrap(), PlanePoint::new(-1.0, 0.0)));
        let two = canonical_leja(2).unwrap();
        assert!(close(brute_force_next(two.nodes(), 64).unwrap(), PlanePoint::new(0.0, 1.0)));
        let four = canonical_leja(4).unwrap();
        assert!(close(brute_force_next(four.nodes(), 64).unwrap(), PlanePoint::from_angle(PI / 4.0)));
        assert!(brute_force_next(four.nodes(), 19).is_err());
    }

    #[test]
    fn brute_force_lands_in_argmax_set() {
        let s = canonical_leja(33).unwrap();
        for k in 1..32 {
            let z = brute_force_next(&s.nodes()[..k], 4096).unwrap();
            let best = log_distance_product(&s.nodes()[..k], z);
            let canonical = log_distance_product(&s.nodes()[..k], s.nodes()[k]);
            assert!((best - canonical).abs() < 1e-10, "k={k}");
        }
    }

    #[test]
    fn decomposition_examples() {
        let d13 = decompose(13).unwrap();
        assert_eq!(d13.exponents, vec![3, 2, 0]);
        assert_eq!(d13.block_bounds, vec![8, 12, 13]);
        assert_eq!(d13.r(), 2);
        assert_eq!(decompose(4).unwrap().exponents, vec![2]);
        assert_eq!(decompose(4).unwrap().block_bounds, vec![4]);
        let d7 = decompose(7).unwrap();
        assert_eq!(d7.exponents, vec![2, 1, 0]);
        assert_eq!(d7.block_bounds, vec![4, 6, 7]);
        assert_eq!(d13.block_of(11), 1);
    }

    #[test]
    fn rotation_arguments_are_roots_of_minus_one() {
        for d in 1..=64 {
            let s = canonical_leja(d).unwrap();
            for (j, phi) in s.rotation_args().iter().enumerate() {
                let n = s.exponents()[j];
                assert!(((1u64 << n) as f64 * phi.radians()).cos() + 1.0 < 1e-12);
            }
        }
    }

    #[test]
    fn block_product_examples() {
        let s = canonical_leja(4).unwrap();
        assert!((block_product(&s, 0, PlanePoint::ORIGIN).unwrap() - 1.0).abs() < 1e-15);
        assert!((block_product(&s, 0, PlanePoint::new(2.0, 0.0)).unwrap() - 15.0).abs() < 1e-12);
        assert!(matches!(block_product(&s, 1, PlanePoint::ORIGIN), Err(Error::BlockOutOfRange { .. })));
    }

    #[test]
    fn block_products_match_closed_forms() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for d in 1..=64 {
            let s = canonical_leja(d).unwrap();
            for _ in 0..100 {
                let z = random_disk_point(&mut rng);
                for b in 0..=s.r() {
                    let direct = block_product(&s, b, z).unwrap();
                    let closed = block_closed_form(&s, b, z).unwrap();
                    assert!((direct - closed).abs() <= 1e-10 * closed.max(direct), "d={d} b={b}");
                }
            }
        }
    }

    #[test]
    fn in_block_node_products() {
        for d in [6usize, 13, 29, 64] {
            let s = canonical_leja(d).unwrap();
            for b in 0..=s.r() {
                let range = s.decomposition().block_range(b);
                let block = &s.nodes()[range.clone()];
                let expected = 2f64.powi(s.exponents()[b] as i32);
                for k in 0..block.len() {
                    let p = log_node_product(block, k).exp();
                    assert!((p - expected).abs() < 1e-10 * expected);
                }
            }
        }
    }

    #[test]
    fn node_product_lower_bound() {
        let s = canonical_leja(16).unwrap();
        let rep = node_products(&s).unwrap();
        assert!(rep.products().iter().all(|p| (p - 16.0).abs() < 1e-10));
        for n0 in 1..6 {
            let d = (1usize << n0) + 1;
            let rep = node_products(&canonical_leja(d).unwrap()).unwrap();
            assert!((rep.products()[d - 1] - 2.0).abs() < 1e-12);
        }
        let rep = node_products(&canonical_leja(13).unwrap()).unwrap();
        assert_eq!(rep.r, 2);
        assert!(rep.min_product >= 4.0 - 1e-12);
        assert!(node_products(&canonical_leja(1).unwrap()).is_err());
    }

    #[test]
    fn trigonometric_inequality() {
        let mut rng = ChaCha8Rng::seed_from_u64(58);
        for d in 2..=64 {
            let s = canonical_leja(d).unwrap();
            for _ in 0..1000 {
                let phi = rng.gen_range(0.0..2.0 * PI);
                if let Some((lhs, rhs)) = trig_inequality_sides(&s, phi) {
                    assert!(lhs >= rhs - 1e-12, "d={d} phi={phi}");
                }
            }
        }
    }

    #[test]
    fn structure_and_maximality_of_canonical_sections() {
        let s = canonical_leja(40).unwrap();
        assert!(check_leja_nodes(s.nodes(), 4096).is_empty());
        let mut perturbed = s.nodes().to_vec();
        perturbed[5] = perturbed[5] * 0.9;
        let violations = check_leja_nodes(&perturbed, 4096);
        assert!(violations.iter().any(|v| matches!(v, LejaViolation::OffCircle { index: 5, .. })));
    }

    #[test]
    fn section_json_round_trip() {
        let s = canonical_leja(13).unwrap();
        let text = serde_json::to_string(&s.to_file()).unwrap();
        assert!(text.contains("\"3/2\""));
        let back = LejaSection::from_file(serde_json::from_str(&text).unwrap()).unwrap();
        assert_eq!(back.nodes(), s.nodes());
        assert_eq!(back.rotation_args(), s.rotation_args());

        let bad = r#"{"d":3,"thetas":["0","1"],"exponents":[1,0],"rotation_args":["1/2"]}"#;
        assert!(LejaSection::from_file(serde_json::from_str(bad).unwrap()).is_err());
        let bad_rot = r#"{"d":3,"thetas":["0","1","1/2"],"exponents":[1,0],"rotation_args":["1/4"]}"#;
        assert!(LejaSection::from_file(serde_json::from_str(bad_rot).unwrap()).is_err());
        let float = r#"{"d":2,"thetas":[0.0, 1.0],"exponents":[1],"rotation_args":[]}"#;
        let s2 = LejaSection::from_file(serde_json::from_str(float).unwrap()).unwrap();
        assert!((s2.nodes()[1] - PlanePoint::new(-1.0, 0.0)).norm() < 1e-15);
    }
}
