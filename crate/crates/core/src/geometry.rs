//! Plane points with their complex interpretation, and polar sampling grids of
//! the closed unit disk.

use std::f64::consts::PI;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point `(x1, x2)` of the plane, identified with the complex number `x1 + i x2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x1: f64,
    pub x2: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x1: 0.0, x2: 0.0 };

    pub const fn new(x1: f64, x2: f64) -> Self {
        Self { x1, x2 }
    }

    /// Point on the unit circle at argument `theta`.
    pub fn from_angle(theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c, s)
    }

    /// Rotation by a quarter turn: `(x1, x2) -> (-x2, x1)`, i.e. multiplication by `i`.
    pub fn perp(self) -> Self {
        Self::new(-self.x2, self.x1)
    }

    pub fn inner(self, other: Self) -> f64 {
        self.x1 * other.x1 + self.x2 * other.x2
    }

    /// `x1 y2 - x2 y1`
    pub fn cross(self, other: Self) -> f64 {
        self.x1 * other.x2 - self.x2 * other.x1
    }

    pub fn norm_sqr(self) -> f64 {
        self.inner(self)
    }

    pub fn norm(self) -> f64 {
        self.x1.hypot(self.x2)
    }

    pub fn to_complex(self) -> Complex64 {
        Complex64::new(self.x1, self.x2)
    }

    pub fn from_complex(z: Complex64) -> Self {
        Self::new(z.re, z.im)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x1 + rhs.x1, self.x2 + rhs.x2)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x1 - rhs.x1, self.x2 - rhs.x2)
    }
}

impl Neg for PlanePoint {
    type Output = PlanePoint;
    fn neg(self) -> Self {
        Self::new(-self.x1, -self.x2)
    }
}

impl Mul<f64> for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, rhs: f64) -> Self {
        Self::new(self.x1 * rhs, self.x2 * rhs)
    }
}

pub fn perp(p: PlanePoint) -> PlanePoint {
    p.perp()
}

pub fn inner(x: PlanePoint, y: PlanePoint) -> f64 {
    x.inner(y)
}

/// Polar-product sampling of the closed unit disk used for sup-norm estimates.
///
/// The outermost ring always lies exactly on the unit circle. Sup norms taken
/// over a grid are estimates from below, never certified bounds.
#[derive(Clone, Debug)]
pub struct DiskGrid {
    radial_count: usize,
    angular_count: usize,
    points: Vec<PlanePoint>,
}

pub const DEFAULT_GRID_RADIAL: usize = 64;
pub const DEFAULT_GRID_ANGULAR: usize = 512;

impl DiskGrid {
    pub fn radial_count(&self) -> usize {
        self.radial_count
    }

    pub fn angular_count(&self) -> usize {
        self.angular_count
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

    /// The boundary ring `r = 1`.
    pub fn boundary(&self) -> &[PlanePoint] {
        &self.points[self.points.len() - self.angular_count..]
    }
}

impl Default for DiskGrid {
    fn default() -> Self {
        make_disk_grid(DEFAULT_GRID_RADIAL, DEFAULT_GRID_ANGULAR).expect("default grid parameters are valid")
    }
}

/// Center plus the rings `r_i = i / radial`, `i = 1..=radial`, each sampled at
/// the angles `2 pi k / angular`.
pub fn make_disk_grid(radial: usize, angular: usize) -> Result<DiskGrid> {
    if radial < 1 {
        return Err(Error::InvalidParameter(format!("radial count must be >= 1, got {radial}")));
    }
    if angular < 8 {
        return Err(Error::InvalidParameter(format!("angular count must be >= 8, got {angular}")));
    }
    let circle = unit_circle_samples(angular);
    let mut points = Vec::with_capacity(1 + radial * angular);
    points.push(PlanePoint::ORIGIN);
    for i in 1..=radial {
        let r = i as f64 / radial as f64;
        points.extend(circle.iter().map(|&p| p * r));
    }
    Ok(DiskGrid { radial_count: radial, angular_count: angular, points })
}

/// `n` equispaced points `exp(2 pi i k / n)` on the unit circle; quarter turns
/// are produced exactly.
pub fn unit_circle_samples(n: usize) -> Vec<PlanePoint> {
    (0..n)
        .map(|k| {
            if (4 * k) % n == 0 {
                match 4 * k / n {
                    0 => PlanePoint::new(1.0, 0.0),
                    1 => PlanePoint::new(0.0, 1.0),
                    2 => PlanePoint::new(-1.0, 0.0),
                    _ => PlanePoint::new(0.0, -1.0),
                }
            } else {
                PlanePoint::from_angle(2.0 * PI * k as f64 / n as f64)
            }
        })
        .collect()
}

/// Uniformly distributed random point of the closed unit disk.
pub fn random_disk_point<R: Rng + ?Sized>(rng: &mut R) -> PlanePoint {
    let r = rng.gen::<f64>().sqrt();
    let theta = rng.gen::<f64>() * 2.0 * PI;
    PlanePoint::from_angle(theta) * r
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn perp_of_basis_vectors() {
        assert_eq!(perp(PlanePoint::new(1.0, 0.0)), PlanePoint::new(0.0, 1.0));
        assert_eq!(perp(PlanePoint::new(0.0, 1.0)), PlanePoint::new(-1.0, 0.0));
    }

    #[test]
    fn inner_examples() {
        assert_eq!(inner(PlanePoint::new(1.0, 0.0), PlanePoint::new(0.0, 1.0)), 0.0);
        assert_eq!(inner(PlanePoint::new(3.0, 4.0), PlanePoint::new(3.0, 4.0)), 25.0);
    }

    #[test]
    fn smallest_grid() {
        let g = make_disk_grid(1, 8).unwrap();
        assert_eq!(g.len(), 9);
        assert!(g.points().contains(&PlanePoint::new(1.0, 0.0)));
        assert!(g.points().iter().all(|p| p.norm() <= 1.0 + 1e-12));
        assert_eq!(g.boundary().len(), 8);
        assert!(g.boundary().iter().all(|p| (p.norm() - 1.0).abs() < 1e-12));
    }

    #[test]
    fn grid_rejects_bad_parameters() {
        assert!(make_disk_grid(0, 8).is_err());
        assert!(make_disk_grid(4, 7).is_err());
    }

    #[test]
    fn default_grid_size() {
        let g = DiskGrid::default();
        assert_eq!(g.len(), 1 + 64 * 512);
        assert!(g.points().iter().all(|p| p.norm() <= 1.0 + 1e-12));
    }

    fn point() -> impl Strategy<Value = PlanePoint> {
        (-10.0..10.0f64, -10.0..10.0f64).prop_map(|(a, b)| PlanePoint::new(a, b))
    }

    proptest! {
        #[test]
        fn perp_is_a_quarter_turn(p in point()) {
            prop_assert_eq!(perp(perp(p)), -p);
            prop_assert!(inner(perp(p), p).abs() <= 1e-12 * (1.0 + p.norm_sqr()));
            prop_assert!((perp(p).norm() - p.norm()).abs() <= 1e-12 * (1.0 + p.norm()));
            let z = p.to_complex() * Complex64::i();
            prop_assert_eq!(PlanePoint::from_complex(z), perp(p));
        }

        #[test]
        fn perp_preserves_inner_products(x in point(), y in point()) {
            let lhs = inner(perp(x), perp(y));
            prop_assert!((lhs - inner(x, y)).abs() <= 1e-12 * (1.0 + x.norm() * y.norm()));
        }

        #[test]
        fn complex_product_matches_real_pair_formula(x in point(), y in point()) {
            let z = PlanePoint::from_complex(x.to_complex() * y.to_complex());
            let expected = PlanePoint::new(x.x1 * y.x1 - x.x2 * y.x2, x.x1 * y.x2 + x.x2 * y.x1);
            prop_assert!((z - expected).norm() <= 1e-12 * (1.0 + x.norm() * y.norm()));
        }
    }
}
