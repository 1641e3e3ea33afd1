//! Polynomial algebra in coefficient form, plus product-form evaluation helpers.

mod bivariate;
mod complex;
mod product;
mod signlog;
mod univariate;

pub use bivariate::{Axis, BivariatePoly, PolyFile};
pub use complex::ComplexPoly;
pub use product::product_derivatives;
pub use signlog::SignLogValue;
pub use univariate::{monic_from_roots, UnivariatePoly};

use rayon::prelude::*;

use crate::geometry::{DiskGrid, PlanePoint};

/// Multiplicative slack applied to every grid-based inequality check.
pub const GRID_SLACK: f64 = 0.01;

/// Maximum of `|f|` over the grid points. An estimate from below of the true
/// sup norm on the disk.
pub fn sup_norm_disk<F>(grid: &DiskGrid, f: F) -> f64
where
    F: Fn(PlanePoint) -> f64 + Sync,
{
    grid.points().par_iter().map(|&p| f(p).abs()).reduce(|| 0.0, f64::max)
}

/// Ratio `max(|dp/dx1|, |dp/dx2|) / (deg p)^2 |p|` on the grid.
pub fn markov_ratio(p: &BivariatePoly, grid: &DiskGrid) -> Option<f64> {
    let deg = p.degree();
    if deg == 0 {
        return None;
    }
    let norm = p.sup_norm(grid);
    let d1 = p.partial_derivative(Axis::X1).sup_norm(grid);
    let d2 = p.partial_derivative(Axis::X2).sup_norm(grid);
    Some(d1.max(d2) / ((deg * deg) as f64 * norm))
}

/// Markov's inequality on the disk, checked on the grid with [`GRID_SLACK`].
/// Polynomials of degree 0 trivially pass.
pub fn markov_check(p: &BivariatePoly, grid: &DiskGrid) -> bool {
    markov_ratio(p, grid).is_none_or(|r| r <= 1.0 + GRID_SLACK)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::make_disk_grid;
    use num_complex::Complex64;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn grid() -> DiskGrid {
        make_disk_grid(16, 256).unwrap()
    }

    #[test]
    fn sup_norm_examples() {
        let g = grid();
        assert_eq!(BivariatePoly::x1().sup_norm(&g), 1.0);
        let r2 = BivariatePoly::x1().mul(&BivariatePoly::x1()).add(&BivariatePoly::x2().mul(&BivariatePoly::x2()));
        assert!((r2.sup_norm(&g) - 1.0).abs() < 1e-14);
        assert_eq!(BivariatePoly::constant(-2.5).sup_norm(&g), 2.5);
    }

    #[test]
    fn markov_linear() {
        let g = grid();
        let r = markov_ratio(&BivariatePoly::x1(), &g).unwrap();
        assert!((r - 1.0).abs() < 1e-14);
        assert!(markov_check(&BivariatePoly::x1(), &g));
    }

    #[test]
    fn markov_real_part_of_power_and_chebyshev_extremal() {
        let g = make_disk_grid(32, 512).unwrap();
        for d in [2usize, 5, 9] {
            let mut c = vec![Complex64::new(0.0, 0.0); d + 1];
            c[d] = Complex64::new(1.0, 0.0);
            let p = ComplexPoly::new(c).real_part();
            assert!(markov_check(&p, &g));
            // T_d(x1) attains d^2 at x1 = 1.
            let t = chebyshev(d);
            let tb = t.compose_linear(1.0, 0.0);
            let ratio = markov_ratio(&tb, &g).unwrap();
            assert!(ratio > 0.99 && ratio <= 1.0 + GRID_SLACK, "d={d} ratio={ratio}");
        }
    }

    fn chebyshev(d: usize) -> UnivariatePoly {
        let mut t0 = vec![1.0];
        let mut t1 = vec![0.0, 1.0];
        if d == 0 {
            return UnivariatePoly::new(t0);
        }
        for _ in 1..d {
            let mut t2 = vec![0.0; t1.len() + 1];
            for (i, c) in t1.iter().enumerate() {
                t2[i + 1] += 2.0 * c;
            }
            for (i, c) in t0.iter().enumerate() {
                t2[i] -= c;
            }
            t0 = t1;
            t1 = t2;
        }
        UnivariatePoly::new(t1)
    }

    fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> BivariatePoly {
        let mut p = BivariatePoly::zero(deg);
        for j in 0..=deg {
            for k in 0..=deg - j {
                p.set(j, k, rng.gen_range(-1.0..1.0));
            }
        }
        p
    }

    #[test]
    fn markov_holds_for_random_polynomials() {
        let g = make_disk_grid(16, 256).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..100 {
            let deg = rng.gen_range(1..=16);
            let p = random_poly(&mut rng, deg);
            assert!(markov_check(&p, &g));
        }
    }

    #[test]
    fn iterated_markov_up_to_second_order() {
        let g = make_disk_grid(16, 256).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let deg = rng.gen_range(1..=12);
            let p = random_poly(&mut rng, deg);
            let n = p.sup_norm(&g);
            let dd = p.degree() as f64;
            for alpha in [[1, 0], [0, 1], [2, 0], [1, 1], [0, 2]] {
                let order = (alpha[0] + alpha[1]) as i32;
                let lhs = p.derivative(alpha).sup_norm(&g);
                assert!(lhs <= dd.powi(2 * order) * n * (1.0 + GRID_SLACK));
            }
        }
    }
}
