use serde::{Deserialize, Serialize};

use super::bivariate::BivariatePoly;

/// Real polynomial in one variable, monomial basis, `coeffs[k]` multiplies `w^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct UnivariatePoly {
    coeffs: Vec<f64>,
}

const NEGLIGIBLE: f64 = 1e-300;

impl UnivariatePoly {
    pub fn new(coeffs: Vec<f64>) -> Self {
        if coeffs.is_empty() {
            return Self { coeffs: vec![0.0] };
        }
        Self { coeffs }
    }

    pub fn constant(c: f64) -> Self {
        Self { coeffs: vec![c] }
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Index of the last coefficient whose magnitude exceeds `1e-300`; `0` for
    /// the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| c.abs() > NEGLIGIBLE).unwrap_or(0)
    }

    /// Horner evaluation.
    pub fn eval(&self, w: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * w + c)
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::constant(0.0);
        }
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, c)| k as f64 * c).collect())
    }

    /// The bivariate polynomial `x -> p(a x1 + b x2)`.
    pub fn compose_linear(&self, a: f64, b: f64) -> BivariatePoly {
        let n = self.coeffs.len() - 1;
        let mut out = BivariatePoly::zero(n);
        let apow = powers(a, n);
        let bpow = powers(b, n);
        // coefficient of x1^j x2^m is c_{j+m} C(j+m, j) a^j b^m
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0.0 {
                continue;
            }
            let mut binom = 1.0;
            for j in 0..=k {
                out.add_to(j, k - j, c * binom * apow[j] * bpow[k - j]);
                binom = binom * (k - j) as f64 / (j + 1) as f64;
            }
        }
        out
    }
}

fn powers(x: f64, n: usize) -> Vec<f64> {
    let mut v = Vec::with_capacity(n + 1);
    let mut acc = 1.0;
    for _ in 0..=n {
        v.push(acc);
        acc *= x;
    }
    v
}

/// Monic polynomial `prod (w - r)` over the given roots, expanded by
/// incremental convolution.
pub fn monic_from_roots(roots: &[f64]) -> UnivariatePoly {
    let mut c = Vec::with_capacity(roots.len() + 1);
    c.push(1.0);
    for &r in roots {
        c.push(0.0);
        for k in (1..c.len()).rev() {
            c[k] = c[k - 1] - r * c[k];
        }
        c[0] *= -r;
    }
    UnivariatePoly::new(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_disk_point;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn eval_examples() {
        let p = UnivariatePoly::new(vec![-1.0, 0.0, 1.0]);
        assert_eq!(p.eval(2.0), 3.0);
        assert_eq!(monic_from_roots(&[1.0, -1.0]).eval(0.0), -1.0);
    }

    #[test]
    fn eval_matches_term_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..50 {
            let n = rng.gen_range(0..20);
            let c: Vec<f64> = (0..=n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let w: f64 = rng.gen_range(-1.5..1.5);
            let p = UnivariatePoly::new(c.clone());
            let direct: f64 = c.iter().enumerate().map(|(k, ck)| ck * w.powi(k as i32)).sum();
            let scale: f64 = c.iter().enumerate().map(|(k, ck)| (ck * w.powi(k as i32)).abs()).sum();
            assert!((p.eval(w) - direct).abs() <= 1e-12 * scale.max(1e-300));
        }
    }

    #[test]
    fn roots_expansion() {
        assert_eq!(monic_from_roots(&[0.0]).coeffs(), &[0.0, 1.0]);
        assert_eq!(monic_from_roots(&[1.0, -1.0]).coeffs(), &[-1.0, 0.0, 1.0]);
        // (w-1)(w-2)(w-3)
        assert_eq!(monic_from_roots(&[1.0, 2.0, 3.0]).coeffs(), &[-6.0, 11.0, -6.0, 1.0]);
    }

    #[test]
    fn roots_are_zeros_up_to_degree_64() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for n in [1usize, 8, 32, 64] {
            let roots: Vec<f64> = (0..n).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let p = monic_from_roots(&roots);
            assert_eq!(p.degree(), n);
            let scale: f64 = roots.iter().map(|r| 1.0 + r.abs()).product();
            for &r in &roots {
                assert!(p.eval(r).abs() <= 1e-9 * scale);
            }
        }
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(UnivariatePoly::new(vec![-1.0, 0.0, 1.0]).derivative().coeffs(), &[0.0, 2.0]);
        assert_eq!(UnivariatePoly::constant(4.0).derivative().coeffs(), &[0.0]);
        let p = monic_from_roots(&[1.0, 2.0, 3.0]).derivative();
        assert!((p.eval(1.0) - 2.0).abs() < 1e-14);
    }

    #[test]
    fn compose_linear_examples() {
        let sq = UnivariatePoly::new(vec![0.0, 0.0, 1.0]).compose_linear(1.0, 0.0);
        assert_eq!(sq.coeff(2, 0), 1.0);
        assert_eq!(sq.coeff(1, 1), 0.0);
        assert_eq!(sq.coeff(0, 2), 0.0);
        let lin = UnivariatePoly::new(vec![0.0, 1.0]).compose_linear(2.0, 3.0);
        assert_eq!(lin.coeff(1, 0), 2.0);
        assert_eq!(lin.coeff(0, 1), 3.0);
    }

    #[test]
    fn compose_linear_agrees_with_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..10 {
            let n = rng.gen_range(1..12);
            let p = UnivariatePoly::new((0..=n).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let (a, b) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let q = p.compose_linear(a, b);
            for _ in 0..100 {
                let x = random_disk_point(&mut rng);
                let expected = p.eval(a * x.x1 + b * x.x2);
                assert!((q.eval(x) - expected).abs() <= 1e-10 * expected.abs().max(1.0));
            }
        }
    }

    #[test]
    fn compose_linear_commutes_with_derivative() {
        use crate::polys::Axis;
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for _ in 0..10 {
            let n = rng.gen_range(1..10);
            let p = UnivariatePoly::new((0..=n).map(|_| rng.gen_range(-1.0..1.0)).collect());
            let (a, b) = (rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let lhs = p.compose_linear(a, b).partial_derivative(Axis::X1);
            let rhs = p.derivative().compose_linear(a, b).scale(a);
            assert!(lhs.max_coeff_diff(&rhs) <= 1e-12 * (1.0 + rhs.max_abs_coeff()));
        }
    }
}
