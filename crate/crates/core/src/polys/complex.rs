use num_complex::Complex64;

use super::bivariate::BivariatePoly;
use crate::geometry::PlanePoint;

/// Polynomial in `z = x1 + i x2` with complex coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexPoly {
    coeffs: Vec<Complex64>,
}

impl ComplexPoly {
    pub fn new(coeffs: Vec<Complex64>) -> Self {
        if coeffs.is_empty() {
            return Self { coeffs: vec![Complex64::new(0.0, 0.0)] };
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn degree_bound(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn from_roots(roots: &[Complex64]) -> Self {
        let mut c = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            c.push(Complex64::new(0.0, 0.0));
            for k in (1..c.len()).rev() {
                c[k] = c[k - 1] - r * c[k];
            }
            c[0] *= -r;
        }
        Self { coeffs: c }
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self { coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    pub fn eval_point(&self, x: PlanePoint) -> Complex64 {
        self.eval(x.to_complex())
    }

    /// `x -> Re p(x1 + i x2)` as a bivariate polynomial.
    pub fn real_part(&self) -> BivariatePoly {
        self.expand(|c, zk_re, zk_im| c.re * zk_re - c.im * zk_im)
    }

    /// `x -> Im p(x1 + i x2)` as a bivariate polynomial.
    pub fn imag_part(&self) -> BivariatePoly {
        self.expand(|c, zk_re, zk_im| c.re * zk_im + c.im * zk_re)
    }

    fn expand(&self, part: impl Fn(Complex64, f64, f64) -> f64) -> BivariatePoly {
        let n = self.degree_bound();
        let mut out = BivariatePoly::zero(n);
        for (k, &c) in self.coeffs.iter().enumerate() {
            // z^k = sum_m C(k,m) x1^(k-m) (i x2)^m
            let mut binom = 1.0;
            for m in 0..=k {
                let (re, im) = match m % 4 {
                    0 => (binom, 0.0),
                    1 => (0.0, binom),
                    2 => (-binom, 0.0),
                    _ => (0.0, -binom),
                };
                out.add_to(k - m, m, part(c, re, im));
                binom = binom * (k - m) as f64 / (m + 1) as f64;
            }
        }
        out
    }
}
