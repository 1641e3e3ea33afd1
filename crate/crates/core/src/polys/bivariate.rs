use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::{DiskGrid, PlanePoint};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Axis {
    X1,
    X2,
}

/// Real polynomial in `(x1, x2)` stored as a dense triangular table of
/// coefficients of `x1^j x2^k`, `j + k <= degree_bound`.
///
/// Layout is row-major over `j`: `(0,0), (0,1), .., (0,n), (1,0), .., (n,0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariatePoly {
    degree: usize,
    coeffs: Vec<f64>,
}

/// JSON form of a [`BivariatePoly`].
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolyFile {
    pub degree: usize,
    pub coeffs: Vec<f64>,
}

fn table_len(n: usize) -> usize {
    (n + 1) * (n + 2) / 2
}

impl BivariatePoly {
    pub fn zero(degree: usize) -> Self {
        Self { degree, coeffs: vec![0.0; table_len(degree)] }
    }

    pub fn constant(c: f64) -> Self {
        Self { degree: 0, coeffs: vec![c] }
    }

    pub fn x1() -> Self {
        Self::linear(0.0, 1.0, 0.0)
    }

    pub fn x2() -> Self {
        Self::linear(0.0, 0.0, 1.0)
    }

    /// `c0 + c1 x1 + c2 x2`
    pub fn linear(c0: f64, c1: f64, c2: f64) -> Self {
        let mut p = Self::zero(1);
        p.set(0, 0, c0);
        p.set(1, 0, c1);
        p.set(0, 1, c2);
        p
    }

    pub fn from_coeffs(degree: usize, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != table_len(degree) {
            return Err(Error::InvalidParameter(format!(
                "degree {degree} needs {} coefficients, got {}",
                table_len(degree),
                coeffs.len()
            )));
        }
        Ok(Self { degree, coeffs })
    }

    pub fn to_file(&self) -> PolyFile {
        PolyFile { degree: self.degree, coeffs: self.coeffs.clone() }
    }

    pub fn from_file(file: PolyFile) -> Result<Self> {
        Self::from_coeffs(file.degree, file.coeffs)
    }

    fn index(&self, j: usize, k: usize) -> usize {
        let n = self.degree;
        j * (n + 1) - j * (j.saturating_sub(1)) / 2 + k
    }

    pub fn degree_bound(&self) -> usize {
        self.degree
    }

    /// Largest total degree carrying a non-negligible coefficient.
    pub fn degree(&self) -> usize {
        let mut deg = 0;
        for (j, k, c) in self.terms() {
            if c.abs() > 1e-300 {
                deg = deg.max(j + k);
            }
        }
        deg
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn coeff(&self, j: usize, k: usize) -> f64 {
        if j + k > self.degree {
            0.0
        } else {
            self.coeffs[self.index(j, k)]
        }
    }

    /// Panics if `j + k` exceeds the degree bound.
    pub fn set(&mut self, j: usize, k: usize, c: f64) {
        assert!(j + k <= self.degree, "monomial ({j},{k}) exceeds degree bound {}", self.degree);
        let i = self.index(j, k);
        self.coeffs[i] = c;
    }

    pub fn add_to(&mut self, j: usize, k: usize, c: f64) {
        assert!(j + k <= self.degree, "monomial ({j},{k}) exceeds degree bound {}", self.degree);
        let i = self.index(j, k);
        self.coeffs[i] += c;
    }

    /// Iterator over `(j, k, coefficient)`.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, f64)> + '_ {
        let n = self.degree;
        (0..=n).flat_map(move |j| (0..=n - j).map(move |k| (j, k))).zip(self.coeffs.iter()).map(|((j, k), &c)| (j, k, c))
    }

    /// Nested Horner evaluation.
    pub fn eval(&self, x: PlanePoint) -> f64 {
        let n = self.degree;
        let mut acc = 0.0;
        for j in (0..=n).rev() {
            let start = self.index(j, 0);
            let row = &self.coeffs[start..start + n - j + 1];
            let inner = row.iter().rev().fold(0.0, |a, &c| a * x.x2 + c);
            acc = acc * x.x1 + inner;
        }
        acc
    }

    pub fn sup_norm(&self, grid: &DiskGrid) -> f64 {
        super::sup_norm_disk(grid, |p| self.eval(p))
    }

    pub fn scale(&self, s: f64) -> Self {
        Self { degree: self.degree, coeffs: self.coeffs.iter().map(|c| c * s).collect() }
    }

    fn combine(&self, other: &Self, sign: f64) -> Self {
        let n = self.degree.max(other.degree);
        let mut out = Self::zero(n);
        for (j, k, c) in self.terms() {
            out.add_to(j, k, c);
        }
        for (j, k, c) in other.terms() {
            out.add_to(j, k, sign * c);
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1.0)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1.0)
    }

    /// `self += s * other`, raising the degree bound when needed.
    pub fn add_scaled(&mut self, other: &Self, s: f64) {
        if other.degree > self.degree {
            *self = self.combine(&Self::zero(other.degree), 1.0);
        }
        for (j, k, c) in other.terms() {
            self.add_to(j, k, s * c);
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.degree + other.degree);
        for (j1, k1, c1) in self.terms() {
            if c1 == 0.0 {
                continue;
            }
            for (j2, k2, c2) in other.terms() {
                out.add_to(j1 + j2, k1 + k2, c1 * c2);
            }
        }
        out
    }

    pub fn partial_derivative(&self, axis: Axis) -> Self {
        let n = self.degree.saturating_sub(1);
        let mut out = Self::zero(n);
        for (j, k, c) in self.terms() {
            match axis {
                Axis::X1 if j > 0 => out.add_to(j - 1, k, j as f64 * c),
                Axis::X2 if k > 0 => out.add_to(j, k - 1, k as f64 * c),
                _ => {}
            }
        }
        out
    }

    /// `D^alpha p` with `alpha = [order in x1, order in x2]`.
    pub fn derivative(&self, alpha: [usize; 2]) -> Self {
        let mut p = self.clone();
        for _ in 0..alpha[0] {
            p = p.partial_derivative(Axis::X1);
        }
        for _ in 0..alpha[1] {
            p = p.partial_derivative(Axis::X2);
        }
        p
    }

    /// Truncated product used for jet arithmetic: drops every monomial of total
    /// degree above `n`.
    pub fn mul_truncated(&self, other: &Self, n: usize) -> Self {
        let mut out = Self::zero(n.min(self.degree + other.degree));
        let cap = out.degree;
        for (j1, k1, c1) in self.terms() {
            if c1 == 0.0 || j1 + k1 > cap {
                continue;
            }
            for (j2, k2, c2) in other.terms() {
                if j1 + j2 + k1 + k2 <= cap {
                    out.add_to(j1 + j2, k1 + k2, c1 * c2);
                }
            }
        }
        out
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Largest coefficient-wise difference, treating missing monomials as zero.
    pub fn max_coeff_diff(&self, other: &Self) -> f64 {
        self.sub(other).max_abs_coeff()
    }
}
