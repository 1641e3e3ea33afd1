//! Scalar fields and quadrature realisations of the simplex functionals
//!
//! `int_[a_0..a_d] f = int_{Delta_d} f(a_0 + sum t_j (a_j - a_0)) dt`,
//!
//! where `Delta_d` is the standard simplex with Lebesgue measure (total mass
//! `1/d!`) and `int_[a_0] f = f(a_0)`.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{random_disk_point, PlanePoint};
use crate::polys::BivariatePoly;

type ValueFn = Arc<dyn Fn(PlanePoint) -> f64 + Send + Sync>;
type GradientFn = Arc<dyn Fn(PlanePoint) -> PlanePoint + Send + Sync>;
type DerivativeFn = Arc<dyn Fn([usize; 2], PlanePoint) -> f64 + Send + Sync>;

/// Declared smoothness class of a field.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Smoothness {
    C(u32),
    Infinite,
}

impl fmt::Display for Smoothness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Smoothness::C(k) => write!(f, "C{k}"),
            Smoothness::Infinite => write!(f, "Cinf"),
        }
    }
}

/// Where a gradient value came from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GradientSource {
    Analytic,
    FiniteDifference,
}

/// Step of the central-difference gradient fallback.
pub const FD_STEP: f64 = 1e-6;

/// A real function on the plane with optional analytic derivatives.
#[derive(Clone)]
pub struct ScalarField {
    name: String,
    smoothness: Smoothness,
    value: ValueFn,
    gradient: Option<GradientFn>,
    derivatives: Option<(usize, DerivativeFn)>,
    poly_degree: Option<usize>,
}

impl fmt::Debug for ScalarField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ScalarField")
            .field("name", &self.name)
            .field("smoothness", &self.smoothness)
            .field("gradient", &self.gradient.is_some())
            .field("derivative_order", &self.derivatives.as_ref().map(|d| d.0))
            .field("poly_degree", &self.poly_degree)
            .finish()
    }
}

impl ScalarField {
    pub fn new(name: impl Into<String>, smoothness: Smoothness, value: impl Fn(PlanePoint) -> f64 + Send + Sync + 'static) -> Self {
        Self { name: name.into(), smoothness, value: Arc::new(value), gradient: None, derivatives: None, poly_degree: None }
    }

    pub fn with_gradient(mut self, gradient: impl Fn(PlanePoint) -> PlanePoint + Send + Sync + 'static) -> Self {
        self.gradient = Some(Arc::new(gradient));
        self
    }

    /// Registers `D^alpha f` for every `1 <= |alpha| <= max_order`.
    pub fn with_derivatives(mut self, max_order: usize, derivative: impl Fn([usize; 2], PlanePoint) -> f64 + Send + Sync + 'static) -> Self {
        self.derivatives = Some((max_order, Arc::new(derivative)));
        self
    }

    /// A polynomial field; all derivatives are exact formal derivatives.
    pub fn from_polynomial(name: impl Into<String>, p: BivariatePoly) -> Self {
        let n = p.degree_bound();
        // table[a][b] = D^(a,b) p for a + b <= n
        let table: Vec<Vec<BivariatePoly>> = (0..=n).map(|a| (0..=n - a).map(|b| p.derivative([a, b])).collect()).collect();
        let table = Arc::new(table);
        let gp = (table[1.min(n)].clone(), table[0].get(1).cloned());
        let t2 = Arc::clone(&table);
        let value = p.clone();
        let mut field = Self::new(name, Smoothness::Infinite, move |x| value.eval(x)).with_derivatives(usize::MAX, move |alpha, x| {
            if alpha[0] + alpha[1] > n {
                0.0
            } else {
                t2[alpha[0]][alpha[1]].eval(x)
            }
        });
        if n >= 1 {
            let dx1 = gp.0[0].clone();
            let dx2 = gp.1.expect("degree >= 1 has an x2 derivative slot");
            field = field.with_gradient(move |x| PlanePoint::new(dx1.eval(x), dx2.eval(x)));
        } else {
            field = field.with_gradient(|_| PlanePoint::ORIGIN);
        }
        field.poly_degree = Some(p.degree());
        field
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn smoothness(&self) -> Smoothness {
        self.smoothness
    }

    /// Total degree when the field is a polynomial.
    pub fn poly_degree(&self) -> Option<usize> {
        self.poly_degree
    }

    pub fn has_gradient(&self) -> bool {
        self.gradient.is_some() || self.derivative_order() >= 1
    }

    /// Highest order `k` such that every `D^alpha f`, `|alpha| <= k`, is available.
    pub fn derivative_order(&self) -> usize {
        match (&self.derivatives, &self.gradient) {
            (Some((k, _)), _) => *k,
            (None, Some(_)) => 1,
            (None, None) => 0,
        }
    }

    pub fn value(&self, x: PlanePoint) -> f64 {
        (self.value)(x)
    }

    pub fn gradient_source(&self, allow_fd: bool) -> Result<GradientSource> {
        if self.has_gradient() {
            Ok(GradientSource::Analytic)
        } else if allow_fd {
            Ok(GradientSource::FiniteDifference)
        } else {
            Err(Error::MissingDerivative(1, 0, self.name.clone()))
        }
    }

    /// Analytic gradient when registered, central differences otherwise (if allowed).
    pub fn gradient(&self, x: PlanePoint, allow_fd: bool) -> Result<PlanePoint> {
        if let Some(g) = &self.gradient {
            return Ok(g(x));
        }
        if let Some((k, d)) = &self.derivatives {
            if *k >= 1 {
                return Ok(PlanePoint::new(d([1, 0], x), d([0, 1], x)));
            }
        }
        if allow_fd {
            Ok(self.fd_gradient(x))
        } else {
            Err(Error::MissingDerivative(1, 0, self.name.clone()))
        }
    }

    fn fd_gradient(&self, x: PlanePoint) -> PlanePoint {
        let h = FD_STEP;
        let e1 = PlanePoint::new(h, 0.0);
        let e2 = PlanePoint::new(0.0, h);
        PlanePoint::new(
            (self.value(x + e1) - self.value(x - e1)) / (2.0 * h),
            (self.value(x + e2) - self.value(x - e2)) / (2.0 * h),
        )
    }

    /// `D^alpha f(x)`.
    pub fn partial(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64> {
        let order = alpha[0] + alpha[1];
        if order == 0 {
            return Ok(self.value(x));
        }
        if let Some((k, d)) = &self.derivatives {
            if order <= *k {
                return Ok(d(alpha, x));
            }
        }
        if order == 1 {
            if let Some(g) = &self.gradient {
                let v = g(x);
                return Ok(if alpha[0] == 1 { v.x1 } else { v.x2 });
            }
        }
        Err(Error::MissingDerivative(alpha[0], alpha[1], self.name.clone()))
    }

    /// Largest discrepancy between the registered gradient and central
    /// differences at 20 random disk points, relative to `1 + |grad|`.
    pub fn gradient_discrepancy(&self, seed: u64) -> Option<f64> {
        self.gradient.as_ref()?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut worst: f64 = 0.0;
        for _ in 0..20 {
            let x = random_disk_point(&mut rng);
            let g = self.gradient(x, false).ok()?;
            let fd = self.fd_gradient(x);
            worst = worst.max((g - fd).norm() / (1.0 + g.norm()));
        }
        Some(worst)
    }

    /// Registration sanity check: the analytic gradient must match central
    /// differences to `1e-5`.
    pub fn check_gradient(&self, seed: u64) -> Result<()> {
        match self.gradient_discrepancy(seed) {
            Some(err) if err > 1e-5 => Err(Error::InvalidParameter(format!(
                "gradient of `{}` disagrees with finite differences ({err:e})",
                self.name
            ))),
            _ => Ok(()),
        }
    }

    /// `f o Psi` for an affine map `Psi(x) = M x + c`, carrying the gradient
    /// `M^T grad f(Psi x)` when available.
    pub fn compose_affine(&self, map: AffineMap) -> ScalarField {
        let inner = self.clone();
        let mut out = ScalarField::new(format!("{}@affine", self.name), self.smoothness, move |x| inner.value(map.apply(x)));
        if self.has_gradient() {
            let inner = self.clone();
            out = out.with_gradient(move |x| {
                let g = inner.gradient(map.apply(x), false).expect("gradient registered");
                map.transpose_apply(g)
            });
        }
        out.poly_degree = self.poly_degree;
        out
    }
}

/// `x -> M x + c`
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct AffineMap {
    pub matrix: [[f64; 2]; 2],
    pub offset: PlanePoint,
}

impl AffineMap {
    pub const IDENTITY: AffineMap = AffineMap { matrix: [[1.0, 0.0], [0.0, 1.0]], offset: PlanePoint::ORIGIN };

    pub fn rotation(angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        Self { matrix: [[c, -s], [s, c]], offset: PlanePoint::ORIGIN }
    }

    pub fn scaling(factor: f64) -> Self {
        Self { matrix: [[factor, 0.0], [0.0, factor]], offset: PlanePoint::ORIGIN }
    }

    pub fn determinant(&self) -> f64 {
        self.matrix[0][0] * self.matrix[1][1] - self.matrix[0][1] * self.matrix[1][0]
    }

    pub fn apply(&self, x: PlanePoint) -> PlanePoint {
        let m = &self.matrix;
        PlanePoint::new(m[0][0] * x.x1 + m[0][1] * x.x2, m[1][0] * x.x1 + m[1][1] * x.x2) + self.offset
    }

    fn transpose_apply(&self, g: PlanePoint) -> PlanePoint {
        let m = &self.matrix;
        PlanePoint::new(m[0][0] * g.x1 + m[1][0] * g.x2, m[0][1] * g.x1 + m[1][1] * g.x2)
    }
}

/// Gauss-Legendre rule on `[0, 1]`. With `n` nodes it integrates polynomials
/// of degree `<= 2n - 1` exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadratureRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

/// Node count used when the integrand degree is unknown.
pub const DEFAULT_QUAD_NODES: usize = 32;

impl QuadratureRule {
    pub fn gauss_legendre(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("quadrature needs at least one node".into()));
        }
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre(n, x);
            if d != 0.0 {
                dp = d;
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            // map [-1, 1] -> [0, 1]
            nodes[i] = 0.5 * (1.0 - x);
            nodes[n - 1 - i] = 0.5 * (1.0 + x);
            weights[i] = 0.5 * w;
            weights[n - 1 - i] = 0.5 * w;
        }
        Ok(Self { nodes, weights })
    }

    /// `max(16, ceil((deg + 1) / 2))` nodes, exact for segment integrands of degree `deg`.
    pub fn for_degree(deg: usize) -> Self {
        Self::gauss_legendre(16.max((deg + 1).div_ceil(2))).expect("positive node count")
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes.iter().zip(&self.weights).map(|(&x, &w)| w * f(x)).sum()
    }
}

impl Default for QuadratureRule {
    fn default() -> Self {
        Self::gauss_legendre(DEFAULT_QUAD_NODES).expect("positive node count")
    }
}

/// `(P_n(x), P_n'(x))` by the three-term recurrence.
fn legendre(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    if n == 0 {
        return (1.0, 0.0);
    }
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Tensor Gauss-Legendre rule on the standard `dim`-simplex through the
/// collapsed parameterisation `t_k = (1 - t_1 - ... - t_(k-1)) u_k`.
///
/// With `n` nodes per direction it is exact for polynomials of degree
/// `p` whenever `p + dim - 1 <= 2n - 1`.
#[derive(Clone, Debug)]
pub struct SimplexRule {
    dim: usize,
    points: Vec<f64>,
    weights: Vec<f64>,
}

impl SimplexRule {
    pub fn new(dim: usize, rule: &QuadratureRule) -> Self {
        let mut points: Vec<f64> = Vec::new();
        let mut weights = vec![1.0];
        // remaining mass 1 - sum(t) for each partial point
        let mut remaining = vec![1.0];
        for level in 0..dim {
            let count = weights.len();
            let mut next_points = Vec::with_capacity(count * rule.node_count() * (level + 1));
            let mut next_weights = Vec::with_capacity(count * rule.node_count());
            let mut next_remaining = Vec::with_capacity(count * rule.node_count());
            for p in 0..count {
                let prefix = &points[p * level..(p + 1) * level];
                for (&u, &w) in rule.nodes().iter().zip(rule.weights()) {
                    let t = remaining[p] * u;
                    next_points.extend_from_slice(prefix);
                    next_points.push(t);
                    next_weights.push(weights[p] * w * remaining[p]);
                    next_remaining.push(remaining[p] - t);
                }
            }
            points = next_points;
            weights = next_weights;
            remaining = next_remaining;
        }
        Self { dim, points, weights }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Iterator over `(weight, t)` with `t` in the standard simplex.
    pub fn iter(&self) -> impl Iterator<Item = (f64, &[f64])> + '_ {
        self.weights.iter().enumerate().map(move |(i, &w)| (w, &self.points[i * self.dim..(i + 1) * self.dim]))
    }

    /// Integrates `f` over the simplex spanned by `tuple` (`tuple.len() == dim + 1`).
    pub fn integrate(&self, tuple: &[PlanePoint], f: impl Fn(PlanePoint) -> f64) -> f64 {
        assert_eq!(tuple.len(), self.dim + 1, "tuple length must be dim + 1");
        let a0 = tuple[0];
        let edges: Vec<PlanePoint> = tuple[1..].iter().map(|&a| a - a0).collect();
        self.iter()
            .map(|(w, t)| {
                let x = t.iter().zip(&edges).fold(a0, |acc, (&tj, &e)| acc + e * tj);
                w * f(x)
            })
            .sum()
    }
}

/// `int_0^1 f(a + w (b - a)) dw`
pub fn segment_integral(f: impl Fn(PlanePoint) -> f64, a: PlanePoint, b: PlanePoint, rule: &QuadratureRule) -> f64 {
    let e = b - a;
    rule.integrate(|w| f(a + e * w))
}

/// Simplex functional over the tuple `(a_0, .., a_d)`; `d = 0` returns `f(a_0)`.
pub fn simplex_integral(f: impl Fn(PlanePoint) -> f64, tuple: &[PlanePoint], rule: &QuadratureRule) -> f64 {
    assert!(!tuple.is_empty(), "simplex functional needs at least one point");
    if tuple.len() == 1 {
        return f(tuple[0]);
    }
    SimplexRule::new(tuple.len() - 1, rule).integrate(tuple, f)
}

/// `int_0^1 <grad f(a + w (b - a)), (b - a)^perp> dw`
pub fn perp_directional_segment_integral(
    f: &ScalarField,
    a: PlanePoint,
    b: PlanePoint,
    rule: &QuadratureRule,
    allow_fd: bool,
) -> Result<f64> {
    f.gradient_source(allow_fd)?;
    let e = b - a;
    let dir = e.perp();
    let mut acc = 0.0;
    for (&w, &weight) in rule.nodes().iter().zip(rule.weights()) {
        acc += weight * f.gradient(a + e * w, allow_fd)?.inner(dir);
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    fn p(x1: f64, x2: f64) -> PlanePoint {
        PlanePoint::new(x1, x2)
    }

    fn random_poly(rng: &mut ChaCha8Rng, deg: usize) -> BivariatePoly {
        let mut q = BivariatePoly::zero(deg);
        for j in 0..=deg {
            for k in 0..=deg - j {
                q.set(j, k, rng.gen_range(-1.0..1.0));
            }
        }
        q
    }

    #[test]
    fn gauss_legendre_exactness() {
        for n in 1..=20 {
            let rule = QuadratureRule::gauss_legendre(n).unwrap();
            assert!((rule.weights().iter().sum::<f64>() - 1.0).abs() < 1e-14);
            let k = 2 * n - 1;
            let v = rule.integrate(|w| w.powi(k as i32));
            assert!((v - 1.0 / (k as f64 + 1.0)).abs() < 1e-13, "n={n}");
        }
        assert!(QuadratureRule::gauss_legendre(0).is_err());
    }

    #[test]
    fn segment_examples() {
        let rule = QuadratureRule::default();
        let one = |_: PlanePoint| 1.0;
        assert!((segment_integral(one, p(0.3, -2.0), p(4.0, 1.0), &rule) - 1.0).abs() < 1e-14);
        let lin = |x: PlanePoint| 2.0 * x.x1 - x.x2 + 0.5;
        let (a, b) = (p(-1.0, 0.2), p(0.7, 0.9));
        assert!((segment_integral(lin, a, b, &rule) - lin((a + b) * 0.5)).abs() < 1e-14);
        let sq = |x: PlanePoint| x.x1 * x.x1;
        assert!((segment_integral(sq, p(0.0, 0.0), p(1.0, 0.0), &rule) - 1.0 / 3.0).abs() < 1e-15);
    }

    #[test]
    fn simplex_examples() {
        let rule = QuadratureRule::gauss_legendre(8).unwrap();
        let f = |x: PlanePoint| x.x1.exp() * x.x2;
        assert_eq!(simplex_integral(f, &[p(0.3, 0.4)], &rule), f(p(0.3, 0.4)));
        let tri = [p(0.0, 0.0), p(1.0, 0.2), p(-0.3, 0.8)];
        assert!((simplex_integral(|_| 1.0, &tri, &rule) - 0.5).abs() < 1e-15);
        let lin = |x: PlanePoint| 3.0 * x.x1 - 2.0 * x.x2 + 1.0;
        let quad = [p(0.0, 0.0), p(1.0, 0.2), p(-0.3, 0.8), p(0.5, -0.5), p(0.1, 0.1)];
        for d in 1..quad.len() {
            let tuple = &quad[..=d];
            let centroid = tuple.iter().fold(PlanePoint::ORIGIN, |a, &b| a + b) * (1.0 / (d + 1) as f64);
            let fact: f64 = (1..=d).map(|k| k as f64).product();
            assert!((simplex_integral(lin, tuple, &rule) - lin(centroid) / fact).abs() < 1e-14);
        }
    }

    #[test]
    fn simplex_is_permutation_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(31);
        let rule = QuadratureRule::gauss_legendre(6).unwrap();
        for d in 1..=4 {
            let q = random_poly(&mut rng, 5);
            let tuple: Vec<PlanePoint> = (0..=d).map(|_| random_disk_point(&mut rng)).collect();
            let base = simplex_integral(|x| q.eval(x), &tuple, &rule);
            let mut rev = tuple.clone();
            rev.reverse();
            let mut rot = tuple.clone();
            rot.rotate_left(1);
            for perm in [rev, rot] {
                assert!((simplex_integral(|x| q.eval(x), &perm, &rule) - base).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn degenerate_tuple_reduces_to_point_value() {
        let rule = QuadratureRule::gauss_legendre(4).unwrap();
        let a = p(0.2, -0.7);
        let lin = |x: PlanePoint| x.x1 - 4.0 * x.x2;
        for d in 0..=4 {
            let tuple = vec![a; d + 1];
            let fact: f64 = (1..=d).map(|k| k as f64).product();
            assert!((simplex_integral(|_| 1.0, &tuple, &rule) - 1.0 / fact).abs() < 1e-15);
            assert!((simplex_integral(lin, &tuple, &rule) - lin(a) / fact).abs() < 1e-14);
        }
    }

    #[test]
    fn perp_directional_examples() {
        let rule = QuadratureRule::default();
        let c = ScalarField::new("c", Smoothness::Infinite, |_| 3.0).with_gradient(|_| PlanePoint::ORIGIN);
        assert_eq!(perp_directional_segment_integral(&c, p(0.0, 0.0), p(1.0, 1.0), &rule, false).unwrap(), 0.0);
        let x2 = ScalarField::from_polynomial("x2", BivariatePoly::x2());
        let v = perp_directional_segment_integral(&x2, p(1.0, 0.0), p(-1.0, 0.0), &rule, false).unwrap();
        assert!((v + 2.0).abs() < 1e-14);
        let no_grad = ScalarField::new("x1sq", Smoothness::Infinite, |x| x.x1 * x.x1);
        assert!(perp_directional_segment_integral(&no_grad, p(0.0, 0.0), p(1.0, 1.0), &rule, false).is_err());
        let fd = perp_directional_segment_integral(&no_grad, p(0.2, 0.0), p(0.5, 1.0), &rule, true).unwrap();
        let exact = {
            let sq = ScalarField::from_polynomial("x1sq", BivariatePoly::x1().mul(&BivariatePoly::x1()));
            perp_directional_segment_integral(&sq, p(0.2, 0.0), p(0.5, 1.0), &rule, false).unwrap()
        };
        assert!((fd - exact).abs() < 1e-8);
    }

    #[test]
    fn perp_directional_matches_symbolic_derivative() {
        // f = x1^2 on a generic segment: integrand 2 x1(w) * perp_1
        let rule = QuadratureRule::default();
        let sq = ScalarField::from_polynomial("x1sq", BivariatePoly::x1().mul(&BivariatePoly::x1()));
        let (a, b) = (p(-0.4, 0.3), p(0.9, -0.6));
        let dir = (b - a).perp();
        let dx1 = BivariatePoly::x1().scale(2.0);
        let symbolic = segment_integral(|x| dx1.eval(x) * dir.x1, a, b, &rule);
        let v = perp_directional_segment_integral(&sq, a, b, &rule, false).unwrap();
        assert!((v - symbolic).abs() < 1e-12);
    }

    #[test]
    fn polynomial_field_derivatives() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let q = random_poly(&mut rng, 4);
        let f = ScalarField::from_polynomial("q", q.clone());
        let x = p(0.3, -0.2);
        assert_eq!(f.partial([2, 1], x).unwrap(), q.derivative([2, 1]).eval(x));
        assert_eq!(f.partial([5, 0], x).unwrap(), 0.0);
        assert!(f.gradient_discrepancy(1).unwrap() < 1e-6);
        assert!(f.check_gradient(1).is_ok());
        let bad = ScalarField::new("bad", Smoothness::Infinite, |x| x.x1).with_gradient(|_| PlanePoint::new(0.0, 1.0));
        assert!(bad.check_gradient(1).is_err());
        assert!(matches!(bad.partial([2, 0], x), Err(Error::MissingDerivative(2, 0, _))));
    }
}
