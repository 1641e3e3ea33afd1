use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::{random_disk_point, PlanePoint};
use crate::leja::LejaSection;
use crate::mean_value::{segment_integral, simplex_integral, AffineMap, QuadratureRule, ScalarField, SimplexRule};
use crate::polys::BivariatePoly;

use super::{kergin_with, BuildOptions, ChordPair, Interpolant, NodeConfiguration};

/// One residual `int_[a_0..a_(j+k)] D^alpha (f - P)` with `|alpha| = j`.
#[derive(Clone, Debug, PartialEq)]
pub struct MeanValueResidual {
    pub j: usize,
    pub alpha: [usize; 2],
    pub value: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MeanValueReport {
    pub k: usize,
    pub residuals: Vec<MeanValueResidual>,
}

impl MeanValueReport {
    pub fn max_abs(&self) -> f64 {
        self.residuals.iter().map(|r| r.value.abs()).fold(0.0, f64::max)
    }
}

/// Residuals of the conditions defining the `k`-th mean-value interpolant
/// at `tuple = (a_0, .., a_n)`: for `j = 0..=n-k` and every `|alpha| = j`,
/// `int_[a_0..a_(j+k)] D^alpha (f - P) = 0`.
pub fn verify_mean_value_conditions(
    p: &BivariatePoly,
    f: &ScalarField,
    tuple: &[PlanePoint],
    k: usize,
    rule: &QuadratureRule,
) -> Result<MeanValueReport> {
    if tuple.is_empty() || k >= tuple.len() {
        return Err(Error::InvalidParameter(format!("k = {k} needs more than {} points", tuple.len())));
    }
    let n = tuple.len() - 1;
    let mut residuals = Vec::new();
    for j in 0..=n - k {
        let simplex = &tuple[..=j + k];
        let cubature = SimplexRule::new(j + k, rule);
        for a in (0..=j).rev() {
            let alpha = [a, j - a];
            // surface a missing derivative before integrating
            f.partial(alpha, simplex[0])?;
            let dp = p.derivative(alpha);
            let integrand = |x: PlanePoint| f.partial(alpha, x).expect("checked above") - dp.eval(x);
            let value = if j + k == 0 { integrand(simplex[0]) } else { cubature.integrate(simplex, integrand) };
            residuals.push(MeanValueResidual { j, alpha, value });
        }
    }
    Ok(MeanValueReport { k, residuals })
}

/// Matrix `M[(s,t)][(u,v)] = int_[a_u, a_v] Q_st` over pairs in lexicographic
/// order; the identity matrix in exact arithmetic.
#[derive(Clone, Debug)]
pub struct KroneckerReport {
    pub pairs: Vec<(usize, usize)>,
    pub matrix: Vec<Vec<f64>>,
}

impl KroneckerReport {
    pub fn max_deviation(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for (i, row) in self.matrix.iter().enumerate() {
            for (j, &m) in row.iter().enumerate() {
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((m - target).abs());
            }
        }
        worst
    }
}

pub fn kronecker_matrix(nodes: &NodeConfiguration, rule: &QuadratureRule) -> Result<KroneckerReport> {
    nodes.require_general_position()?;
    let d = nodes.len();
    let a = nodes.points();
    let pairs: Vec<(usize, usize)> = (0..d).flat_map(|s| (s + 1..d).map(move |t| (s, t))).collect();
    let chords = pairs.iter().map(|&(s, t)| ChordPair::new(nodes, s, t)).collect::<Result<Vec<_>>>()?;
    let matrix = chords
        .iter()
        .map(|q| pairs.iter().map(|&(u, v)| segment_integral(|x| q.q_value(x), a[u], a[v], rule)).collect())
        .collect();
    Ok(KroneckerReport { pairs, matrix })
}

/// A map `tau: {0..d-1} -> {1, 2}` selecting a coordinate of each `x - e_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonTau {
    map: Vec<u8>,
}

impl NewtonTau {
    /// All `2^d` maps.
    pub fn all(d: usize) -> impl Iterator<Item = NewtonTau> {
        (0u64..1 << d).map(move |bits| NewtonTau { map: (0..d).map(|i| if bits >> i & 1 == 0 { 1 } else { 2 }).collect() })
    }

    pub fn map(&self) -> &[u8] {
        &self.map
    }

    /// `(#1s, #2s)`
    pub fn alpha(&self) -> [usize; 2] {
        let ones = self.map.iter().filter(|&&c| c == 1).count();
        [ones, self.map.len() - ones]
    }

    /// `(x - e)^tau = prod_i (x - e_i)_(tau(i))`
    pub fn monomial(&self, e: &[PlanePoint]) -> BivariatePoly {
        self.map.iter().zip(e).fold(BivariatePoly::constant(1.0), |acc, (&c, ei)| {
            let factor = if c == 1 { BivariatePoly::linear(-ei.x1, 1.0, 0.0) } else { BivariatePoly::linear(-ei.x2, 0.0, 1.0) };
            acc.mul(&factor)
        })
    }
}

/// Newton term of order `d`:
/// `sum_tau (int_[e_0..e_d] D^alpha(tau) f) (x - e)^tau`.
pub fn newton_term(f: &ScalarField, section: &LejaSection, d: usize, rule: &QuadratureRule) -> Result<BivariatePoly> {
    if section.d() < d + 1 {
        return Err(Error::InvalidParameter(format!("term {d} needs {} nodes, section has {}", d + 1, section.d())));
    }
    let e = &section.nodes()[..=d];
    let mut integrals = vec![None; d + 1];
    let mut out = BivariatePoly::zero(d);
    for tau in NewtonTau::all(d) {
        let alpha = tau.alpha();
        let c = match integrals[alpha[0]] {
            Some(c) => c,
            None => {
                f.partial(alpha, e[0])?;
                let c = simplex_integral(|x| f.partial(alpha, x).expect("checked above"), e, rule);
                integrals[alpha[0]] = Some(c);
                c
            }
        };
        out.add_scaled(&tau.monomial(&e[..d]), c);
    }
    Ok(out)
}

/// Largest relative gap between `K[Psi(A); f] o Psi` and `K[A; f o Psi]`
/// at 100 random disk points.
pub fn affine_invariance_discrepancy(f: &ScalarField, nodes: &NodeConfiguration, map: AffineMap, seed: u64) -> Result<f64> {
    if map.determinant().abs() < 1e-12 {
        return Err(Error::InvalidParameter("affine map is not invertible".into()));
    }
    let mapped = NodeConfiguration::new(nodes.points().iter().map(|&a| map.apply(a)).collect())?;
    let opts = BuildOptions::default();
    let outer = kergin_with(f, &mapped, &opts)?;
    let inner = kergin_with(&f.compose_affine(map), nodes, &opts)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut gap, mut scale) = (0.0f64, 1.0f64);
    for _ in 0..100 {
        let x = random_disk_point(&mut rng);
        let (l, r) = (outer.eval(map.apply(x)), inner.eval(x));
        gap = gap.max((l - r).abs());
        scale = scale.max(l.abs());
    }
    Ok(gap / scale)
}

/// Affine invariance of the Kergin operator to `1e-8` relative.
pub fn affine_invariance_check(f: &ScalarField, nodes: &NodeConfiguration, map: AffineMap, seed: u64) -> Result<bool> {
    Ok(affine_invariance_discrepancy(f, nodes, map, seed)? <= 1e-8)
}
