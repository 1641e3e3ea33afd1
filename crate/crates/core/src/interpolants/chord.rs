use crate::error::{Error, Result};
use crate::geometry::PlanePoint;
use crate::polys::{monic_from_roots, product_derivatives, BivariatePoly, SignLogValue, UnivariatePoly};

use super::{check_order, NodeConfiguration};

/// Tolerance on `|<v, a_s - a_m>| / (|v| |a_s - a_m|)` below which the
/// chord denominator is treated as zero.
const DENOMINATOR_TOL: f64 = 1e-12;

const JET: usize = super::MAX_DIRECT_ORDER + 2;

/// Everything needed to evaluate `h_st`, `P_st` and `Q_st` for one pair.
#[derive(Clone, Debug)]
pub struct ChordPair {
    s: usize,
    t: usize,
    direction: PlanePoint,
    anchor: f64,
    roots: Vec<f64>,
    chord_sqr: f64,
    h_prime_anchor: SignLogValue,
    p_scale: f64,
    q_scale: f64,
}

impl ChordPair {
    pub fn new(nodes: &NodeConfiguration, s: usize, t: usize) -> Result<Self> {
        let a = nodes.points();
        let d = a.len();
        if s == t || s >= d || t >= d {
            return Err(Error::InvalidParameter(format!("invalid chord ({s}, {t}) for {d} nodes")));
        }
        let direction = (a[s] - a[t]).perp();
        let anchor = direction.inner(a[s]);
        let roots: Vec<f64> = (0..d).filter(|&m| m != s).map(|m| direction.inner(a[m])).collect();
        // h'(<v, a_s>) = prod_{m != s, t} <v, a_s - a_m>
        let mut factors = Vec::with_capacity(d.saturating_sub(2));
        for m in (0..d).filter(|&m| m != s && m != t) {
            let e = a[s] - a[m];
            let f = direction.inner(e);
            if f.abs() <= DENOMINATOR_TOL * direction.norm() * e.norm() {
                return Err(Error::VanishingDenominator { s, t });
            }
            factors.push(f);
        }
        let h_prime_anchor = SignLogValue::product(factors.iter().copied());
        let chord_sqr = (a[s] - a[t]).norm_sqr();
        let p_scale = (h_prime_anchor * SignLogValue::from_f64(chord_sqr)).recip().to_f64();
        let q_scale = h_prime_anchor.recip().to_f64();
        if !p_scale.is_finite() || !q_scale.is_finite() || q_scale == 0.0 {
            return Err(Error::VanishingDenominator { s, t });
        }
        Ok(Self { s, t, direction, anchor, roots, chord_sqr, h_prime_anchor, p_scale, q_scale })
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// `v = (a_s - a_t)^perp`
    pub fn direction(&self) -> PlanePoint {
        self.direction
    }

    /// `<v, a_s>`, which is also `<v, a_t>`.
    pub fn anchor(&self) -> f64 {
        self.anchor
    }

    /// `<v, a_m>` for `m != s`, in node order.
    pub fn roots(&self) -> &[f64] {
        &self.roots
    }

    pub fn chord_sqr(&self) -> f64 {
        self.chord_sqr
    }

    /// `h_st'(<v, a_s>)`
    pub fn h_prime_anchor(&self) -> SignLogValue {
        self.h_prime_anchor
    }

    /// `1 / (|a_s - a_t|^2 h_st'(<v, a_s>))`
    pub fn p_scale(&self) -> f64 {
        self.p_scale
    }

    /// `1 / h_st'(<v, a_s>)`
    pub fn q_scale(&self) -> f64 {
        self.q_scale
    }

    /// `<v, x>`
    pub fn project(&self, x: PlanePoint) -> f64 {
        self.direction.inner(x)
    }

    /// `h_st` and its first `K - 1` derivatives at `w`.
    pub fn h_jet<const K: usize>(&self, w: f64) -> [f64; K] {
        product_derivatives(self.roots.iter().map(|&r| w - r))
    }

    pub fn p_value(&self, x: PlanePoint) -> f64 {
        let [h] = self.h_jet::<1>(self.project(x));
        h * self.p_scale
    }

    pub fn q_value(&self, x: PlanePoint) -> f64 {
        let [_, h1] = self.h_jet::<2>(self.project(x));
        h1 * self.q_scale
    }

    fn direction_power(&self, alpha: [usize; 2]) -> f64 {
        self.direction.x1.powi(alpha[0] as i32) * self.direction.x2.powi(alpha[1] as i32)
    }

    /// `D^alpha P_st(x) = h^(|alpha|)(<v, x>) v^alpha / (|a_s - a_t|^2 h'(<v, a_s>))`
    pub fn p_derivative(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64> {
        check_order(alpha)?;
        let jet = self.h_jet::<JET>(self.project(x));
        Ok(jet[alpha[0] + alpha[1]] * self.direction_power(alpha) * self.p_scale)
    }

    pub fn q_derivative(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64> {
        check_order(alpha)?;
        let jet = self.h_jet::<JET>(self.project(x));
        Ok(jet[alpha[0] + alpha[1] + 1] * self.direction_power(alpha) * self.q_scale)
    }

    /// Monic `h_st` in monomial form.
    pub fn h_poly(&self) -> UnivariatePoly {
        monic_from_roots(&self.roots)
    }

    pub fn p_poly(&self) -> BivariatePoly {
        self.h_poly().compose_linear(self.direction.x1, self.direction.x2).scale(self.p_scale)
    }

    pub fn q_poly(&self) -> BivariatePoly {
        let q = self.h_poly().derivative().compose_linear(self.direction.x1, self.direction.x2).scale(self.q_scale);
        // h' has degree d - 2
        let n = self.roots.len().saturating_sub(1);
        truncate(&q, n)
    }
}

fn truncate(p: &BivariatePoly, n: usize) -> BivariatePoly {
    if p.degree_bound() <= n {
        return p.clone();
    }
    let mut out = BivariatePoly::zero(n);
    for (j, k, c) in p.terms() {
        if j + k <= n {
            out.set(j, k, c);
        }
    }
    out
}

/// `h_st` as a monic univariate polynomial of degree `d - 1`.
pub fn build_h_st(nodes: &NodeConfiguration, s: usize, t: usize) -> Result<UnivariatePoly> {
    nodes.require_general_position()?;
    Ok(ChordPair::new(nodes, s, t)?.h_poly())
}

fn ordered_pair(nodes: &NodeConfiguration, s: usize, t: usize) -> Result<ChordPair> {
    if s >= t {
        return Err(Error::InvalidParameter(format!("pair ({s}, {t}) must satisfy s < t")));
    }
    nodes.require_general_position()?;
    ChordPair::new(nodes, s, t)
}

/// `P_st` in monomial form.
pub fn build_p_st(nodes: &NodeConfiguration, s: usize, t: usize) -> Result<BivariatePoly> {
    Ok(ordered_pair(nodes, s, t)?.p_poly())
}

/// `Q_st` in monomial form.
pub fn build_q_st(nodes: &NodeConfiguration, s: usize, t: usize) -> Result<BivariatePoly> {
    Ok(ordered_pair(nodes, s, t)?.q_poly())
}
