use std::sync::OnceLock;

use num_complex::Complex64;
use rayon::prelude::*;

use crate::error::Result;
use crate::geometry::PlanePoint;
use crate::mean_value::{perp_directional_segment_integral, GradientSource, ScalarField};
use crate::polys::BivariatePoly;

use super::lagrange::rotate_re;
use super::{check_order, ridge_jet2, BuildOptions, ChordPair, Interpolant, InterpolantKind, LagrangeCardinal, NeumaierSum, NodeConfiguration};

const JET: usize = super::MAX_DIRECT_ORDER + 2;

/// `K[A; f]` kept as node values, Lagrange cardinals and chord terms.
#[derive(Debug)]
pub struct KerginInterpolant {
    nodes: NodeConfiguration,
    values: Vec<f64>,
    cardinals: Vec<LagrangeCardinal>,
    pairs: Vec<ChordPair>,
    weights: Vec<f64>,
    gradient_source: Option<GradientSource>,
    poly: OnceLock<BivariatePoly>,
}

pub fn kergin(f: &ScalarField, nodes: &NodeConfiguration) -> Result<KerginInterpolant> {
    kergin_with(f, nodes, &BuildOptions::default())
}

pub fn kergin_with(f: &ScalarField, nodes: &NodeConfiguration, options: &BuildOptions) -> Result<KerginInterpolant> {
    nodes.require_general_position()?;
    let a = nodes.points();
    let d = a.len();
    let rule = options.rule_for(f);
    let gradient_source = if d >= 2 { Some(f.gradient_source(options.allow_fd)?) } else { None };
    let values: Vec<f64> = a.iter().map(|&x| f.value(x)).collect();
    let cardinals = (0..d).map(|j| LagrangeCardinal::new(nodes, j)).collect::<Result<Vec<_>>>()?;
    let index: Vec<(usize, usize)> = (0..d).flat_map(|s| (s + 1..d).map(move |t| (s, t))).collect();
    let built: Vec<(ChordPair, f64)> = index
        .par_iter()
        .map(|&(s, t)| {
            let pair = ChordPair::new(nodes, s, t)?;
            // int_[a_s, a_t] D_{(a_s - a_t)^perp} f, the same direction as in P_st.
            // With the opposite direction linear fields are reproduced with the
            // wrong sign already for two nodes.
            let w = perp_directional_segment_integral(f, a[t], a[s], &rule, options.allow_fd)?;
            Ok((pair, w))
        })
        .collect::<Result<_>>()?;
    let (pairs, weights) = built.into_iter().unzip();
    Ok(KerginInterpolant { nodes: nodes.clone(), values, cardinals, pairs, weights, gradient_source, poly: OnceLock::new() })
}

impl KerginInterpolant {
    /// `f(a_j)`
    pub fn node_values(&self) -> &[f64] {
        &self.values
    }

    pub fn cardinals(&self) -> &[LagrangeCardinal] {
        &self.cardinals
    }

    pub fn pairs(&self) -> &[ChordPair] {
        &self.pairs
    }

    /// `int_[a_s, a_t] D_{(a_s - a_t)^perp} f`, aligned with [`Self::pairs`].
    pub fn pair_weights(&self) -> &[f64] {
        &self.weights
    }

    fn lagrange_jet<const K: usize>(&self, x: PlanePoint) -> [Complex64; K] {
        let mut acc = [Complex64::new(0.0, 0.0); K];
        for (l, &fj) in self.cardinals.iter().zip(&self.values) {
            let jet = l.jet::<K>(x);
            for k in 0..K {
                acc[k] += jet[k] * fj;
            }
        }
        acc
    }
}

impl Interpolant for KerginInterpolant {
    fn kind(&self) -> InterpolantKind {
        InterpolantKind::Kergin
    }

    fn nodes(&self) -> &NodeConfiguration {
        &self.nodes
    }

    fn eval(&self, x: PlanePoint) -> f64 {
        let mut sum = NeumaierSum::default();
        let [l] = self.lagrange_jet::<1>(x);
        sum.add(l.re);
        for (pair, &w) in self.pairs.iter().zip(&self.weights) {
            sum.add(w * pair.p_value(x));
        }
        sum.value()
    }

    fn derivative(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64> {
        check_order(alpha)?;
        let k = alpha[0] + alpha[1];
        let mut sum = NeumaierSum::default();
        let jet = self.lagrange_jet::<JET>(x);
        sum.add(rotate_re(jet[k], alpha[1]));
        for (pair, &w) in self.pairs.iter().zip(&self.weights) {
            let v = pair.direction();
            let h = pair.h_jet::<JET>(v.inner(x));
            let vpow = v.x1.powi(alpha[0] as i32) * v.x2.powi(alpha[1] as i32);
            sum.add(w * h[k] * vpow * pair.p_scale());
        }
        Ok(sum.value())
    }

    fn jet2(&self, x: PlanePoint) -> [f64; 6] {
        let [l0, l1, l2] = self.lagrange_jet::<3>(x);
        let mut sums = [NeumaierSum::default(); 6];
        for (s, v) in sums.iter_mut().zip([l0.re, l1.re, -l1.im, l2.re, -l2.im, -l2.re]) {
            s.add(v);
        }
        for (pair, &w) in self.pairs.iter().zip(&self.weights) {
            let v = pair.direction();
            let c = w * pair.p_scale();
            for (s, term) in sums.iter_mut().zip(ridge_jet2(pair.h_jet::<3>(v.inner(x)), v)) {
                s.add(c * term);
            }
        }
        sums.map(NeumaierSum::value)
    }

    fn poly(&self) -> &BivariatePoly {
        self.poly.get_or_init(|| {
            let n = self.degree_bound();
            let mut out = BivariatePoly::zero(n);
            for (l, &fj) in self.cardinals.iter().zip(&self.values) {
                out.add_scaled(&l.poly(), fj);
            }
            for (pair, &w) in self.pairs.iter().zip(&self.weights) {
                out.add_scaled(&pair.p_poly(), w);
            }
            out
        })
    }

    fn gradient_source(&self) -> Option<GradientSource> {
        self.gradient_source
    }
}
