use std::sync::OnceLock;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::geometry::PlanePoint;
use crate::mean_value::{segment_integral, GradientSource, ScalarField};
use crate::polys::BivariatePoly;

use super::{check_order, ridge_jet2, BuildOptions, ChordPair, Interpolant, InterpolantKind, NeumaierSum, NodeConfiguration};

const JET: usize = super::MAX_DIRECT_ORDER + 2;

/// `H[A; f]` kept as chord terms.
#[derive(Debug)]
pub struct HakopianInterpolant {
    nodes: NodeConfiguration,
    pairs: Vec<ChordPair>,
    weights: Vec<f64>,
    poly: OnceLock<BivariatePoly>,
}

pub fn hakopian(f: &ScalarField, nodes: &NodeConfiguration) -> Result<HakopianInterpolant> {
    hakopian_with(f, nodes, &BuildOptions::default())
}

pub fn hakopian_with(f: &ScalarField, nodes: &NodeConfiguration, options: &BuildOptions) -> Result<HakopianInterpolant> {
    let d = nodes.len();
    if d < 2 {
        return Err(Error::InvalidParameter("Hakopian interpolation needs at least two nodes".into()));
    }
    nodes.require_general_position()?;
    let a = nodes.points();
    let rule = options.rule_for(f);
    let index: Vec<(usize, usize)> = (0..d).flat_map(|s| (s + 1..d).map(move |t| (s, t))).collect();
    let built: Vec<(ChordPair, f64)> = index
        .par_iter()
        .map(|&(s, t)| Ok((ChordPair::new(nodes, s, t)?, segment_integral(|x| f.value(x), a[s], a[t], &rule))))
        .collect::<Result<_>>()?;
    let (pairs, weights) = built.into_iter().unzip();
    Ok(HakopianInterpolant { nodes: nodes.clone(), pairs, weights, poly: OnceLock::new() })
}

impl HakopianInterpolant {
    pub fn pairs(&self) -> &[ChordPair] {
        &self.pairs
    }

    /// `int_[a_s, a_t] f`, aligned with [`Self::pairs`].
    pub fn pair_weights(&self) -> &[f64] {
        &self.weights
    }
}

impl Interpolant for HakopianInterpolant {
    fn kind(&self) -> InterpolantKind {
        InterpolantKind::Hakopian
    }

    fn nodes(&self) -> &NodeConfiguration {
        &self.nodes
    }

    fn eval(&self, x: PlanePoint) -> f64 {
        let mut sum = NeumaierSum::default();
        for (pair, &w) in self.pairs.iter().zip(&self.weights) {
            sum.add(w * pair.q_value(x));
        }
        sum.value()
    }

    fn derivative(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64> {
        check_order(alpha)?;
        let k = alpha[0] + alpha[1];
        let mut sum = NeumaierSum::default();
        for (pair, &w) in self.pairs.iter().zip(&self.weights) {
            let v = pair.direction();
            let h = pair.h_jet::<JET>(v.inner(x));
            let vpow = v.x1.powi(alpha[0] as i32) * v.x2.powi(alpha[1] as i32);
            sum.add(w * h[k + 1] * vpow * pair.q_scale());
        }
        Ok(sum.value())
    }

    fn jet2(&self, x: PlanePoint) -> [f64; 6] {
        let mut sums = [NeumaierSum::default(); 6];
        for (pair, &w) in self.pairs.iter().zip(&self.weights) {
            let v = pair.direction();
            let c = w * pair.q_scale();
            let [_, g0, g1, g2] = pair.h_jet::<4>(v.inner(x));
            for (s, term) in sums.iter_mut().zip(ridge_jet2([g0, g1, g2], v)) {
                s.add(c * term);
            }
        }
        sums.map(NeumaierSum::value)
    }

    fn poly(&self) -> &BivariatePoly {
        self.poly.get_or_init(|| {
            let mut out = BivariatePoly::zero(self.degree_bound());
            for (pair, &w) in self.pairs.iter().zip(&self.weights) {
                out.add_scaled(&pair.q_poly(), w);
            }
            out
        })
    }

    fn gradient_source(&self) -> Option<GradientSource> {
        None
    }
}
