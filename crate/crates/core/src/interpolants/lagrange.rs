use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::geometry::PlanePoint;
use crate::polys::{product_derivatives, BivariatePoly, ComplexPoly};

use super::{check_order, NodeConfiguration};

const JET: usize = super::MAX_DIRECT_ORDER + 1;

/// The complex Lagrange cardinal `L_j(z) = prod_{m != j} (z - a_m) / (a_j - a_m)`.
#[derive(Clone, Debug)]
pub struct LagrangeCardinal {
    j: usize,
    others: Vec<Complex64>,
    scale: Complex64,
}

impl LagrangeCardinal {
    pub fn new(nodes: &NodeConfiguration, j: usize) -> Result<Self> {
        let a = nodes.points();
        if j >= a.len() {
            return Err(Error::InvalidParameter(format!("node index {j} out of range")));
        }
        let aj = a[j].to_complex();
        let mut denom = Complex64::new(1.0, 0.0);
        let mut others = Vec::with_capacity(a.len() - 1);
        for (m, am) in a.iter().enumerate().filter(|&(m, _)| m != j) {
            let z = am.to_complex();
            if z == aj {
                return Err(Error::CoincidentNodes(j.min(m), j.max(m)));
            }
            denom *= aj - z;
            others.push(z);
        }
        let scale = denom.inv();
        if !scale.is_finite() {
            return Err(Error::InvalidParameter(format!("Lagrange cardinal {j} is not representable")));
        }
        Ok(Self { j, others, scale })
    }

    pub fn index(&self) -> usize {
        self.j
    }

    /// `L_j` and its first `K - 1` complex derivatives at `x1 + i x2`.
    pub fn jet<const K: usize>(&self, x: PlanePoint) -> [Complex64; K] {
        let z = x.to_complex();
        let mut out: [Complex64; K] = product_derivatives(self.others.iter().map(|&r| z - r));
        for v in &mut out {
            *v *= self.scale;
        }
        out
    }

    pub fn complex_value(&self, x: PlanePoint) -> Complex64 {
        let [v] = self.jet::<1>(x);
        v
    }

    /// `P_j(x) = Re L_j(x1 + i x2)`
    pub fn value(&self, x: PlanePoint) -> f64 {
        self.complex_value(x).re
    }

    /// `D^(a,b) P_j = Re(i^b L_j^(a+b))`
    pub fn derivative(&self, alpha: [usize; 2], x: PlanePoint) -> Result<f64> {
        check_order(alpha)?;
        let jet = self.jet::<JET>(x);
        Ok(rotate_re(jet[alpha[0] + alpha[1]], alpha[1]))
    }

    pub fn complex_poly(&self) -> ComplexPoly {
        ComplexPoly::from_roots(&self.others).scale(self.scale)
    }

    pub fn poly(&self) -> BivariatePoly {
        self.complex_poly().real_part()
    }
}

/// `Re(i^b w)`
pub(crate) fn rotate_re(w: Complex64, b: usize) -> f64 {
    match b % 4 {
        0 => w.re,
        1 => -w.im,
        2 => -w.re,
        _ => w.im,
    }
}

/// `P_j` in monomial form.
pub fn build_p_j(nodes: &NodeConfiguration, j: usize) -> Result<BivariatePoly> {
    Ok(LagrangeCardinal::new(nodes, j)?.poly())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_disk_point;
    use crate::leja::canonical_leja;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn two_nodes() {
        let cfg = NodeConfiguration::new(vec![PlanePoint::new(1.0, 0.0), PlanePoint::new(-1.0, 0.0)]).unwrap();
        let p0 = build_p_j(&cfg, 0).unwrap();
        // (1 + x1) / 2
        assert!((p0.coeff(0, 0) - 0.5).abs() < 1e-16);
        assert!((p0.coeff(1, 0) - 0.5).abs() < 1e-16);
        assert!(p0.coeff(0, 1).abs() < 1e-16);
    }

    #[test]
    fn cardinal_property() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for d in [1, 3, 8, 16, 32, 64] {
            let cfg = NodeConfiguration::from_section(&canonical_leja(d).unwrap()).unwrap();
            let random = NodeConfiguration::new((0..d.min(12)).map(|_| random_disk_point(&mut rng)).collect()).unwrap();
            for cfg in [cfg, random] {
                for j in 0..cfg.len() {
                    let l = LagrangeCardinal::new(&cfg, j).unwrap();
                    for (m, &a) in cfg.points().iter().enumerate() {
                        let expected = if m == j { 1.0 } else { 0.0 };
                        assert!((l.value(a) - expected).abs() < 1e-9, "d={d} j={j} m={m}");
                    }
                }
            }
        }
    }

    #[test]
    fn derivatives_match_coefficients() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let cfg = NodeConfiguration::from_section(&canonical_leja(7).unwrap()).unwrap();
        for j in 0..7 {
            let l = LagrangeCardinal::new(&cfg, j).unwrap();
            let poly = l.poly();
            for _ in 0..10 {
                let x = random_disk_point(&mut rng);
                for alpha in [[0, 0], [1, 0], [0, 1], [2, 0], [1, 1], [0, 2], [3, 1], [0, 4]] {
                    let direct = l.derivative(alpha, x).unwrap();
                    let coeff = poly.derivative(alpha).eval(x);
                    assert!((direct - coeff).abs() < 1e-9 * (1.0 + direct.abs()), "{alpha:?}");
                }
            }
        }
        assert!(LagrangeCardinal::new(&cfg, 0).unwrap().derivative([3, 2], PlanePoint::ORIGIN).is_err());
    }
}
