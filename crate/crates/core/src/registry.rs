//! Named test functions for the experiments.
//!
//! | id | f | class |
//! |----|---|-------|
//! | `smooth-expcos` | `exp(x1) cos(x2)` | C-infinity |
//! | `runge2d` | `1 / (1 + 5 |x|^2)` | C-infinity |
//! | `c4-radial` | `|x - c|^5`, `c = (0.3, 0.2)` | C4 |
//! | `c5-radial` | `|x - c|^7` | C6 |
//! | `poly:<deg>` | seeded random polynomial of degree `deg` | polynomial |
//! | `poly-projector` | seeded random polynomial of the interpolant's degree | polynomial |
//!
//! C-infinity entries carry derivatives up to order 5, the radial entries up
//! to order 2.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::geometry::PlanePoint;
use crate::interpolants::InterpolantKind;
use crate::mean_value::{ScalarField, Smoothness};
use crate::polys::BivariatePoly;

/// Order of the registered derivatives of the smooth entries.
pub const SMOOTH_DERIVATIVE_ORDER: usize = 5;

/// Centre of the radial entries.
pub const RADIAL_CENTRE: PlanePoint = PlanePoint::new(0.3, 0.2);

/// Registered fixed ids; `poly:<deg>` is accepted in addition.
pub const FUNCTION_IDS: [&str; 5] = ["smooth-expcos", "runge2d", "c4-radial", "c5-radial", "poly-projector"];

/// Whether the field depends on the node count (and must be rebuilt per `d`).
pub fn depends_on_degree(id: &str) -> bool {
    id == "poly-projector"
}

/// Resolves a function id. `kind` and `d` are only used by `poly-projector`,
/// `seed` only by the polynomial families.
pub fn lookup(id: &str, kind: InterpolantKind, d: usize, seed: u64) -> Result<ScalarField> {
    match id {
        "smooth-expcos" => Ok(expcos()),
        "runge2d" => Ok(runge2d()),
        "c4-radial" => Ok(radial("c4-radial", 5, Smoothness::C(4))),
        "c5-radial" => Ok(radial("c5-radial", 7, Smoothness::C(6))),
        "poly-projector" => {
            let deg = kind.degree_bound(d);
            Ok(ScalarField::from_polynomial(id, random_polynomial(deg, seed.wrapping_add(d as u64))))
        }
        _ => match id.strip_prefix("poly:").map(str::parse::<usize>) {
            Some(Ok(deg)) => Ok(ScalarField::from_polynomial(id, random_polynomial(deg, seed))),
            _ => Err(Error::UnknownFunction(id.to_owned())),
        },
    }
}

/// Coefficients uniform in `[-1, 1]`, every monomial of total degree `<= deg`.
pub fn random_polynomial(deg: usize, seed: u64) -> BivariatePoly {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut p = BivariatePoly::zero(deg);
    for j in 0..=deg {
        for k in 0..=deg - j {
            p.set(j, k, rng.gen_range(-1.0..1.0));
        }
    }
    p
}

/// `cos(x + b pi / 2)` without rounding the shift.
fn shifted_cos(x: f64, b: usize) -> f64 {
    match b % 4 {
        0 => x.cos(),
        1 => -x.sin(),
        2 => -x.cos(),
        _ => x.sin(),
    }
}

/// `Re exp(z)`, with `D^(a,b) f = exp(x1) cos(x2 + b pi / 2)`.
pub fn expcos() -> ScalarField {
    ScalarField::new("smooth-expcos", Smoothness::Infinite, |x| x.x1.exp() * x.x2.cos())
        .with_gradient(|x| {
            let e = x.x1.exp();
            PlanePoint::new(e * x.x2.cos(), -e * x.x2.sin())
        })
        .with_derivatives(SMOOTH_DERIVATIVE_ORDER, |alpha, x| x.x1.exp() * shifted_cos(x.x2, alpha[1]))
}

/// `1 / (1 + 5 |x|^2)`; higher derivatives come from a truncated Taylor jet.
pub fn runge2d() -> ScalarField {
    ScalarField::new("runge2d", Smoothness::Infinite, |x| 1.0 / (1.0 + 5.0 * x.norm_sqr()))
        .with_gradient(|x| {
            let q = 1.0 + 5.0 * x.norm_sqr();
            x * (-10.0 / (q * q))
        })
        .with_derivatives(SMOOTH_DERIVATIVE_ORDER, |alpha, x| {
            let n = alpha[0] + alpha[1];
            let jet = runge_jet(x, n);
            let fact = |k: usize| (1..=k).map(|i| i as f64).product::<f64>();
            jet.coeff(alpha[0], alpha[1]) * fact(alpha[0]) * fact(alpha[1])
        })
}

/// Taylor polynomial of degree `n` of `1 / (1 + 5 |x0 + h|^2)` in `h`.
fn runge_jet(x0: PlanePoint, n: usize) -> BivariatePoly {
    // 1 + 5|x0 + h|^2 = c (1 + u), u = (10 <x0, h> + 5 |h|^2) / c
    let c = 1.0 + 5.0 * x0.norm_sqr();
    let mut u = BivariatePoly::zero(2);
    u.set(1, 0, 10.0 * x0.x1 / c);
    u.set(0, 1, 10.0 * x0.x2 / c);
    u.set(2, 0, 5.0 / c);
    u.set(0, 2, 5.0 / c);
    let minus_u = u.scale(-1.0);
    // 1 / (1 + u) = sum_k (-u)^k, truncated; u has no constant term
    let mut sum = BivariatePoly::constant(1.0);
    let mut power = BivariatePoly::constant(1.0);
    for _ in 0..n {
        power = power.mul_truncated(&minus_u, n);
        sum = sum.add(&power);
    }
    sum.scale(1.0 / c)
}

/// `|x - c|^p` for odd `p >= 5`, derivatives up to order 2.
fn radial(name: &str, p: i32, smoothness: Smoothness) -> ScalarField {
    let c = RADIAL_CENTRE;
    let pf = p as f64;
    ScalarField::new(name, smoothness, move |x| (x - c).norm().powi(p))
        .with_gradient(move |x| {
            let y = x - c;
            y * (pf * y.norm().powi(p - 2))
        })
        .with_derivatives(2, move |alpha, x| {
            let y = x - c;
            let r = y.norm();
            let yc = [y.x1, y.x2];
            match alpha {
                [1, 0] | [0, 1] => pf * r.powi(p - 2) * yc[alpha[1]],
                _ => {
                    // d_i d_j r^p = p r^(p-2) delta_ij + p (p - 2) r^(p-4) y_i y_j
                    let (i, j) = if alpha[0] == 2 { (0, 0) } else if alpha[1] == 2 { (1, 1) } else { (0, 1) };
                    let delta = if i == j { 1.0 } else { 0.0 };
                    pf * r.powi(p - 2) * delta + pf * (pf - 2.0) * r.powi(p - 4) * yc[i] * yc[j]
                }
            }
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::random_disk_point;

    fn fd_partial(f: &ScalarField, alpha: [usize; 2], x: PlanePoint, h: f64) -> f64 {
        if alpha == [0, 0] {
            return f.value(x);
        }
        let (step, lower) = if alpha[0] > 0 {
            (PlanePoint::new(h, 0.0), [alpha[0] - 1, alpha[1]])
        } else {
            (PlanePoint::new(0.0, h), [alpha[0], alpha[1] - 1])
        };
        (f.partial(lower, x + step).unwrap() - f.partial(lower, x - step).unwrap()) / (2.0 * h)
    }

    #[test]
    fn registered_gradients_match_differences() {
        for id in ["smooth-expcos", "runge2d", "c4-radial", "c5-radial", "poly:6", "poly-projector"] {
            let f = lookup(id, InterpolantKind::Kergin, 8, 1).unwrap();
            assert!(f.check_gradient(7).is_ok(), "{id}");
        }
    }

    #[test]
    fn higher_derivatives_match_differences() {
        let mut rng = ChaCha8Rng::seed_from_u64(71);
        for f in [expcos(), runge2d(), radial("c5", 7, Smoothness::C(6))] {
            let order = f.derivative_order();
            for _ in 0..10 {
                let x = random_disk_point(&mut rng);
                for n in 1..=order {
                    for a in 0..=n {
                        let alpha = [a, n - a];
                        let exact = f.partial(alpha, x).unwrap();
                        let fd = fd_partial(&f, alpha, x, 1e-5);
                        assert!((exact - fd).abs() < 1e-5 * (1.0 + exact.abs()), "{} {alpha:?} {exact} {fd}", f.name());
                    }
                }
            }
        }
    }

    #[test]
    fn expcos_derivative_cycle() {
        let f = expcos();
        let x = PlanePoint::new(0.4, -0.3);
        assert!((f.partial([0, 2], x).unwrap() + f.value(x)).abs() < 1e-15);
        assert!((f.partial([3, 0], x).unwrap() - f.value(x)).abs() < 1e-15);
        assert!((f.partial([0, 4], x).unwrap() - f.value(x)).abs() < 1e-15);
    }

    #[test]
    fn lookup_errors_and_polynomials() {
        assert!(matches!(lookup("nope", InterpolantKind::Kergin, 4, 0), Err(Error::UnknownFunction(_))));
        assert!(lookup("poly:x", InterpolantKind::Kergin, 4, 0).is_err());
        let p = lookup("poly-projector", InterpolantKind::Hakopian, 7, 3).unwrap();
        assert_eq!(p.poly_degree(), Some(5));
        let a = lookup("poly:4", InterpolantKind::Kergin, 2, 9).unwrap();
        let b = lookup("poly:4", InterpolantKind::Hakopian, 30, 9).unwrap();
        let x = PlanePoint::new(0.1, 0.2);
        assert_eq!(a.value(x), b.value(x));
        assert!(depends_on_degree("poly-projector") && !depends_on_degree("runge2d"));
        assert_eq!(lookup("c4-radial", InterpolantKind::Kergin, 2, 0).unwrap().smoothness(), Smoothness::C(4));
    }
}
