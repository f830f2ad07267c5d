//! Named kernels: Dirichlet (summed and closed form), rect, sinc, step,
//! finite Dirac combs and the discrete sifting sum.
//!
//! Every jump takes the half value: rect edges, step(0) and segment
//! junctions all land midway between the one-sided limits.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{FourierError, Result};
use crate::signal::{Domain, Impulse, ImpulseTrain};

/// 1/2 + sum_{m=1}^{i} cos(m theta), summed term by term.
pub fn dirichlet_sum(i: usize, theta: f64) -> f64 {
    0.5 + (1..=i).map(|m| (m as f64 * theta).cos()).sum::<f64>()
}

/// sin((i + 1/2) theta) / (2 sin(theta/2)), with the removable singularity
/// at multiples of 2pi returning its limit i + 1/2.
pub fn dirichlet_closed(i: usize, theta: f64) -> f64 {
    let den = (0.5 * theta).sin();
    if den.abs() < 1e-12 {
        return i as f64 + 0.5;
    }
    ((i as f64 + 0.5) * theta).sin() / (2.0 * den)
}

/// Unit-height rectangle of the given width centred on zero.
pub fn rect(t: f64, width: f64) -> f64 {
    let edge = 0.5 * width;
    let a = t.abs();
    if a < edge {
        1.0
    } else if a == edge {
        0.5
    } else {
        0.0
    }
}

/// Normalised sinc, sin(pi u)/(pi u).
///
/// Exact at the integers: 1 at zero and 0 at every other integer.
pub fn sinc(u: f64) -> f64 {
    if u == 0.0 {
        return 1.0;
    }
    if u.fract() == 0.0 {
        return 0.0;
    }
    let x = PI * u;
    x.sin() / x
}

/// T sinc(T u): the spectrum of a rect of width T.
pub fn sinc_scaled(u: f64, width: f64) -> f64 {
    width * sinc(width * u)
}

/// Heaviside step with step(0) = 1/2.
pub fn step(x: f64) -> f64 {
    if x > 0.0 {
        1.0
    } else if x < 0.0 {
        0.0
    } else {
        0.5
    }
}

/// `count` impulses at 0, period, ..., (count-1)*period.
///
/// Infinite combs are represented by explicit truncation; the count is part
/// of every caller's contract. Use weight 1/period for the normalised
/// sampling comb.
pub fn make_comb(
    period: f64,
    count: usize,
    weight: Complex64,
    domain: Domain,
) -> Result<ImpulseTrain> {
    if !(period > 0.0 && period.is_finite()) {
        return Err(FourierError::param(format!(
            "comb period must be positive, got {period}"
        )));
    }
    if count == 0 {
        return Err(FourierError::param("comb needs at least one impulse"));
    }
    let impulses = (0..count)
        .map(|n| Impulse {
            location: n as f64 * period,
            weight,
        })
        .collect();
    ImpulseTrain::new(impulses, domain)
}

/// Discrete sifting: sum of weight * map(location) over the train.
pub fn sift<F>(train: &ImpulseTrain, map: F) -> Complex64
where
    F: Fn(f64) -> Complex64,
{
    train
        .impulses()
        .iter()
        .map(|imp| imp.weight * map(imp.location))
        .sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transforms::{integrate_real, QuadratureSpec};
    use proptest::prelude::*;

    fn one() -> Complex64 {
        Complex64::new(1.0, 0.0)
    }

    #[test]
    fn dirichlet_examples() {
        assert_eq!(dirichlet_sum(0, 1.234), 0.5);
        assert_eq!(dirichlet_sum(3, 0.0), 3.5);
        assert!((dirichlet_sum(3, 0.5) - dirichlet_closed(3, 0.5)).abs() <= 1e-12);
        assert_eq!(dirichlet_closed(7, 0.0), 7.5);
        assert_eq!(dirichlet_closed(7, 2.0 * PI), 7.5);
    }

    #[test]
    fn dirichlet_integrates_to_pi() {
        let spec = QuadratureSpec::new(-PI, PI).with_panels(64);
        for i in [0, 1, 5, 20] {
            let r = integrate_real(|a| dirichlet_closed(i, a), &spec).unwrap();
            assert!((r.value.re - PI).abs() <= 1e-6, "i={i}: {}", r.value.re);
        }
    }

    #[test]
    fn rect_examples() {
        assert_eq!(rect(0.0, 1.0), 1.0);
        assert_eq!(rect(0.5, 1.0), 0.5);
        assert_eq!(rect(-0.5, 1.0), 0.5);
        assert_eq!(rect(2.0, 1.0), 0.0);
    }

    #[test]
    fn sinc_examples() {
        assert_eq!(sinc(0.0), 1.0);
        for k in [-5.0, -1.0, 1.0, 2.0, 1000.0] {
            assert_eq!(sinc(k), 0.0);
        }
        assert!((sinc(0.5) - 2.0 / PI).abs() < 1e-15);
        assert_eq!(sinc_scaled(0.0, 3.0), 3.0);
        let spec = QuadratureSpec::new(-40.0, 40.0).with_panels(160);
        let area = integrate_real(sinc, &spec).unwrap().value.re;
        assert!((area - 1.0).abs() <= 1e-2, "{area}");
    }

    #[test]
    fn step_examples() {
        assert_eq!(step(-1.0), 0.0);
        assert_eq!(step(1.0), 1.0);
        assert_eq!(step(0.0), 0.5);
        assert_eq!(step(-0.0), 0.5);
    }

    #[test]
    fn comb_construction() {
        let c = make_comb(1.0, 3, one(), Domain::Time).unwrap();
        assert_eq!(c.locations().collect::<Vec<_>>(), vec![0.0, 1.0, 2.0]);
        let c = make_comb(0.25, 4, Complex64::new(4.0, 0.0), Domain::Time).unwrap();
        assert!(c
            .impulses()
            .iter()
            .all(|i| i.weight == Complex64::new(1.0 / 0.25, 0.0)));
        let c = make_comb(2.0, 1, one(), Domain::Frequency).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c.impulses()[0].location, 0.0);
        assert!(make_comb(0.0, 3, one(), Domain::Time).is_err());
        assert!(make_comb(1.0, 0, one(), Domain::Time).is_err());
    }

    #[test]
    fn sift_examples() {
        let d = ImpulseTrain::delta(2.0, one(), Domain::Time).unwrap();
        assert_eq!(
            sift(&d, |t| Complex64::new(t * t, 0.0)),
            Complex64::new(4.0, 0.0)
        );
        let d0 = ImpulseTrain::delta(0.0, one(), Domain::Time).unwrap();
        let f = |t: f64| Complex64::new((t + 0.3).cos(), t.sin());
        assert_eq!(sift(&d0, f), f(0.0));
        let c = make_comb(1.0, 3, one(), Domain::Time).unwrap();
        assert_eq!(sift(&c, |_| one()), Complex64::new(3.0, 0.0));
    }

    #[test]
    fn sampled_comb_has_comb_spectrum() {
        let x: Vec<Complex64> = (0..16)
            .map(|n| {
                if n % 4 == 0 {
                    one()
                } else {
                    Complex64::new(0.0, 0.0)
                }
            })
            .collect();
        let s = crate::transforms::dft_slice(&x);
        for (k, z) in s.iter().enumerate() {
            let want = if k % 4 == 0 { 4.0 } else { 0.0 };
            assert!((z - want).norm() <= 1e-12, "bin {k}: {z}");
        }
    }

    proptest! {
        #[test]
        fn dirichlet_forms_agree(i in 0usize..60, theta in -10.0f64..10.0) {
            prop_assert!((dirichlet_sum(i, theta) - dirichlet_closed(i, theta)).abs() <= 1e-10);
        }

        #[test]
        fn rect_is_even_and_step_complements(x in -10.0f64..10.0, w in 0.01f64..10.0) {
            prop_assert_eq!(rect(x, w), rect(-x, w));
            prop_assert_eq!(step(x) + step(-x), 1.0);
        }

        #[test]
        fn sift_is_linear(
            w1 in -3.0f64..3.0, w2 in -3.0f64..3.0, a in -2.0f64..2.0, b in -2.0f64..2.0,
        ) {
            let t1 = ImpulseTrain::new(vec![
                Impulse { location: 0.5, weight: Complex64::new(w1, 0.0) },
                Impulse { location: 1.5, weight: Complex64::new(w2, 1.0) },
            ], Domain::Time).unwrap();
            let f = |t: f64| Complex64::new(t.sin(), t);
            let g = |t: f64| Complex64::new(t * t, -1.0);
            let lhs = sift(&t1, |t| f(t) * a + g(t) * b);
            let rhs = sift(&t1, f) * a + sift(&t1, g) * b;
            prop_assert!((lhs - rhs).norm() < 1e-12);
            let doubled = ImpulseTrain::new(
                t1.impulses().iter().map(|i| Impulse { location: i.location, weight: i.weight * a }).collect(),
                Domain::Time,
            ).unwrap();
            prop_assert!((sift(&doubled, f) - sift(&t1, f) * a).norm() < 1e-12);
        }
    }
}
