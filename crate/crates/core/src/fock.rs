//! Bargmann-Radon transform on the Segal-Bargmann-Fock space, restricted to
//! polynomial elements. The Fock inner product is computed as the Fischer
//! product.

use std::collections::BTreeMap;

use num::{BigRational, Complex};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::ball::{kernel_arguments, plane_wave};
use crate::bipoly::{fischer, BiPoly, Monomial};
use crate::constants::{gamma_pq, holomorphic_dual_factor, mu_p, pochhammer_int};
use crate::error::{Error, Result};
use crate::geometry::{sample_stiefel_with, StiefelTuple};
use crate::montecarlo::{estimate, Estimate};
use crate::projection::ProjectionResult;
use crate::scalar::{Scalar, C64};

/// A holomorphic polynomial viewed as an element of the Fock space.
#[derive(Clone, Debug, PartialEq)]
pub struct FockElement<S: Scalar> {
    poly: BiPoly<S>,
}

pub type FockProjection<S> = ProjectionResult<u32, S, FockElement<S>>;

impl<S: Scalar> FockElement<S> {
    pub fn new(poly: BiPoly<S>) -> Result<Self> {
        if !poly.is_holomorphic() {
            let residual = poly
                .terms()
                .filter(|(m, _)| m.beta.total() > 0)
                .map(|(_, c)| c.magnitude())
                .fold(0.0, f64::max);
            return Err(Error::contract("Fock elements cannot contain zbar", residual));
        }
        Ok(FockElement { poly })
    }

    pub fn zero(n: usize) -> Self {
        FockElement { poly: BiPoly::zero(n) }
    }

    pub fn n(&self) -> usize {
        self.poly.n()
    }

    pub fn poly(&self) -> &BiPoly<S> {
        &self.poly
    }

    pub fn into_poly(self) -> BiPoly<S> {
        self.poly
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        Ok(FockElement {
            poly: self.poly.add(&other.poly)?,
        })
    }

    pub fn scale(&self, c: &S) -> Self {
        FockElement {
            poly: self.poly.scale(c),
        }
    }

    /// Scales every homogeneous component of degree `p` by `f(p)`.
    pub fn scale_degrees(&self, f: impl Fn(u32) -> BigRational) -> Self {
        FockElement {
            poly: self.poly.map_terms(|m| S::from_rational(&f(m.alpha.total()))),
        }
    }
}

/// Fock inner product, conjugate-linear in the first argument.
pub fn fock_inner<S: Scalar>(p: &FockElement<S>, q: &FockElement<S>) -> Result<S> {
    fischer(&p.poly, &q.poly)
}

/// `<z, conj(s+t)>^p`.
pub fn entire_plane_wave<S: Scalar>(tuple: &StiefelTuple<S>, p: u32) -> FockElement<S> {
    FockElement {
        poly: plane_wave(tuple, p, 0),
    }
}

fn check_points(n: usize, z: &[C64], w: &[C64]) -> Result<()> {
    for v in [z, w] {
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: v.len(),
            });
        }
    }
    Ok(())
}

/// `exp(<z, conj(s+t)> <wbar, s+t> / 2)`.
pub fn bargmann_kernel(tuple: &StiefelTuple<C64>, z: &[C64], w: &[C64]) -> Result<C64> {
    check_points(tuple.n(), z, w)?;
    let (x, _) = kernel_arguments(tuple, z, w)?;
    Ok((x / 2.0).exp())
}

/// `sum_{p <= terms} f_p(z) conj(f_p(w)) / mu_p`.
pub fn bargmann_kernel_series(tuple: &StiefelTuple<C64>, z: &[C64], w: &[C64], terms: u32) -> Result<C64> {
    check_points(tuple.n(), z, w)?;
    let (x, _) = kernel_arguments(tuple, z, w)?;
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    for p in 1..=terms {
        term *= x / (2.0 * p as f64);
        sum += term;
    }
    Ok(sum)
}

/// Orthogonal projection onto the closed span of the entire plane waves of
/// `tuple`; coefficient `p` is `<f_p, f>_F / mu_p`.
pub fn bargmann_radon<S: Scalar>(f: &FockElement<S>, tuple: &StiefelTuple<S>) -> Result<FockProjection<S>> {
    let n = tuple.n();
    if f.n() != n {
        return Err(Error::Dimension {
            expected: n,
            got: f.n(),
        });
    }
    let mut coefficients = BTreeMap::new();
    let mut reconstructed = FockElement::zero(n);
    let scale = f.poly.magnitude();
    let degrees: Vec<u32> = f.poly.bidegree_split().keys().map(|(p, _)| *p).collect();
    for p in degrees {
        let wave = entire_plane_wave(tuple, p);
        let mu = S::from_rational(&mu_p(p));
        let c = fock_inner(&wave, f)?.times(&mu.inverse().expect("positive"));
        if crate::ball::transform::negligible(&c, scale) {
            continue;
        }
        reconstructed = reconstructed.add(&wave.scale(&c))?;
        coefficients.insert(p, c);
    }
    Ok(ProjectionResult {
        coefficients,
        reconstructed,
    })
}

/// Tuple-averaged dual of the projection: degree `p` scaled by
/// `Gamma(n) Gamma(p+1) / Gamma(n+p)`.
pub fn fock_dual_exact<S: Scalar>(f: &FockElement<S>, n: usize) -> Result<FockElement<S>> {
    crate::ball::transform::require_dimension(f.poly(), n)?;
    Ok(f.scale_degrees(|p| holomorphic_dual_factor(p, n as u32)))
}

/// Inverse of [`fock_dual_exact`], the same scaling as the holomorphic
/// inversion on the ball.
pub fn fock_invert<S: Scalar>(g: &FockElement<S>, n: usize) -> Result<FockElement<S>> {
    crate::ball::transform::require_dimension(g.poly(), n)?;
    Ok(g.scale_degrees(|p| crate::ball::transform::holomorphic_inversion_factor(p, n as u32)))
}

/// Monte-Carlo estimate of the dual over Haar-random tuples.
pub fn fock_dual_monte_carlo(
    f: &FockElement<C64>,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<BTreeMap<Monomial, Estimate>> {
    crate::ball::transform::require_dimension(f.poly(), n)?;
    estimate(samples, seed, |rng| {
        let tuple = sample_stiefel_with(n, rng)?;
        let image = bargmann_radon(f, &tuple)?.reconstructed;
        Ok(image.poly.terms().map(|(m, c)| (m.clone(), *c)).collect())
    })
}

/// Monte-Carlo estimate of `pi^{-n} int conj(P) Q e^{-|z|^2} dV`, drawing `z`
/// from the normalised Gaussian weight.
pub fn gaussian_inner_monte_carlo(p: &BiPoly<C64>, q: &BiPoly<C64>, samples: usize, seed: u64) -> Result<Estimate> {
    if p.n() != q.n() {
        return Err(Error::Dimension {
            expected: p.n(),
            got: q.n(),
        });
    }
    let n = p.n();
    let sd = std::f64::consts::FRAC_1_SQRT_2;
    let est = estimate(samples, seed, |rng| {
        let z: Vec<C64> = (0..n)
            .map(|_| {
                let re: f64 = rng.sample(StandardNormal);
                let im: f64 = rng.sample(StandardNormal);
                Complex::new(re * sd, im * sd)
            })
            .collect();
        Ok(vec![((), p.eval(&z)?.conj() * q.eval(&z)?)])
    })?;
    Ok(est.get(&()).copied().unwrap_or(Estimate {
        mean: Complex::new(0.0, 0.0),
        stderr_re: 0.0,
        stderr_im: 0.0,
    }))
}

/// `(1 / gamma_{p,0}) / (1 / mu_p)`; equals `(n)_p`.
pub fn kernel_coefficient_ratio(p: u32, n: u32) -> BigRational {
    mu_p(p) / gamma_pq(p, 0, n)
}

/// Checks `kernel_coefficient_ratio(p, n) == (n)_p` for `p <= max_p`.
pub fn kernel_ratio_holds(max_p: u32, n: u32) -> bool {
    (0..=max_p).all(|p| kernel_coefficient_ratio(p, n) == pochhammer_int(n as i64, p))
}
