//! Projection, dual transform and inversion on harmonic polynomials.

use std::collections::BTreeMap;

use num::{BigRational, Complex};

use super::plane_wave;
use crate::bipoly::{sphere_inner, BiPoly, Monomial};
use crate::constants::{dim_h_q, factorial_q, gamma_pq, lambda_pq, pochhammer_int};
use crate::error::{Error, Result};
use crate::geometry::{sample_stiefel_with, StiefelTuple};
use crate::montecarlo::{estimate, Estimate};
use crate::projection::{Branch, ProjectionResult};
use crate::quadrature::laguerre_integral;
use crate::scalar::{Ring, Scalar, C64};

pub type BallProjection<S> = ProjectionResult<(u32, u32), S, BiPoly<S>>;

/// Relative tolerance used by floating contract checks.
pub const FLOAT_CONTRACT_TOL: f64 = 1e-9;

/// Coefficients at most this (relative) are treated as zero in floating
/// projections.
pub const FLOAT_ZERO_TOL: f64 = 1e-13;

pub(crate) fn require_harmonic<R: Ring>(f: &BiPoly<R>) -> Result<()> {
    let lap = f.laplace_z();
    let residual = lap.magnitude();
    let ok = if R::EXACT {
        lap.is_zero()
    } else {
        residual <= FLOAT_CONTRACT_TOL * f.magnitude().max(1.0)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::contract("input is not harmonic (Laplacian residual)", residual))
    }
}

pub(crate) fn require_dimension<R: Ring>(f: &BiPoly<R>, n: usize) -> Result<()> {
    if f.n() != n {
        return Err(Error::Dimension {
            expected: n,
            got: f.n(),
        });
    }
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    Ok(())
}

pub(crate) fn negligible<S: Scalar>(c: &S, scale: f64) -> bool {
    if S::EXACT {
        c.is_zero()
    } else {
        c.magnitude() <= FLOAT_ZERO_TOL * scale.max(1.0)
    }
}

fn project<S: Scalar>(
    f: &BiPoly<S>,
    tuple: &StiefelTuple<S>,
    keep: impl Fn(u32, u32) -> bool,
) -> Result<BallProjection<S>> {
    let n = tuple.n();
    require_dimension(f, n)?;
    require_harmonic(f)?;
    let scale = f.magnitude();
    let mut coefficients = BTreeMap::new();
    let mut reconstructed = BiPoly::zero(n);
    for ((p, q), component) in f.bidegree_split() {
        if !keep(p, q) {
            continue;
        }
        let wave = plane_wave(tuple, p, q);
        let gamma = S::from_rational(&gamma_pq(p, q, n as u32));
        let c = sphere_inner(&wave, &component)?.times(&gamma.inverse().expect("positive"));
        if negligible(&c, scale) {
            continue;
        }
        reconstructed = reconstructed.add(&wave.scale(&c))?;
        coefficients.insert((p, q), c);
    }
    Ok(ProjectionResult {
        coefficients,
        reconstructed,
    })
}

/// Orthogonal projection of a harmonic polynomial onto the plane waves of
/// `tuple`; coefficient `(p,q)` is `<f_{p,q}, f>_S / gamma_{p,q}`.
pub fn szego_radon<S: Scalar>(f: &BiPoly<S>, tuple: &StiefelTuple<S>) -> Result<BallProjection<S>> {
    project(f, tuple, |_, _| true)
}

/// The projection restricted to the bi-degrees of one branch.
pub fn szego_radon_split<S: Scalar>(
    f: &BiPoly<S>,
    tuple: &StiefelTuple<S>,
    branch: Branch,
) -> Result<BallProjection<S>> {
    project(f, tuple, |p, q| branch.contains(p, q))
}

/// `1 / (gamma_{p,q} lambda_{p,q} dim H_{p,q})`.
pub fn dual_factor(p: u32, q: u32, n: u32) -> BigRational {
    (gamma_pq(p, q, n) * lambda_pq(p, q, n) * dim_h_q(p, q, n)).recip()
}

/// Dual transform of the projection, averaged over all tuples: scales each
/// bi-degree component of `f` by [`dual_factor`].
pub fn dual_exact<S: Scalar>(f: &BiPoly<S>, n: usize) -> Result<BiPoly<S>> {
    require_dimension(f, n)?;
    require_harmonic(f)?;
    Ok(f.map_terms(|m| {
        let (p, q) = m.bidegree();
        S::from_rational(&dual_factor(p, q, n as u32))
    }))
}

/// Monte-Carlo estimate of the dual transform: the projected polynomial
/// averaged over Haar-random tuples, coefficient by coefficient.
pub fn dual_monte_carlo(f: &BiPoly<C64>, n: usize, samples: usize, seed: u64) -> Result<BTreeMap<Monomial, Estimate>> {
    require_dimension(f, n)?;
    require_harmonic(f)?;
    estimate(samples, seed, |rng| {
        let tuple = sample_stiefel_with(n, rng)?;
        let image = szego_radon(f, &tuple)?.reconstructed;
        Ok(image.terms().map(|(m, c)| (m.clone(), *c)).collect())
    })
}

/// Inverse of the holomorphic dual: degree `p` is scaled by
/// `(p+1)_{n-1} / Gamma(n)`, the eigenvalue of `(E_z+1)...(E_z+n-1)/Gamma(n)`.
pub fn invert_holomorphic<S: Scalar>(g: &BiPoly<S>, n: usize) -> Result<BiPoly<S>> {
    require_dimension(g, n)?;
    if !g.is_holomorphic() {
        return Err(Error::contract(
            "input has zbar terms",
            g.terms()
                .filter(|(m, _)| m.beta.total() > 0)
                .map(|(_, c)| c.magnitude())
                .fold(0.0, f64::max),
        ));
    }
    Ok(g.map_terms(|m| S::from_rational(&holomorphic_inversion_factor(m.alpha.total(), n as u32))))
}

/// `(p+1)_{n-1} / Gamma(n)`.
pub fn holomorphic_inversion_factor(p: u32, n: u32) -> BigRational {
    pochhammer_int(p as i64 + 1, n - 1) / factorial_q(n - 1)
}

/// Eigenvalue of the Euler-operator product on bi-degree `(p, q)`:
/// `(k+n-1) (p+1)_{n-2} (q+1)_{n-2} / ((n-1)! (n-2)!)`.
pub fn euler_inversion_factor(p: u32, q: u32, n: u32) -> BigRational {
    BigRational::from_integer((p + q + n - 1).into())
        * pochhammer_int(p as i64 + 1, n - 2)
        * pochhammer_int(q as i64 + 1, n - 2)
        / (factorial_q(n - 1) * factorial_q(n - 2))
}

/// The Laplace integral `int_0^inf f(z, zbar t) e^{-t} dt` (branch `ge`) or
/// `int_0^inf f(z t, zbar) e^{-t} dt` (branch `lt`) on bi-degree `(p, q)`:
/// `q!` or `p!`.
pub fn laplace_factor(p: u32, q: u32, branch: Branch) -> BigRational {
    match branch {
        Branch::Ge => factorial_q(q),
        Branch::Lt => factorial_q(p),
    }
}

/// Full inversion eigenvalue on bi-degree `(p, q)` of a branch.
pub fn general_inversion_factor(p: u32, q: u32, n: u32, branch: Branch) -> BigRational {
    laplace_factor(p, q, branch) * euler_inversion_factor(p, q, n)
}

/// Inverts `dual_exact` on the image of one split projection.
pub fn invert_general<S: Scalar>(g: &BiPoly<S>, n: usize, branch: Branch) -> Result<BiPoly<S>> {
    require_dimension(g, n)?;
    require_harmonic(g)?;
    if let Some((m, _)) = g.terms().find(|(m, _)| {
        let (p, q) = m.bidegree();
        !branch.contains(p, q)
    }) {
        let (p, q) = m.bidegree();
        return Err(Error::contract(
            format!("bi-degree ({p},{q}) lies outside branch {}", branch.name()),
            f64::NAN,
        ));
    }
    Ok(g.map_terms(|m| {
        let (p, q) = m.bidegree();
        S::from_rational(&general_inversion_factor(p, q, n as u32, branch))
    }))
}

/// The bi-degree components of `f` lying in `branch`.
pub fn branch_part<R: Ring>(f: &BiPoly<R>, branch: Branch) -> BiPoly<R> {
    let mut out = BiPoly::zero(f.n());
    for (m, c) in f.terms() {
        let (p, q) = m.bidegree();
        if branch.contains(p, q) {
            out.add_term(m.clone(), c.clone());
        }
    }
    out
}

/// Recovers `f` from the tuple-averaged duals of its two split projections.
pub fn reconstruct<S: Scalar>(f: &BiPoly<S>, n: usize) -> Result<BiPoly<S>> {
    let mut out = BiPoly::zero(n);
    for branch in Branch::both() {
        let dual = dual_exact(&branch_part(f, branch), n)?;
        out = out.add(&invert_general(&dual, n, branch)?)?;
    }
    Ok(out)
}

/// Evaluates the branch Laplace integral of `g` at `z` with an `m`-node
/// Gauss-Laguerre rule; used to check [`laplace_factor`].
pub fn laplace_integral_oracle(g: &BiPoly<C64>, z: &[C64], branch: Branch, nodes: usize) -> Result<C64> {
    if z.len() != g.n() {
        return Err(Error::Dimension {
            expected: g.n(),
            got: z.len(),
        });
    }
    let zbar: Vec<C64> = z.iter().map(|c| c.conj()).collect();
    let eval = |t: f64| -> C64 {
        let (sz, szb) = match branch {
            Branch::Ge => (1.0, t),
            Branch::Lt => (t, 1.0),
        };
        let mut acc = Complex::new(0.0, 0.0);
        for (m, c) in g.terms() {
            let mut w = *c;
            for j in 0..z.len() {
                w *= (z[j] * sz).powu(m.alpha.parts()[j]) * (zbar[j] * szb).powu(m.beta.parts()[j]);
            }
            acc += w;
        }
        acc
    };
    Ok(laguerre_integral(nodes, eval))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{axis_tuple, cayley_tuple, sample_stiefel};
    use crate::random::{random_harmonic, random_holomorphic};
    use crate::scalar::{cq, q, qf, CQ};
    use num::ToPrimitive;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    type P = BiPoly<CQ>;

    #[test]
    fn plane_waves_are_reproduced() {
        let t = cayley_tuple(3, 1).unwrap();
        for (p, qq) in [(0, 0), (2, 1), (1, 3)] {
            let f = plane_wave(&t, p, qq);
            let r = szego_radon(&f, &t).unwrap();
            assert_eq!(r.coefficients.len(), 1);
            assert_eq!(r.coefficients[&(p, qq)], cq(1, 0));
            assert_eq!(r.reconstructed, f);
        }
    }

    #[test]
    fn non_harmonic_input_is_rejected() {
        let t = cayley_tuple(2, 0).unwrap();
        let f = P::norm2(2);
        assert!(matches!(szego_radon(&f, &t), Err(Error::Contract { .. })));
        assert!(matches!(dual_exact(&f, 2), Err(Error::Contract { .. })));
    }

    #[test]
    fn orthogonal_input_projects_to_zero() {
        // z1 - z2 is sphere-orthogonal to (z1 + z2)^1
        let t = axis_tuple::<CQ>(2, 0, 1).unwrap();
        let f = P::z(2, 0).sub(&P::z(2, 1)).unwrap();
        assert!(szego_radon(&f, &t).unwrap().coefficients.is_empty());
    }

    #[test]
    fn projection_laws() {
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        for trial in 0..6 {
            let n = 2 + trial % 2;
            let t = cayley_tuple(n, trial as u64 + 40).unwrap();
            let f = random_harmonic(&mut rng, n, 3);
            let g = random_harmonic(&mut rng, n, 3);
            let pf = szego_radon(&f, &t).unwrap();
            assert_eq!(szego_radon(&pf.reconstructed, &t).unwrap(), pf);
            let pg = szego_radon(&g, &t).unwrap().reconstructed;
            assert_eq!(
                sphere_inner(&pf.reconstructed, &g).unwrap(),
                sphere_inner(&f, &pg).unwrap()
            );
            let ge = szego_radon_split(&f, &t, Branch::Ge).unwrap().reconstructed;
            let lt = szego_radon_split(&f, &t, Branch::Lt).unwrap().reconstructed;
            assert_eq!(ge.add(&lt).unwrap(), pf.reconstructed);
        }
    }

    #[test]
    fn split_examples() {
        let t = cayley_tuple(2, 3).unwrap();
        let f = plane_wave(&t, 2, 1);
        assert_eq!(szego_radon_split(&f, &t, Branch::Ge).unwrap().reconstructed, f);
        assert!(szego_radon_split(&f, &t, Branch::Lt).unwrap().coefficients.is_empty());
        let g = plane_wave(&t, 1, 1);
        assert_eq!(szego_radon_split(&g, &t, Branch::Ge).unwrap().reconstructed, g);
    }

    #[test]
    fn dual_examples() {
        assert_eq!(
            dual_exact(&P::constant(2, cq(1, 0)), 2).unwrap(),
            P::constant(2, cq(1, 0))
        );
        let z1 = P::z(2, 0);
        assert_eq!(dual_exact(&z1, 2).unwrap(), z1.scale(&CQ::from_rational(&qf(1, 2))));
        let f = P::z(2, 0).mul(&P::zbar(2, 1)).unwrap();
        assert_eq!(dual_exact(&f, 2).unwrap(), f.scale(&CQ::from_rational(&qf(1, 3))));
        for p in 0..6 {
            assert_eq!(dual_factor(p, 0, 2), qf(1, p as i64 + 1));
        }
    }

    #[test]
    fn holomorphic_round_trip() {
        let mut rng = ChaCha20Rng::seed_from_u64(8);
        for trial in 0..8 {
            let n = 2 + trial % 2;
            let f = random_holomorphic(&mut rng, n, 5);
            let back = invert_holomorphic(&dual_exact(&f, n).unwrap(), n).unwrap();
            assert_eq!(back, f);
        }
        let z3 = P::z(2, 0).pow(3);
        assert_eq!(invert_holomorphic(&z3, 2).unwrap(), z3.scale(&cq(4, 0)));
        assert!(invert_holomorphic(&P::zbar(2, 0), 2).is_err());
    }

    #[test]
    fn general_round_trip() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for trial in 0..8 {
            let n = 2 + trial % 2;
            let f = random_harmonic(&mut rng, n, 4);
            assert_eq!(reconstruct(&f, n).unwrap(), f);
            let wrong = invert_general(&dual_exact(&f, n).unwrap(), n, Branch::Ge);
            assert!(wrong.is_err() || branch_part(&f, Branch::Lt).is_zero());
        }
    }

    #[test]
    fn closed_form_of_the_lt_branch_constant() {
        // (n-1)!(n-2)! / ((n+p+q-1) (q+1)_{n-2} (p+1)_{n-2} Gamma(p+1)) on p < q
        for n in 2..=4u32 {
            for p in 0..=3u32 {
                for qq in (p + 1)..=4 {
                    let closed = factorial_q(n - 1) * factorial_q(n - 2)
                        / (q((n + p + qq - 1) as i64)
                            * pochhammer_int(qq as i64 + 1, n - 2)
                            * pochhammer_int(p as i64 + 1, n - 2)
                            * factorial_q(p));
                    assert_eq!(closed, dual_factor(p, qq, n));
                }
            }
        }
        // example: plane wave of bi-degree (1,2) in C^2
        assert_eq!(general_inversion_factor(1, 2, 2, Branch::Lt), q(4));
        assert_eq!(dual_factor(1, 2, 2), qf(1, 4));
    }

    #[test]
    fn laplace_factor_matches_quadrature() {
        let t = sample_stiefel(2, 5).unwrap();
        let z = vec![Complex::new(0.2, 0.1), Complex::new(-0.1, 0.3)];
        for (p, qq) in [(2, 1), (1, 3), (0, 2)] {
            let g = plane_wave(&t, p, qq);
            for branch in Branch::both() {
                let got = laplace_integral_oracle(&g, &z, branch, 64).unwrap();
                let expected = g.eval(&z).unwrap() * laplace_factor(p, qq, branch).to_f64().unwrap();
                assert!((got - expected).norm() < 1e-10 * expected.norm().max(1e-3));
            }
        }
    }

    #[test]
    fn monte_carlo_dual_of_a_constant_is_exact() {
        let f = BiPoly::constant(2, Complex::new(1.0, 0.0));
        let est = dual_monte_carlo(&f, 2, 200, 1).unwrap();
        let e = est[&Monomial::one(2)];
        assert_eq!(e.mean, Complex::new(1.0, 0.0));
        assert_eq!(e.stderr_re, 0.0);
        assert!(dual_monte_carlo(&f, 2, 50, 1).is_err());
    }

    #[test]
    fn monte_carlo_dual_small_run() {
        let f = BiPoly::<C64>::z(2, 0);
        let est = dual_monte_carlo(&f, 2, 20_000, 7).unwrap();
        let m = Monomial::new(
            crate::bipoly::MultiIndex::unit(2, 0),
            crate::bipoly::MultiIndex::zeros(2),
        );
        assert!(est[&m].z_score(Complex::new(0.5, 0.0)) < 4.0);
    }
}
