//! Hermitian Dirac operators, Hermitian-monogenic plane waves and the
//! Hermitian Szegő-Radon transform.

use std::collections::BTreeMap;

use num::BigRational;

use super::algebra::Multivector;
use super::witt::{has_grade, null_tau, spin_euler, witt};
use crate::ball::plane_wave;
use crate::ball::transform::{branch_part, FLOAT_CONTRACT_TOL};
use crate::bipoly::{sphere_inner, BiPoly, Monomial};
use crate::constants::{dim_h_q, factorial_q, gamma_pq, lambda_tilde_pq, pochhammer_int};
use crate::error::{Error, Result};
use crate::geometry::{sample_stiefel_with, StiefelTuple};
use crate::montecarlo::{estimate, Estimate};
use crate::projection::{Branch, ProjectionResult};
use crate::scalar::{q, Scalar, C64};

/// Polynomial with Clifford coefficients.
pub type HermPoly<S> = BiPoly<Multivector<S>>;

pub type HermProjection<S> = ProjectionResult<(u32, u32), Multivector<S>, HermPoly<S>>;

/// A scalar polynomial with coefficients embedded as Clifford scalars.
pub fn lift<S: Scalar>(p: &BiPoly<S>) -> HermPoly<S> {
    p.map_ring(|c| Multivector::scalar(c.clone()))
}

/// `sum_j f_j^dagger d/dz_j`.
pub fn dirac_z<S: Scalar>(f: &HermPoly<S>) -> Result<HermPoly<S>> {
    let n = f.n();
    let mut out = BiPoly::zero(n);
    for j in 0..n {
        out = out.add(&f.dz(j)?.left_mul(&witt(n, j + 1, true)?))?;
    }
    Ok(out)
}

/// `sum_j f_j d/dzbar_j`.
pub fn dirac_zdag<S: Scalar>(f: &HermPoly<S>) -> Result<HermPoly<S>> {
    let n = f.n();
    let mut out = BiPoly::zero(n);
    for j in 0..n {
        out = out.add(&f.dzbar(j)?.left_mul(&witt(n, j + 1, false)?))?;
    }
    Ok(out)
}

/// Magnitudes of the two Dirac residuals.
pub fn dirac_residuals<S: Scalar>(f: &HermPoly<S>) -> Result<(f64, f64)> {
    Ok((dirac_z(f)?.magnitude(), dirac_zdag(f)?.magnitude()))
}

pub(crate) fn require_h_monogenic<S: Scalar>(f: &HermPoly<S>) -> Result<()> {
    let (a, b) = dirac_residuals(f)?;
    let ok = if S::EXACT {
        a == 0.0 && b == 0.0
    } else {
        a.max(b) <= FLOAT_CONTRACT_TOL * f.magnitude().max(1.0)
    };
    if ok {
        Ok(())
    } else {
        Err(Error::contract(
            format!("input is not Hermitian monogenic (dirac_z residual {a:e}, dirac_zdag residual {b:e})"),
            a.max(b),
        ))
    }
}

/// `<z, conj(s+t)>^p <zbar, s-t>^q tau`.
pub fn hmono_wave<S: Scalar>(tuple: &StiefelTuple<S>, p: u32, q: u32) -> HermPoly<S> {
    lift(&plane_wave(tuple, p, q)).right_mul(&null_tau(tuple))
}

/// Clifford-valued sphere inner product `<P, Q> = (1/omega) int P^dagger Q`.
pub fn herm_inner<S: Scalar>(p: &HermPoly<S>, q: &HermPoly<S>) -> Result<Multivector<S>> {
    sphere_inner(p, q)
}

/// Orthogonal projection onto the closure of `sum f_{p,q} tau alpha_{p,q}`;
/// the Clifford coefficient is `tau^dagger <f_{p,q}, F> / (4 gamma_{p,q})`.
pub fn herm_radon<S: Scalar>(f: &HermPoly<S>, tuple: &StiefelTuple<S>) -> Result<HermProjection<S>> {
    project(f, tuple, |_, _| true)
}

/// The projection restricted to one branch of bi-degrees.
pub fn herm_radon_split<S: Scalar>(
    f: &HermPoly<S>,
    tuple: &StiefelTuple<S>,
    branch: Branch,
) -> Result<HermProjection<S>> {
    project(f, tuple, |p, q| branch.contains(p, q))
}

fn project<S: Scalar>(
    f: &HermPoly<S>,
    tuple: &StiefelTuple<S>,
    keep: impl Fn(u32, u32) -> bool,
) -> Result<HermProjection<S>> {
    let n = tuple.n();
    crate::ball::transform::require_dimension(f, n)?;
    require_h_monogenic(f)?;
    let tau = null_tau(tuple);
    let tau_dag = tau.dagger();
    let scale = f.magnitude().max(1.0);
    let mut coefficients = BTreeMap::new();
    let mut reconstructed = BiPoly::zero(n);
    for ((p, qq), component) in f.bidegree_split() {
        if !keep(p, qq) {
            continue;
        }
        let wave = plane_wave(tuple, p, qq);
        let four_gamma = S::from_rational(&(gamma_pq(p, qq, n as u32) * q(4)));
        let c = tau_dag
            .mul(&sphere_inner(&lift(&wave), &component)?)
            .scale(&four_gamma.inverse().expect("positive"));
        let c = if S::EXACT {
            c
        } else {
            Multivector::from_blades(
                c.blades()
                    .filter(|(_, v)| v.magnitude() > 1e-13 * scale)
                    .map(|(m, v)| (m, v.clone())),
            )
        };
        if c.is_empty() {
            continue;
        }
        reconstructed = reconstructed.add(&lift(&wave).right_mul(&tau.mul(&c)))?;
        coefficients.insert((p, qq), c);
    }
    Ok(ProjectionResult {
        coefficients,
        reconstructed,
    })
}

/// Scalar coefficient of `f_{p,q}(z) conj(f_{p,q}(u)) tau tau^dagger` in the
/// Hermitian kernel, `1 / (4 gamma_{p,q})`.
pub fn herm_kernel_coefficient(p: u32, q: u32, n: u32) -> BigRational {
    (gamma_pq(p, q, n) * crate::scalar::q(4)).recip()
}

/// `(n+k+1)^2 / (4 gamma_{p,q} lambda~_{p,q} dim H_{p+1,q+1})` with the
/// printed `lambda~`, whose `(p+1)^2 (q+1)^2` makes the dual too small by
/// `(p+1)(q+1)` against Stiefel integration.
pub fn herm_dual_prefactor_as_printed(p: u32, qq: u32, n: u32) -> BigRational {
    let k = p + qq + n + 1;
    q(k as i64) * q(k as i64) / (q(4) * gamma_pq(p, qq, n) * lambda_tilde_pq(p, qq, n) * dim_h_q(p + 1, qq + 1, n))
}

/// The part of the dual constant that does not involve `beta`.
pub fn herm_dual_prefactor(p: u32, qq: u32, n: u32) -> BigRational {
    herm_dual_prefactor_as_printed(p, qq, n) * q((p + 1) as i64) * q((qq + 1) as i64)
}

/// Dual constant on grade-`j` spinors: the prefactor times `(n-j+q)(j+p)`.
pub fn herm_dual_factor(p: u32, qq: u32, j: u32, n: u32) -> BigRational {
    herm_dual_prefactor(p, qq, n) * q((n - j + qq) as i64) * q((j + p) as i64)
}

/// [`herm_dual_factor`] built on [`herm_dual_prefactor_as_printed`].
pub fn herm_dual_factor_as_printed(p: u32, qq: u32, j: u32, n: u32) -> BigRational {
    herm_dual_prefactor_as_printed(p, qq, n) * q((n - j + qq) as i64) * q((j + p) as i64)
}

fn require_grade<S: Scalar>(f: &HermPoly<S>, n: usize, j: usize) -> Result<()> {
    if j > n {
        return Err(Error::Domain(format!("grade {j} exceeds n = {n}")));
    }
    if let Some((_, c)) = f.terms().find(|(_, c)| !grade_ok(n, j, c)) {
        return Err(Error::contract(
            format!("coefficient is not a grade-{j} spinor"),
            c.magnitude(),
        ));
    }
    Ok(())
}

fn grade_ok<S: Scalar>(n: usize, j: usize, c: &Multivector<S>) -> bool {
    if S::EXACT {
        has_grade(n, j, c)
    } else {
        let beta = spin_euler::<S>(n);
        beta.mul(c).sub(&c.scale(&S::from_i64(j as i64))).magnitude() <= FLOAT_CONTRACT_TOL * c.magnitude().max(1.0)
    }
}

/// Tuple-averaged dual of the projection on grade-`j` inputs: bi-degree
/// `(p,q)` scaled by [`herm_dual_factor`].
pub fn herm_dual_exact<S: Scalar>(f: &HermPoly<S>, n: usize, j: usize) -> Result<HermPoly<S>> {
    crate::ball::transform::require_dimension(f, n)?;
    require_h_monogenic(f)?;
    require_grade(f, n, j)?;
    Ok(f.map_terms(|m| {
        let (p, qq) = m.bidegree();
        S::from_rational(&herm_dual_factor(p, qq, j as u32, n as u32))
    }))
}

/// The dual with `(n - beta + q)(beta + p)` applied as left multiplication
/// by Clifford numbers instead of the grade substitution.
pub fn herm_dual_operator_form<S: Scalar>(f: &HermPoly<S>, n: usize) -> Result<HermPoly<S>> {
    crate::ball::transform::require_dimension(f, n)?;
    let beta = spin_euler::<S>(n);
    let mut out = BiPoly::zero(n);
    for ((p, qq), component) in f.bidegree_split() {
        let left = Multivector::scalar(S::from_i64((n as u32 + qq) as i64)).sub(&beta);
        let right = beta.add(&Multivector::scalar(S::from_i64(p as i64)));
        let op = left
            .mul(&right)
            .scale(&S::from_rational(&herm_dual_prefactor(p, qq, n as u32)));
        out = out.add(&component.left_mul(&op))?;
    }
    Ok(out)
}

/// Laplace integral `int_0^inf f(z, zbar t) t^{n-j-1} e^{-t} dt` (branch `ge`)
/// or `int_0^inf f(z t, zbar) t^{j-1} e^{-t} dt` (branch `lt`) on bi-degree
/// `(p, q)`: `Gamma(q+n-j)` or `Gamma(p+j)`.
pub fn herm_laplace_factor(p: u32, qq: u32, j: u32, n: u32, branch: Branch) -> BigRational {
    match branch {
        Branch::Ge => factorial_q(qq + n - j - 1),
        Branch::Lt => factorial_q(p + j - 1),
    }
}

/// The four Euler-operator products of the inversion on bi-degree `(p, q)`.
#[derive(Clone, Debug, PartialEq)]
pub struct EulerProducts {
    pub j1: BigRational,
    pub j2: BigRational,
    pub j3: BigRational,
    pub j4: BigRational,
}

/// Eigenvalues of the products `(E_zbar + n-j+1)...(E_zbar + n-1)`,
/// `prod_{m != j, 1 <= m <= n-1} (E_z + m)`, `(E_z + j+1)...(E_z + n-1)` and
/// `prod_{m != n-j, 1 <= m <= n-1} (E_zbar + m)`, which make the inversion the
/// exact reciprocal of the dual.
pub fn euler_products(p: u32, qq: u32, j: u32, n: u32) -> EulerProducts {
    EulerProducts {
        j1: pochhammer_int((qq + n - j + 1) as i64, j - 1),
        j2: pochhammer_int(p as i64 + 1, n - 1) / q((p + j) as i64),
        j3: pochhammer_int((p + j + 1) as i64, n - j - 1),
        j4: pochhammer_int(qq as i64 + 1, n - 1) / q((qq + n - j) as i64),
    }
}

/// The same four eigenvalues as listed in closed form alongside the
/// inversion operators: `(q+n-j+1)_{j+1}`, `(p+1)_{n-1}/(p+j)`,
/// `(p+j+1)_{n-j-1}`, `(q+1)_{n-1}/(n-j)`.
pub fn euler_products_as_listed(p: u32, qq: u32, j: u32, n: u32) -> EulerProducts {
    EulerProducts {
        j1: pochhammer_int((qq + n - j + 1) as i64, j + 1),
        j2: pochhammer_int(p as i64 + 1, n - 1) / q((p + j) as i64),
        j3: pochhammer_int((p + j + 1) as i64, n - j - 1),
        j4: pochhammer_int(qq as i64 + 1, n - 1) / q((n - j) as i64),
    }
}

fn assemble(p: u32, qq: u32, j: u32, n: u32, branch: Branch, e: &EulerProducts, unit_shifts: bool) -> BigRational {
    let common = q((p + qq + n) as i64) / (factorial_q(n - 1) * factorial_q(n - 2));
    let laplace = herm_laplace_factor(p, qq, j, n, branch);
    let shifts = if unit_shifts {
        q(p as i64 + 1) * q(qq as i64 + 1)
    } else {
        q(1)
    };
    match branch {
        Branch::Ge => common * shifts * &e.j1 * &e.j2 * laplace,
        Branch::Lt => common * shifts * &e.j3 * &e.j4 * laplace,
    }
}

fn check_inner_grade(j: usize, n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if j == 0 || j >= n {
        return Err(Error::Domain(format!(
            "grade {j} is outside 1..{}: tau annihilates grade-0 and grade-n spinors, so the projection vanishes there",
            n - 1
        )));
    }
    Ok(())
}

/// Inversion eigenvalue on bi-degree `(p, q)` of `branch` for grade `j`:
/// `(E+n) J1 J2` or `(E+n) J3 J4` after the Laplace integral, over
/// `Gamma(n) Gamma(n-1)`.
pub fn herm_inversion_factor(p: u32, qq: u32, j: u32, n: u32, branch: Branch) -> Result<BigRational> {
    check_inner_grade(j as usize, n as usize)?;
    Ok(assemble(p, qq, j, n, branch, &euler_products(p, qq, j, n), false))
}

/// The inversion eigenvalue with the extra `(E_z+1)(E_zbar+1)` factors
/// that pair with [`herm_dual_factor_as_printed`], built from the given
/// Euler products.
pub fn herm_inversion_factor_with_shifts(
    p: u32,
    qq: u32,
    j: u32,
    n: u32,
    branch: Branch,
    products: &EulerProducts,
) -> Result<BigRational> {
    check_inner_grade(j as usize, n as usize)?;
    Ok(assemble(p, qq, j, n, branch, products, true))
}

/// The inversion eigenvalue exactly as listed: the shifted operator with
/// [`euler_products_as_listed`].
pub fn herm_inversion_factor_as_listed(p: u32, qq: u32, j: u32, n: u32, branch: Branch) -> Result<BigRational> {
    herm_inversion_factor_with_shifts(p, qq, j, n, branch, &euler_products_as_listed(p, qq, j, n))
}

/// Inverts [`herm_dual_exact`] on the image of one split projection.
pub fn herm_invert<S: Scalar>(g: &HermPoly<S>, n: usize, j: usize, branch: Branch) -> Result<HermPoly<S>> {
    crate::ball::transform::require_dimension(g, n)?;
    check_inner_grade(j, n)?;
    require_grade(g, n, j)?;
    if let Some((m, _)) = g.terms().find(|(m, _)| {
        let (p, qq) = m.bidegree();
        !branch.contains(p, qq)
    }) {
        let (p, qq) = m.bidegree();
        return Err(Error::contract(
            format!("bi-degree ({p},{qq}) lies outside branch {}", branch.name()),
            f64::NAN,
        ));
    }
    let mut factors: BTreeMap<(u32, u32), BigRational> = BTreeMap::new();
    for m in g.terms().map(|(m, _)| m) {
        let (p, qq) = m.bidegree();
        if let std::collections::btree_map::Entry::Vacant(e) = factors.entry((p, qq)) {
            e.insert(herm_inversion_factor(p, qq, j as u32, n as u32, branch)?);
        }
    }
    Ok(g.map_terms(|m| S::from_rational(&factors[&m.bidegree()])))
}

/// Recovers a grade-`j` input from the tuple-averaged duals of its split
/// projections.
pub fn herm_reconstruct<S: Scalar>(f: &HermPoly<S>, n: usize, j: usize) -> Result<HermPoly<S>> {
    let mut out = BiPoly::zero(n);
    for branch in Branch::both() {
        let dual = herm_dual_exact(&branch_part(f, branch), n, j)?;
        out = out.add(&herm_invert(&dual, n, j, branch)?)?;
    }
    Ok(out)
}

/// Monte-Carlo estimate of the dual, keyed by monomial and blade.
pub fn herm_dual_monte_carlo(
    f: &HermPoly<C64>,
    n: usize,
    samples: usize,
    seed: u64,
) -> Result<BTreeMap<(Monomial, u32), Estimate>> {
    crate::ball::transform::require_dimension(f, n)?;
    require_h_monogenic(f)?;
    estimate(samples, seed, |rng| {
        let tuple = sample_stiefel_with(n, rng)?;
        let image = herm_radon(f, &tuple)?.reconstructed;
        let mut out = vec![];
        for (m, c) in image.terms() {
            for (mask, v) in c.blades() {
                out.push(((m.clone(), mask), *v));
            }
        }
        Ok(out)
    })
}

/// Flattens a Clifford polynomial into `(monomial, blade) -> coefficient`.
pub fn flatten<S: Scalar>(f: &HermPoly<S>) -> BTreeMap<(Monomial, u32), S> {
    let mut out = BTreeMap::new();
    for (m, c) in f.terms() {
        for (mask, v) in c.blades() {
            out.insert((m.clone(), mask), v.clone());
        }
    }
    out
}
