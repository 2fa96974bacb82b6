//! The transform on `L2(R^n)` induced through the Segal-Bargmann map, acting
//! on finite expansions in the Hermite functions
//! `psi_a(x) = prod_j He_{a_j}(x_j) exp(-x_j^2 / 4)`.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, Complex, One, Zero};
use serde::Serialize;

use crate::bipoly::{multi_indices, BiPoly, Monomial, MultiIndex};
use crate::constants::{holomorphic_dual_factor, mu_p, multi_factorial, multinomial};
use crate::error::{Error, Result};
use crate::fock::{bargmann_radon, entire_plane_wave, FockElement};
use crate::geometry::StiefelTuple;
use crate::projection::ProjectionResult;
use crate::scalar::{Scalar, C64, CQ};

/// Distance from 1 below which `rho` counts as degenerate.
pub const RHO_DEGENERACY: f64 = 1e-8;

/// Coefficients of `He_k`, lowest degree first.
pub fn hermite(k: u32) -> Vec<BigInt> {
    let mut prev: Vec<BigInt> = vec![];
    let mut cur = vec![BigInt::one()];
    for j in 0..k {
        // He_{j+1} = x He_j - j He_{j-1}
        let mut next = vec![BigInt::zero(); cur.len() + 1];
        for (i, c) in cur.iter().enumerate() {
            next[i + 1] += c;
        }
        for (i, c) in prev.iter().enumerate() {
            next[i] -= c * BigInt::from(j);
        }
        prev = cur;
        cur = next;
    }
    cur
}

/// `He_k(x)` by the three-term recurrence; `x` may be complex.
pub fn hermite_eval(k: u32, x: C64) -> C64 {
    let mut prev = Complex::new(0.0, 0.0);
    let mut cur = Complex::new(1.0, 0.0);
    for j in 0..k {
        let next = x * cur - prev * j as f64;
        prev = cur;
        cur = next;
    }
    cur
}

/// `psi_a(x)`.
pub fn psi(alpha: &MultiIndex, x: &[f64]) -> Result<f64> {
    if x.len() != alpha.len() {
        return Err(Error::Dimension {
            expected: alpha.len(),
            got: x.len(),
        });
    }
    Ok(alpha
        .parts()
        .iter()
        .zip(x)
        .map(|(&k, &xj)| hermite_eval(k, Complex::new(xj, 0.0)).re * (-xj * xj / 4.0).exp())
        .product())
}

/// Finite sum `sum_a c_a psi_a`.
#[derive(Clone, Debug, PartialEq)]
pub struct HermiteExpansion<S: Scalar> {
    n: usize,
    coeffs: BTreeMap<MultiIndex, S>,
}

impl<S: Scalar> HermiteExpansion<S> {
    pub fn zero(n: usize) -> Self {
        HermiteExpansion {
            n,
            coeffs: BTreeMap::new(),
        }
    }

    /// Sums duplicate indices and drops exact zeros.
    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, S)>>(n: usize, terms: I) -> Result<Self> {
        let mut out = Self::zero(n);
        for (a, c) in terms {
            if a.len() != n {
                return Err(Error::Dimension {
                    expected: n,
                    got: a.len(),
                });
            }
            out.add_term(a, c);
        }
        Ok(out)
    }

    fn add_term(&mut self, a: MultiIndex, c: S) {
        let entry = self.coeffs.entry(a.clone()).or_insert_with(S::zero);
        *entry = entry.plus(&c);
        if entry.is_zero() {
            self.coeffs.remove(&a);
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coeffs(&self) -> &BTreeMap<MultiIndex, S> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        let mut out = self.clone();
        for (a, c) in &other.coeffs {
            out.add_term(a.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &S) -> Self {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.coeffs {
            out.add_term(a.clone(), c.times(s));
        }
        out
    }

    /// Scales `psi_a` by `f(|a|)`.
    pub fn scale_levels(&self, f: impl Fn(u32) -> BigRational) -> Self {
        let mut out = Self::zero(self.n);
        for (a, c) in &self.coeffs {
            out.add_term(a.clone(), c.times(&S::from_rational(&f(a.total()))));
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> Result<C64> {
        let mut acc = Complex::new(0.0, 0.0);
        for (a, c) in &self.coeffs {
            acc += c.to_c64() * psi(a, x)?;
        }
        Ok(acc)
    }

    /// The polynomial factor `sum_a c_a prod_j He_{a_j}(x_j)` written in the
    /// holomorphic variables of a [`BiPoly`].
    pub fn polynomial_part(&self) -> BiPoly<S> {
        let mut out = BiPoly::zero(self.n);
        for (a, c) in &self.coeffs {
            let mut term = BiPoly::constant(self.n, c.clone());
            for (j, &k) in a.parts().iter().enumerate() {
                let he = hermite(k);
                let mut factor = BiPoly::zero(self.n);
                for (d, coeff) in he.iter().enumerate() {
                    if coeff.is_zero() {
                        continue;
                    }
                    let w = S::from_rational(&BigRational::from_integer(coeff.clone()));
                    factor = factor
                        .add(&BiPoly::z(self.n, j).pow(d as u32).scale(&w))
                        .expect("same n");
                }
                term = term.mul(&factor).expect("same n");
            }
            out = out.add(&term).expect("same n");
        }
        out
    }
}

impl HermiteExpansion<CQ> {
    pub fn to_c64(&self) -> HermiteExpansion<C64> {
        HermiteExpansion {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(a, c)| (a.clone(), c.to_c64())).collect(),
        }
    }
}

/// `sum_a conj(c_a) d_a a!`.
pub fn l2_inner<S: Scalar>(f: &HermiteExpansion<S>, g: &HermiteExpansion<S>) -> Result<S> {
    if f.n != g.n {
        return Err(Error::Dimension {
            expected: f.n,
            got: g.n,
        });
    }
    let mut acc = S::zero();
    for (a, c) in &f.coeffs {
        if let Some(d) = g.coeffs.get(a) {
            acc = acc.plus(&c.conj().times(d).times(&S::from_rational(&multi_factorial(a.parts()))));
        }
    }
    Ok(acc)
}

/// `c_a psi_a -> c_a z^a`.
pub fn segal_bargmann<S: Scalar>(f: &HermiteExpansion<S>) -> FockElement<S> {
    let n = f.n;
    let poly = BiPoly::from_terms(
        n,
        f.coeffs
            .iter()
            .map(|(a, c)| (Monomial::new(a.clone(), MultiIndex::zeros(n)), c.clone())),
    )
    .expect("indices have length n");
    FockElement::new(poly).expect("holomorphic")
}

/// `c_a z^a -> c_a psi_a`.
pub fn segal_bargmann_inv<S: Scalar>(f: &FockElement<S>) -> HermiteExpansion<S> {
    let mut out = HermiteExpansion::zero(f.n());
    for (m, c) in f.poly().terms() {
        out.add_term(m.alpha.clone(), c.clone());
    }
    out
}

/// `sum_{|k| = level} (level choose k) prod_j conj((s+t)_j)^{k_j} psi_k`.
pub fn tuple_wave<S: Scalar>(tuple: &StiefelTuple<S>, level: u32) -> HermiteExpansion<S> {
    let n = tuple.n();
    let c = tuple.holomorphic_direction();
    let mut out = HermiteExpansion::zero(n);
    for kappa in multi_indices(n, level) {
        let mut w = S::from_rational(&BigRational::from_integer(multinomial(kappa.parts())));
        for (j, &k) in kappa.parts().iter().enumerate() {
            w = w.times(&c[j].powu(k));
        }
        out.add_term(kappa, w);
    }
    out
}

/// The same wave obtained by pulling the entire plane wave back through the
/// Segal-Bargmann map.
pub fn tuple_wave_via_fock<S: Scalar>(tuple: &StiefelTuple<S>, level: u32) -> HermiteExpansion<S> {
    segal_bargmann_inv(&entire_plane_wave(tuple, level))
}

pub type L2Projection<S> = ProjectionResult<u32, S, HermiteExpansion<S>>;

/// Orthogonal projection onto the tuple waves; coefficient `k` is
/// `<psi^(k), f> / (2^k k!)`.
pub fn l2_radon<S: Scalar>(f: &HermiteExpansion<S>, tuple: &StiefelTuple<S>) -> Result<L2Projection<S>> {
    let n = tuple.n();
    if f.n != n {
        return Err(Error::Dimension { expected: n, got: f.n });
    }
    let scale = f.coeffs.values().map(|c| c.magnitude()).fold(0.0, f64::max);
    let levels: std::collections::BTreeSet<u32> = f.coeffs.keys().map(|a| a.total()).collect();
    let mut coefficients = BTreeMap::new();
    let mut reconstructed = HermiteExpansion::zero(n);
    for k in levels {
        let wave = tuple_wave(tuple, k);
        let c = l2_inner(&wave, f)?.times(&S::from_rational(&mu_p(k)).inverse().expect("positive"));
        if crate::ball::transform::negligible(&c, scale) {
            continue;
        }
        reconstructed = reconstructed.add(&wave.scale(&c))?;
        coefficients.insert(k, c);
    }
    Ok(ProjectionResult {
        coefficients,
        reconstructed,
    })
}

/// Both sides of the commuting square: `B(R f)` and `R_F(B f)`.
pub fn commuting_square<S: Scalar>(
    f: &HermiteExpansion<S>,
    tuple: &StiefelTuple<S>,
) -> Result<(FockElement<S>, FockElement<S>)> {
    let via_l2 = segal_bargmann(&l2_radon(f, tuple)?.reconstructed);
    let via_fock = bargmann_radon(&segal_bargmann(f), tuple)?.reconstructed;
    Ok((via_l2, via_fock))
}

/// Tuple-averaged dual: level `|a|` scaled by `Gamma(n) Gamma(|a|+1) / Gamma(n+|a|)`.
pub fn l2_dual_exact<S: Scalar>(f: &HermiteExpansion<S>, n: usize) -> Result<HermiteExpansion<S>> {
    require_n(f, n)?;
    Ok(f.scale_levels(|k| holomorphic_dual_factor(k, n as u32)))
}

/// Inverse of [`l2_dual_exact`]: `psi_a` scaled by `(|a|+1)_{n-1} / Gamma(n)`,
/// the eigenvalue of `(E+1)...(E+n-1)/Gamma(n)` with `E` the number operator.
pub fn l2_invert<S: Scalar>(g: &HermiteExpansion<S>, n: usize) -> Result<HermiteExpansion<S>> {
    require_n(g, n)?;
    Ok(g.scale_levels(|k| crate::ball::transform::holomorphic_inversion_factor(k, n as u32)))
}

fn require_n<S: Scalar>(f: &HermiteExpansion<S>, n: usize) -> Result<()> {
    if f.n != n {
        return Err(Error::Dimension { expected: n, got: f.n });
    }
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    Ok(())
}

/// Applies `-Delta + a |x|^2 - c` to `P(x) exp(-|x|^2/4)` and returns the new
/// polynomial factor; `P` is written in the holomorphic variables.
pub fn oscillator_on_gaussian<S: Scalar>(p: &BiPoly<S>, a: &S, c: &S) -> Result<BiPoly<S>> {
    let n = p.n();
    // d_j (P G) = (d_j P - x_j P / 2) G
    let mut lap = BiPoly::zero(n);
    let half = S::from_rational(&BigRational::new(1.into(), 2.into()));
    for j in 0..n {
        let xj = BiPoly::z(n, j);
        let first = p.dz(j)?.sub(&xj.mul(p)?.scale(&half))?;
        let second = first.dz(j)?.sub(&xj.mul(&first)?.scale(&half))?;
        lap = lap.add(&second)?;
    }
    let norm2 = (0..n).try_fold(BiPoly::zero(n), |acc, j| BiPoly::z(n, j).pow(2).add(&acc))?;
    lap.neg().add(&norm2.mul(p)?.scale(a))?.sub(&p.scale(c))
}

/// `(-Delta + |x|^2/4 - n/2) psi_a`, which equals `|a| psi_a`.
pub fn number_operator<S: Scalar>(f: &HermiteExpansion<S>) -> Result<BiPoly<S>> {
    let n = f.n as i64;
    oscillator_on_gaussian(
        &f.polynomial_part(),
        &S::from_rational(&BigRational::new(1.into(), 4.into())),
        &S::from_rational(&BigRational::new(n.into(), 2.into())),
    )
}

/// `(-Delta + |x|^2 - n) psi / 2`, the normalisation with unit oscillator
/// frequency.
pub fn unit_frequency_operator<S: Scalar>(f: &HermiteExpansion<S>) -> Result<BiPoly<S>> {
    let half = S::from_rational(&BigRational::new(1.into(), 2.into()));
    Ok(oscillator_on_gaussian(&f.polynomial_part(), &S::one(), &S::from_i64(f.n as i64))?.scale(&half))
}

/// `true` when `psi_a` is an eigenfunction of `op` with eigenvalue `|a|`.
pub fn is_number_eigenfunction<S: Scalar>(
    alpha: &MultiIndex,
    op: impl Fn(&HermiteExpansion<S>) -> Result<BiPoly<S>>,
) -> Result<bool> {
    let f = HermiteExpansion::from_terms(alpha.len(), [(alpha.clone(), S::one())])?;
    let expected = f.polynomial_part().scale(&S::from_i64(alpha.total() as i64));
    Ok(op(&f)? == expected)
}

fn sums(tuple: &StiefelTuple<C64>, x: &[f64]) -> Result<(C64, C64)> {
    if x.len() != tuple.n() {
        return Err(Error::Dimension {
            expected: tuple.n(),
            got: x.len(),
        });
    }
    let c = tuple.holomorphic_direction();
    let l = c.iter().zip(x).map(|(cj, xj)| cj * xj).sum();
    let sigma = c.iter().map(|cj| cj * cj).sum();
    Ok((l, sigma))
}

fn gaussian(x: &[f64]) -> f64 {
    (-x.iter().map(|v| v * v).sum::<f64>() / 4.0).exp()
}

/// `psi^(k)(x) exp(|x|^2/4) / sqrt(2^k k!)` for `k = 0..=k_max`. The
/// unnormalised values obey `a_{k+1} = L a_k - k sigma a_{k-1}`; the scaling
/// keeps large `k` finite.
fn wave_values(tuple: &StiefelTuple<C64>, x: &[f64], k_max: u32) -> Result<Vec<C64>> {
    let (l, sigma) = sums(tuple, x)?;
    let mut out = Vec::with_capacity(k_max as usize + 1);
    let mut prev = Complex::new(0.0, 0.0);
    let mut cur = Complex::new(1.0, 0.0);
    for k in 0..=k_max {
        out.push(cur);
        let kf = k as f64;
        let next = l * cur / (2.0 * (kf + 1.0)).sqrt() - sigma * prev * (kf.sqrt() / (2.0 * (kf + 1.0).sqrt()));
        prev = cur;
        cur = next;
    }
    Ok(out)
}

/// `sum_{k <= k_max} psi^(k)(x) conj(psi^(k)(y)) / (2^k k!)`.
pub fn l2_kernel_series(tuple: &StiefelTuple<C64>, x: &[f64], y: &[f64], k_max: u32) -> Result<C64> {
    let a = wave_values(tuple, x, k_max)?;
    let b = wave_values(tuple, y, k_max)?;
    let sum: C64 = a.iter().zip(&b).map(|(u, v)| u * v.conj()).sum();
    Ok(sum * gaussian(x) * gaussian(y))
}

/// `rho = |sum_j conj(s+t)_j^2| / 2`, the Mehler parameter of the kernel.
pub fn kernel_rho(tuple: &StiefelTuple<C64>) -> f64 {
    let c = tuple.holomorphic_direction();
    c.iter().map(|cj| cj * cj).sum::<C64>().norm() / 2.0
}

/// `sum rho^k / k! He_k(x) He_k(y)` in closed form.
pub fn mehler(rho: f64, x: C64, y: C64) -> C64 {
    let d = 1.0 - rho * rho;
    ((x * y * 2.0 * rho - (x * x + y * y) * rho * rho) / (2.0 * d)).exp() / d.sqrt()
}

/// Closed form of the kernel series: with `sigma = sum conj(s+t)_j^2`,
/// `X = L(x) / sqrt(sigma)`, `Y = conj(L(y) / sqrt(sigma))`, the kernel is
/// `mehler(|sigma|/2, X, Y) exp(-(|x|^2 + |y|^2)/4)`.
pub fn l2_kernel_closed(tuple: &StiefelTuple<C64>, x: &[f64], y: &[f64]) -> Result<C64> {
    let (lx, sigma) = sums(tuple, x)?;
    let (ly, _) = sums(tuple, y)?;
    let g = gaussian(x) * gaussian(y);
    if sigma.norm() < 1e-12 {
        return Ok((lx * ly.conj() / 2.0).exp() * g);
    }
    let rho = sigma.norm() / 2.0;
    if (rho - 1.0).abs() < RHO_DEGENERACY {
        return Err(Error::Refused(format!(
            "rho = {rho} is 1: the kernel is a delta distribution; use the coefficient projection"
        )));
    }
    let root = sigma.sqrt();
    Ok(mehler(rho, lx / root, (ly / root).conj()) * g)
}

/// The product form with `rho_j = |(t+s)_j|^2` per coordinate:
/// `prod_j (1 - rho_j^2)^{-1/2} exp(-((1 + rho_j^2)(x_j^2 + y_j^2) - 4 rho_j x_j y_j) / (2 (1 - rho_j^2)))`.
pub fn l2_kernel_product_form(tuple: &StiefelTuple<C64>, x: &[f64], y: &[f64]) -> Result<f64> {
    let n = tuple.n();
    for v in [x, y] {
        if v.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: v.len(),
            });
        }
    }
    let plus: Vec<C64> = tuple.t().iter().zip(tuple.s()).map(|(a, b)| a + b).collect();
    let mut out = 1.0;
    for j in 0..n {
        let rho = plus[j].norm_sqr();
        if (rho - 1.0).abs() < RHO_DEGENERACY {
            return Err(Error::Refused(format!("rho_{j} = 1")));
        }
        let d = 1.0 - rho * rho;
        out *=
            (-((1.0 + rho * rho) * (x[j] * x[j] + y[j] * y[j]) - 4.0 * rho * x[j] * y[j]) / (2.0 * d)).exp() / d.sqrt();
    }
    Ok(out)
}

/// Comparison of the product form against the series at one point pair.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct KernelFormComparison {
    pub series: C64,
    pub derived: C64,
    pub derived_error: f64,
    pub product_form: f64,
    pub product_form_error: f64,
}

pub fn compare_kernel_forms(
    tuple: &StiefelTuple<C64>,
    x: &[f64],
    y: &[f64],
    k_max: u32,
) -> Result<KernelFormComparison> {
    let series = l2_kernel_series(tuple, x, y, k_max)?;
    let derived = l2_kernel_closed(tuple, x, y)?;
    let product = l2_kernel_product_form(tuple, x, y)?;
    let rel = |a: C64| (a - series).norm() / series.norm().max(1e-300);
    Ok(KernelFormComparison {
        series,
        derived,
        derived_error: rel(derived),
        product_form: product,
        product_form_error: rel(Complex::new(product, 0.0)),
    })
}
