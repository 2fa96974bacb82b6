//! Sparse polynomials in commuting formal variables `z_1..z_n, zbar_1..zbar_n`.
//!
//! `z` and `zbar` are independent indeterminates. Conjugating a polynomial
//! swaps the two multi-indices of every term and takes the ring adjoint of
//! the coefficient. Coefficients may be non-commutative (Clifford numbers);
//! products keep the left factor's coefficient on the left.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num::BigRational;

use crate::constants::{factorial_q, multi_factorial, sphere_moment};
use crate::error::{Error, Result};
use crate::linalg::{nullspace, Matrix};
use crate::scalar::{Ring, Scalar, C64, CQ};

/// Exponent vector of length `n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn new(parts: Vec<u32>) -> Self {
        MultiIndex(parts)
    }

    pub fn zeros(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn unit(n: usize, j: usize) -> Self {
        let mut v = vec![0; n];
        v[j] = 1;
        MultiIndex(v)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn factorial(&self) -> BigRational {
        multi_factorial(&self.0)
    }

    pub fn add(&self, other: &Self) -> Self {
        MultiIndex(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn lowered(&self, j: usize) -> Option<(u32, Self)> {
        let k = self.0[j];
        if k == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[j] -= 1;
        Some((k, MultiIndex(v)))
    }

    fn raised(&self, j: usize) -> Self {
        let mut v = self.0.clone();
        v[j] += 1;
        MultiIndex(v)
    }
}

/// All multi-indices of length `n` and total degree `d`, in lexicographic
/// order.
pub fn multi_indices(n: usize, d: u32) -> Vec<MultiIndex> {
    fn rec(n: usize, d: u32, prefix: &mut Vec<u32>, out: &mut Vec<MultiIndex>) {
        if prefix.len() + 1 == n {
            prefix.push(d);
            out.push(MultiIndex(prefix.clone()));
            prefix.pop();
            return;
        }
        for k in (0..=d).rev() {
            prefix.push(k);
            rec(n, d - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if d == 0 {
            out.push(MultiIndex(Vec::new()));
        }
        return out;
    }
    rec(n, d, &mut Vec::with_capacity(n), &mut out);
    out
}

/// `z^alpha zbar^beta`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    pub alpha: MultiIndex,
    pub beta: MultiIndex,
}

impl Monomial {
    pub fn new(alpha: MultiIndex, beta: MultiIndex) -> Self {
        Monomial { alpha, beta }
    }

    pub fn one(n: usize) -> Self {
        Monomial::new(MultiIndex::zeros(n), MultiIndex::zeros(n))
    }

    pub fn bidegree(&self) -> (u32, u32) {
        (self.alpha.total(), self.beta.total())
    }

    pub fn times(&self, other: &Self) -> Self {
        Monomial::new(self.alpha.add(&other.alpha), self.beta.add(&other.beta))
    }

    /// `alpha! beta!`, the Fischer weight of the monomial.
    pub fn fischer_weight(&self) -> BigRational {
        self.alpha.factorial() * self.beta.factorial()
    }

    pub fn swapped(&self) -> Self {
        Monomial::new(self.beta.clone(), self.alpha.clone())
    }
}

/// Sparse polynomial in `z, zbar` with coefficients in `R`.
#[derive(Clone, PartialEq)]
pub struct BiPoly<R: Ring> {
    n: usize,
    terms: BTreeMap<Monomial, R>,
}

impl<R: Ring> fmt::Debug for BiPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly(n={}) {{", self.n)?;
        for (m, c) in &self.terms {
            write!(f, " [{:?};{:?}]:{:?}", m.alpha.parts(), m.beta.parts(), c)?;
        }
        write!(f, " }}")
    }
}

impl<R: Ring> BiPoly<R> {
    pub fn zero(n: usize) -> Self {
        BiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: R) -> Self {
        let mut p = Self::zero(n);
        p.add_term(Monomial::one(n), c);
        p
    }

    pub fn monomial(n: usize, m: Monomial, c: R) -> Result<Self> {
        let mut p = Self::zero(n);
        p.add_checked(m, c)?;
        Ok(p)
    }

    /// Builds a polynomial from terms, summing duplicates.
    pub fn from_terms<I>(n: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, R)>,
    {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_checked(m, c)?;
        }
        Ok(p)
    }

    fn add_checked(&mut self, m: Monomial, c: R) -> Result<()> {
        for len in [m.alpha.len(), m.beta.len()] {
            if len != self.n {
                return Err(Error::Dimension {
                    expected: self.n,
                    got: len,
                });
            }
        }
        self.add_term(m, c);
        Ok(())
    }

    /// Adds `c * m`; the monomial must have length `n`.
    pub fn add_term(&mut self, m: Monomial, c: R) {
        debug_assert_eq!(m.alpha.len(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().plus(&c);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &R)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Option<&R> {
        self.terms.get(m)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    fn check_same_n(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: other.n,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.negated());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        self.map_coeffs(|c| c.negated())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_n(other)?;
        let mut out = Self::zero(self.n);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.times(m2), c1.times(c2));
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.n, R::from_scalar(R::Scalar::one()));
        for _ in 0..k {
            acc = acc.mul(self).expect("same dimension");
        }
        acc
    }

    pub fn scale(&self, s: &R::Scalar) -> Self {
        self.map_coeffs(|c| c.scaled(s))
    }

    /// Multiplies every coefficient on the left by `a`.
    pub fn left_mul(&self, a: &R) -> Self {
        self.map_coeffs(|c| a.times(c))
    }

    /// Multiplies every coefficient on the right by `a`.
    pub fn right_mul(&self, a: &R) -> Self {
        self.map_coeffs(|c| c.times(a))
    }

    pub fn map_coeffs<F: Fn(&R) -> R>(&self, f: F) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Coefficient-wise change of ring.
    pub fn map_ring<T: Ring, F: Fn(&R) -> T>(&self, f: F) -> BiPoly<T> {
        let mut out = BiPoly::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), f(c));
        }
        out
    }

    /// Scales each term by a scalar depending on its monomial.
    pub fn map_terms<F: Fn(&Monomial) -> R::Scalar>(&self, f: F) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.scaled(&f(m)));
        }
        out
    }

    fn check_index(&self, j: usize) -> Result<()> {
        if j >= self.n {
            return Err(Error::IndexOutOfRange { index: j, n: self.n });
        }
        Ok(())
    }

    /// `d/dz_j`.
    pub fn dz(&self, j: usize) -> Result<Self> {
        self.check_index(j)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if let Some((k, alpha)) = m.alpha.lowered(j) {
                out.add_term(
                    Monomial::new(alpha, m.beta.clone()),
                    c.scaled(&R::Scalar::from_i64(k as i64)),
                );
            }
        }
        Ok(out)
    }

    /// `d/dzbar_j`.
    pub fn dzbar(&self, j: usize) -> Result<Self> {
        self.check_index(j)?;
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if let Some((k, beta)) = m.beta.lowered(j) {
                out.add_term(
                    Monomial::new(m.alpha.clone(), beta),
                    c.scaled(&R::Scalar::from_i64(k as i64)),
                );
            }
        }
        Ok(out)
    }

    pub fn euler_z(&self) -> Self {
        self.map_terms(|m| R::Scalar::from_i64(m.alpha.total() as i64))
    }

    pub fn euler_zbar(&self) -> Self {
        self.map_terms(|m| R::Scalar::from_i64(m.beta.total() as i64))
    }

    /// `sum_j d/dzbar_j d/dz_j`.
    pub fn laplace_z(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            for j in 0..self.n {
                let (a, b) = (m.alpha.parts()[j], m.beta.parts()[j]);
                if a == 0 || b == 0 {
                    continue;
                }
                let alpha = m.alpha.lowered(j).expect("positive").1;
                let beta = m.beta.lowered(j).expect("positive").1;
                out.add_term(
                    Monomial::new(alpha, beta),
                    c.scaled(&R::Scalar::from_i64((a * b) as i64)),
                );
            }
        }
        out
    }

    /// Multiplication by `|z|^2 = sum z_j zbar_j`.
    pub fn mul_norm2(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            for j in 0..self.n {
                out.add_term(Monomial::new(m.alpha.raised(j), m.beta.raised(j)), c.clone());
            }
        }
        out
    }

    /// Partition of the terms by bi-degree.
    pub fn bidegree_split(&self) -> BTreeMap<(u32, u32), Self> {
        let mut out: BTreeMap<(u32, u32), Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.bidegree())
                .or_insert_with(|| Self::zero(self.n))
                .add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn bidegree_component(&self, p: u32, q: u32) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m.bidegree() == (p, q) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// The common bi-degree of all terms, if there is one. The zero
    /// polynomial has none.
    pub fn bidegree(&self) -> Option<(u32, u32)> {
        let mut degrees = self.terms.keys().map(Monomial::bidegree);
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    pub fn max_total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|m| m.alpha.total() + m.beta.total())
            .max()
            .unwrap_or(0)
    }

    pub fn is_holomorphic(&self) -> bool {
        self.terms.keys().all(|m| m.beta.total() == 0)
    }

    /// Swaps `z <-> zbar` and takes the adjoint of every coefficient.
    pub fn conj(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            out.add_term(m.swapped(), c.adjoint());
        }
        out
    }

    /// Largest coefficient magnitude.
    pub fn magnitude(&self) -> f64 {
        self.terms.values().map(Ring::magnitude).fold(0.0, f64::max)
    }

    /// Largest coefficient magnitude of `self - other`.
    pub fn distance(&self, other: &Self) -> Result<f64> {
        Ok(self.sub(other)?.magnitude())
    }

    /// Drops terms whose magnitude is at most `tol`.
    pub fn pruned(&self, tol: f64) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if c.magnitude() > tol {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Evaluates at a point, using `conj(z_j)` for `zbar_j`.
    pub fn eval(&self, z: &[R::Scalar]) -> Result<R> {
        if z.len() != self.n {
            return Err(Error::Dimension {
                expected: self.n,
                got: z.len(),
            });
        }
        let zbar: Vec<R::Scalar> = z.iter().map(|c| c.conj()).collect();
        let mut acc = R::zero();
        for (m, c) in &self.terms {
            let mut w = R::Scalar::one();
            for j in 0..self.n {
                w = w
                    .times(&z[j].powu(m.alpha.parts()[j]))
                    .times(&zbar[j].powu(m.beta.parts()[j]));
            }
            acc = acc.plus(&c.scaled(&w));
        }
        Ok(acc)
    }

    /// `true` when the Laplacian vanishes, exactly or to `tol` for floats.
    pub fn is_harmonic(&self, tol: f64) -> bool {
        let lap = self.laplace_z();
        if R::EXACT {
            lap.is_zero()
        } else {
            lap.magnitude() <= tol * self.magnitude().max(1.0)
        }
    }
}

impl<S: Scalar> BiPoly<S> {
    /// The variable `z_j`.
    pub fn z(n: usize, j: usize) -> Self {
        Self::constant_monomial(Monomial::new(MultiIndex::unit(n, j), MultiIndex::zeros(n)), n)
    }

    /// The variable `zbar_j`.
    pub fn zbar(n: usize, j: usize) -> Self {
        Self::constant_monomial(Monomial::new(MultiIndex::zeros(n), MultiIndex::unit(n, j)), n)
    }

    fn constant_monomial(m: Monomial, n: usize) -> Self {
        let mut p = Self::zero(n);
        p.add_term(m, S::one());
        p
    }

    /// Linear form `sum a_j z_j`.
    pub fn linear_z(a: &[S]) -> Self {
        let n = a.len();
        let mut p = Self::zero(n);
        for (j, c) in a.iter().enumerate() {
            p.add_term(Monomial::new(MultiIndex::unit(n, j), MultiIndex::zeros(n)), c.clone());
        }
        p
    }

    /// Linear form `sum b_j zbar_j`.
    pub fn linear_zbar(b: &[S]) -> Self {
        let n = b.len();
        let mut p = Self::zero(n);
        for (j, c) in b.iter().enumerate() {
            p.add_term(Monomial::new(MultiIndex::zeros(n), MultiIndex::unit(n, j)), c.clone());
        }
        p
    }

    /// `|z|^2` itself.
    pub fn norm2(n: usize) -> Self {
        Self::constant(n, S::one()).mul_norm2()
    }
}

/// Fischer product `sum adj(c_P) c_Q alpha! beta!` over shared monomials.
pub fn fischer<R: Ring>(p: &BiPoly<R>, q: &BiPoly<R>) -> Result<R> {
    p.check_same_n(q)?;
    let mut acc = R::zero();
    for (m, c) in &p.terms {
        if let Some(d) = q.terms.get(m) {
            let w = R::Scalar::from_rational(&m.fischer_weight());
            acc = acc.plus(&c.adjoint().times(d).scaled(&w));
        }
    }
    Ok(acc)
}

/// Fischer product by literal differentiation: apply
/// `sum conj(c) d_z^alpha d_zbar^beta` to `Q` and read off the constant term.
pub fn fischer_by_differentiation<S: Scalar>(p: &BiPoly<S>, q: &BiPoly<S>) -> Result<S> {
    p.check_same_n(q)?;
    let n = p.n;
    let mut acc = S::zero();
    for (m, c) in &p.terms {
        let mut d = q.clone();
        for j in 0..n {
            for _ in 0..m.alpha.parts()[j] {
                d = d.dz(j)?;
            }
            for _ in 0..m.beta.parts()[j] {
                d = d.dzbar(j)?;
            }
        }
        if let Some(v) = d.coeff(&Monomial::one(n)) {
            acc = acc.plus(&c.conj().times(v));
        }
    }
    Ok(acc)
}

fn difference_key(m: &Monomial) -> Vec<i64> {
    m.alpha
        .parts()
        .iter()
        .zip(m.beta.parts())
        .map(|(a, b)| *a as i64 - *b as i64)
        .collect()
}

/// Normalised sphere integral `(1/omega) int adj(P) Q dsigma`.
///
/// `conj(z^a zbar^b) z^c zbar^d = z^(b+c) zbar^(a+d)` integrates to the
/// moment of `b + c` when `b + c = a + d`, otherwise to zero.
pub fn sphere_inner<R: Ring>(p: &BiPoly<R>, q: &BiPoly<R>) -> Result<R> {
    p.check_same_n(q)?;
    let n = p.n as u32;
    let mut by_key: HashMap<Vec<i64>, Vec<(&Monomial, &R)>> = HashMap::new();
    for (m, c) in &q.terms {
        by_key.entry(difference_key(m)).or_default().push((m, c));
    }
    let mut moments: HashMap<MultiIndex, R::Scalar> = HashMap::new();
    let mut acc = R::zero();
    for (mp, cp) in &p.terms {
        let Some(partners) = by_key.get(&difference_key(mp)) else {
            continue;
        };
        let mut right = R::zero();
        for (mq, cq) in partners {
            let a = mp.beta.add(&mq.alpha);
            let w = moments
                .entry(a.clone())
                .or_insert_with(|| R::Scalar::from_rational(&sphere_moment(a.parts(), n)))
                .clone();
            right = right.plus(&cq.scaled(&w));
        }
        acc = acc.plus(&cp.adjoint().times(&right));
    }
    Ok(acc)
}

/// Monomial basis of `P_{p,q}` in `C^n`.
pub fn monomial_basis(n: usize, p: u32, q: u32) -> Vec<Monomial> {
    let alphas = multi_indices(n, p);
    let betas = multi_indices(n, q);
    let mut out = Vec::with_capacity(alphas.len() * betas.len());
    for a in &alphas {
        for b in &betas {
            out.push(Monomial::new(a.clone(), b.clone()));
        }
    }
    out
}

type BasisCache = Mutex<HashMap<(usize, u32, u32), Arc<Vec<BiPoly<CQ>>>>>;

fn basis_cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Exact basis of the complex spherical harmonics `H_{p,q}` of `C^n`: the
/// nullspace of the Laplacian on the monomial basis of `P_{p,q}`. Results
/// are memoised.
pub fn harmonic_basis(p: u32, q: u32, n: usize) -> Result<Arc<Vec<BiPoly<CQ>>>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    if let Some(hit) = basis_cache().lock().expect("cache lock").get(&(n, p, q)) {
        return Ok(hit.clone());
    }
    let cols = monomial_basis(n, p, q);
    let basis: Vec<BiPoly<CQ>> = if p == 0 || q == 0 {
        cols.into_iter().map(|m| BiPoly::constant_monomial(m, n)).collect()
    } else {
        let rows = monomial_basis(n, p - 1, q - 1);
        let row_of: HashMap<&Monomial, usize> = rows.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut mat = Matrix::<CQ>::zeros(rows.len(), cols.len());
        for (j, m) in cols.iter().enumerate() {
            let lap = BiPoly::<CQ>::constant_monomial(m.clone(), n).laplace_z();
            for (lm, c) in lap.terms() {
                mat.set(row_of[lm], j, c.clone());
            }
        }
        nullspace(&mat)
            .into_iter()
            .map(|v| BiPoly::from_terms(n, cols.iter().cloned().zip(v)).expect("consistent dimension"))
            .collect()
    };
    let basis = Arc::new(basis);
    basis_cache()
        .lock()
        .expect("cache lock")
        .entry((n, p, q))
        .or_insert_with(|| basis.clone());
    Ok(basis)
}

/// Splits a bi-homogeneous `P` of bi-degree `(p, q)` as
/// `P = sum_j |z|^{2j} H_j` with harmonic `H_j` of bi-degree `(p-j, q-j)`.
///
/// Peels from the top: `Delta^r P` only sees the `|z|^{2r}` summand, and
/// `Delta (|z|^{2m} H) = m (a + b + n + m - 1) |z|^{2m-2} H` for `H` harmonic
/// of bi-degree `(a, b)`.
pub fn fischer_decompose<S: Scalar>(poly: &BiPoly<S>) -> Result<Vec<(u32, BiPoly<S>)>> {
    let n = poly.n();
    if poly.is_zero() {
        return Ok(Vec::new());
    }
    let Some((p, q)) = poly.bidegree() else {
        return Err(Error::contract("input is not bi-homogeneous", f64::NAN));
    };
    let mut rest = poly.clone();
    let mut parts = Vec::new();
    for j in (0..=p.min(q)).rev() {
        let (a, b) = (p - j, q - j);
        let mut lap = rest.clone();
        for _ in 0..j {
            lap = lap.laplace_z();
        }
        let mut factor = S::one();
        for m in 1..=j {
            factor = factor.times(&S::from_i64((m * (a + b + n as u32 + m - 1)) as i64));
        }
        let h = lap.scale(&factor.inverse().expect("positive factor"));
        if h.is_zero() {
            continue;
        }
        let mut lifted = h.clone();
        for _ in 0..j {
            lifted = lifted.mul_norm2();
        }
        rest = rest.sub(&lifted)?;
        parts.push((j, h));
    }
    parts.reverse();
    Ok(parts)
}

/// Sum of the components, for checking a decomposition.
pub fn fischer_recompose<S: Scalar>(n: usize, parts: &[(u32, BiPoly<S>)]) -> BiPoly<S> {
    let mut out = BiPoly::zero(n);
    for (j, h) in parts {
        let mut lifted = h.clone();
        for _ in 0..*j {
            lifted = lifted.mul_norm2();
        }
        out = out.add(&lifted).expect("same dimension");
    }
    out
}

/// Convenience: the exact rational `k!` as a scalar.
pub fn factorial_scalar<S: Scalar>(k: u32) -> S {
    S::from_rational(&factorial_q(k))
}

impl BiPoly<CQ> {
    pub fn to_c64(&self) -> BiPoly<C64> {
        self.map_ring(|c| c.to_c64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constants::{dim_h, pochhammer_int};
    use crate::scalar::{cq, q, qf};
    use num::BigInt;

    type P = BiPoly<CQ>;

    fn z(n: usize, j: usize) -> P {
        P::z(n, j)
    }
    fn zb(n: usize, j: usize) -> P {
        P::zbar(n, j)
    }
    fn c(k: i64) -> CQ {
        cq(k, 0)
    }

    #[test]
    fn derivative_examples() {
        let z1sq = z(2, 0).pow(2);
        assert_eq!(z1sq.dz(0).unwrap(), z(2, 0).scale(&c(2)));
        assert!(zb(2, 0).dz(0).unwrap().is_zero());
        let p = z(2, 0).mul(&zb(2, 0).pow(2)).unwrap();
        assert_eq!(p.dzbar(0).unwrap(), z(2, 0).mul(&zb(2, 0)).unwrap().scale(&c(2)));
        assert!(matches!(p.dz(5), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn euler_examples() {
        let p = z(2, 0).pow(2).mul(&zb(2, 1)).unwrap();
        assert_eq!(p.euler_z(), p.scale(&c(2)));
        assert_eq!(p.euler_zbar(), p);
        assert!(P::constant(2, c(3)).euler_z().is_zero());
    }

    #[test]
    fn laplace_examples() {
        let a = z(2, 0).mul(&zb(2, 0)).unwrap();
        let b = z(2, 1).mul(&zb(2, 1)).unwrap();
        assert!(a.sub(&b).unwrap().laplace_z().is_zero());
        assert_eq!(a.laplace_z(), P::constant(2, c(1)));
        assert!(z(3, 0).pow(3).laplace_z().is_zero());
    }

    #[test]
    fn fischer_examples() {
        assert_eq!(fischer(&z(2, 0), &z(2, 0)).unwrap(), c(1));
        let z3 = z(2, 0).pow(3);
        assert_eq!(fischer(&z3, &z3).unwrap(), c(6));
        assert_eq!(fischer_by_differentiation(&z3, &z3).unwrap(), c(6));
        assert_eq!(fischer(&z(2, 0), &zb(2, 0)).unwrap(), c(0));
    }

    #[test]
    fn sphere_examples() {
        assert_eq!(sphere_inner(&z(2, 0), &z(2, 0)).unwrap(), CQ::from_rational(&qf(1, 2)));
        assert_eq!(sphere_inner(&z(2, 0), &z(2, 1)).unwrap(), c(0));
        let one = P::constant(2, c(1));
        assert_eq!(sphere_inner(&one, &one).unwrap(), c(1));
        // |z|^2 = 1 on the sphere
        assert_eq!(sphere_inner(&P::constant(3, c(1)), &P::norm2(3)).unwrap(), c(1));
    }

    #[test]
    fn split_examples() {
        let p = z(2, 0).add(&zb(2, 1)).unwrap();
        let split = p.bidegree_split();
        assert_eq!(split[&(1, 0)], z(2, 0));
        assert_eq!(split[&(0, 1)], zb(2, 1));
        assert!(P::zero(2).bidegree_split().is_empty());
        let sq = z(2, 0).add(&zb(2, 0)).unwrap().pow(2);
        let split = sq.bidegree_split();
        assert_eq!(split.len(), 3);
        assert_eq!(split[&(1, 1)], z(2, 0).mul(&zb(2, 0)).unwrap().scale(&c(2)));
    }

    #[test]
    fn harmonic_basis_dimensions() {
        assert_eq!(harmonic_basis(1, 1, 2).unwrap().len(), 3);
        assert_eq!(harmonic_basis(4, 0, 3).unwrap().len(), 15);
        for n in 2..=3usize {
            for p in 0..=3 {
                for qq in 0..=3 {
                    let basis = harmonic_basis(p, qq, n).unwrap();
                    assert_eq!(BigInt::from(basis.len()), dim_h(p, qq, n as u32));
                    assert!(basis.iter().all(|h| h.laplace_z().is_zero()));
                }
            }
        }
    }

    #[test]
    fn fischer_decompose_examples() {
        let r = P::norm2(2);
        let parts = fischer_decompose(&r).unwrap();
        assert_eq!(parts, vec![(1, P::constant(2, c(1)))]);

        let h = z(2, 0).mul(&zb(2, 1)).unwrap();
        assert_eq!(fischer_decompose(&h).unwrap(), vec![(0, h.clone())]);

        let p = z(2, 0).mul(&zb(2, 0)).unwrap();
        let parts = fischer_decompose(&p).unwrap();
        let half = CQ::from_rational(&qf(1, 2));
        let harmonic = p.sub(&z(2, 1).mul(&zb(2, 1)).unwrap()).unwrap().scale(&half);
        assert_eq!(parts, vec![(0, harmonic), (1, P::constant(2, half))]);

        let mixed = z(2, 0).add(&zb(2, 0)).unwrap();
        assert!(matches!(fischer_decompose(&mixed), Err(Error::Contract { .. })));
    }

    #[test]
    fn sphere_and_fischer_related_by_pochhammer() {
        for n in 2..=3usize {
            for p in 0..=3u32 {
                for qq in 0..=(3 - p) {
                    let poch = CQ::from_rational(&pochhammer_int(n as i64, p + qq));
                    for h in harmonic_basis(p, qq, n).unwrap().iter() {
                        for m in monomial_basis(n, p, qq) {
                            let mono = P::monomial(n, m, c(1)).unwrap();
                            let s = sphere_inner(h, &mono).unwrap();
                            let f = fischer(h, &mono).unwrap();
                            assert_eq!(poch.times(&s), f);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn laplacian_commutator() {
        let p = z(3, 0)
            .pow(2)
            .mul(&zb(3, 2))
            .unwrap()
            .add(&z(3, 1).mul(&z(3, 2)).unwrap().mul(&zb(3, 0)).unwrap().scale(&cq(2, -1)))
            .unwrap();
        let lhs = p.mul_norm2().laplace_z().sub(&p.laplace_z().mul_norm2()).unwrap();
        assert_eq!(lhs, p.scale(&c(3 + 3)));
    }

    #[test]
    fn evaluation() {
        let p = z(2, 0).mul(&zb(2, 1)).unwrap();
        let v = p.eval(&[cq(1, 1), cq(0, 2)]).unwrap();
        assert_eq!(v, cq(1, 1).times(&cq(0, -2)));
        let _ = q(0);
    }
}
