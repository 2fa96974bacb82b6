//! Complex vectors, Stiefel tuples and their construction.

use num::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::linalg::{solve, Matrix};
use crate::scalar::{cq, Ring, Scalar, C64, CQ};

/// Largest accepted deviation from orthonormality for floating tuples.
pub const TUPLE_TOLERANCE: f64 = 1e-10;

fn check_len(a: usize, b: usize) -> Result<()> {
    if a != b {
        return Err(Error::Dimension { expected: a, got: b });
    }
    Ok(())
}

/// Hermitian inner product `sum z_j conj(u_j)`.
pub fn herm<S: Scalar>(z: &[S], u: &[S]) -> Result<S> {
    check_len(z.len(), u.len())?;
    Ok(z.iter()
        .zip(u)
        .fold(S::zero(), |acc, (a, b)| acc.plus(&a.times(&b.conj()))))
}

/// Bilinear pairing `sum a_j b_j` without conjugation.
pub fn bilinear_pair<S: Scalar>(a: &[S], b: &[S]) -> Result<S> {
    check_len(a.len(), b.len())?;
    Ok(a.iter().zip(b).fold(S::zero(), |acc, (x, y)| acc.plus(&x.times(y))))
}

pub fn conj_vec<S: Scalar>(v: &[S]) -> Vec<S> {
    v.iter().map(Scalar::conj).collect()
}

pub fn add_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

pub fn sub_vec<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

/// Euclidean norm of a complex vector.
pub fn norm(v: &[C64]) -> f64 {
    v.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
}

/// Pair `(t, s)` of Hermitian-orthonormal vectors in `C^n`, `n >= 2`.
#[derive(Clone, Debug, PartialEq)]
pub struct StiefelTuple<S> {
    t: Vec<S>,
    s: Vec<S>,
}

impl<S: Scalar> StiefelTuple<S> {
    /// Validates orthonormality: exactly for exact scalars, to
    /// [`TUPLE_TOLERANCE`] otherwise. Nothing is re-orthonormalised.
    pub fn new(t: Vec<S>, s: Vec<S>) -> Result<Self> {
        check_len(t.len(), s.len())?;
        if t.len() < 2 {
            return Err(Error::DimensionTooSmall(t.len()));
        }
        let tuple = StiefelTuple { t, s };
        let worst = tuple.residuals().into_iter().fold(0.0, f64::max);
        let ok = if S::EXACT {
            worst == 0.0
        } else {
            worst <= TUPLE_TOLERANCE
        };
        if !ok {
            return Err(Error::InvalidTuple(format!("orthonormality residual {worst:e}")));
        }
        Ok(tuple)
    }

    pub fn n(&self) -> usize {
        self.t.len()
    }

    pub fn t(&self) -> &[S] {
        &self.t
    }

    pub fn s(&self) -> &[S] {
        &self.s
    }

    /// `[|herm(t,t) - 1|, |herm(s,s) - 1|, |herm(t,s)|]`.
    pub fn residuals(&self) -> [f64; 3] {
        let one = S::one();
        let tt = herm(&self.t, &self.t).expect("equal lengths");
        let ss = herm(&self.s, &self.s).expect("equal lengths");
        let ts = herm(&self.t, &self.s).expect("equal lengths");
        [tt.minus(&one).magnitude(), ss.minus(&one).magnitude(), ts.magnitude()]
    }

    /// `a = conj(s + t)`, the holomorphic plane-wave direction.
    pub fn holomorphic_direction(&self) -> Vec<S> {
        conj_vec(&add_vec(&self.s, &self.t))
    }

    /// `b = s - t`, the anti-holomorphic plane-wave direction.
    pub fn antiholomorphic_direction(&self) -> Vec<S> {
        sub_vec(&self.s, &self.t)
    }

    pub fn to_c64(&self) -> StiefelTuple<C64> {
        StiefelTuple {
            t: self.t.iter().map(Scalar::to_c64).collect(),
            s: self.s.iter().map(Scalar::to_c64).collect(),
        }
    }
}

/// `t = e_i`, `s = e_j`.
pub fn axis_tuple<S: Scalar>(n: usize, i: usize, j: usize) -> Result<StiefelTuple<S>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    for index in [i, j] {
        if index >= n {
            return Err(Error::IndexOutOfRange { index, n });
        }
    }
    if i == j {
        return Err(Error::InvalidTuple(format!("axis indices coincide ({i})")));
    }
    let unit = |k: usize| -> Vec<S> { (0..n).map(|m| if m == k { S::one() } else { S::zero() }).collect() };
    StiefelTuple::new(unit(i), unit(j))
}

fn gaussian_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<C64> {
    (0..n)
        .map(|_| {
            let re: f64 = rng.sample(StandardNormal);
            let im: f64 = rng.sample(StandardNormal);
            Complex::new(re, im)
        })
        .collect()
}

/// Haar-distributed 2-frame from the given generator: two complex Gaussian
/// columns, Gram-Schmidt under `herm`.
pub fn sample_stiefel_with<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Result<StiefelTuple<C64>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    loop {
        let g1 = gaussian_vector(n, rng);
        let g2 = gaussian_vector(n, rng);
        let n1 = norm(&g1);
        if n1 < 1e-8 {
            continue;
        }
        let t: Vec<C64> = g1.iter().map(|c| c / n1).collect();
        let proj = herm(&g2, &t)?;
        let rest: Vec<C64> = g2.iter().zip(&t).map(|(g, e)| g - proj * e).collect();
        let n2 = norm(&rest);
        if n2 < 1e-8 {
            continue;
        }
        let s: Vec<C64> = rest.iter().map(|c| c / n2).collect();
        return StiefelTuple::new(t, s);
    }
}

/// Deterministic Haar sample; the same seed always yields the same tuple.
pub fn sample_stiefel(n: usize, seed: u64) -> Result<StiefelTuple<C64>> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    sample_stiefel_with(n, &mut rng)
}

/// Exactly orthonormal tuple with Gaussian-rational entries: the first two
/// columns of the Cayley transform `(I - A)(I + A)^{-1}` of a random
/// skew-Hermitian Gaussian-integer matrix `A`.
pub fn cayley_tuple(n: usize, seed: u64) -> Result<StiefelTuple<CQ>> {
    if n < 2 {
        return Err(Error::DimensionTooSmall(n));
    }
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut a = Matrix::<CQ>::zeros(n, n);
    for i in 0..n {
        a.set(i, i, cq(0, rng.random_range(-2..=2)));
        for j in i + 1..n {
            let entry = cq(rng.random_range(-2..=2), rng.random_range(-2..=2));
            a.set(j, i, entry.conj().negated());
            a.set(i, j, entry);
        }
    }
    let mut plus = a.clone();
    let mut minus = a.clone();
    for i in 0..n {
        for j in 0..n {
            let id = if i == j { CQ::one() } else { CQ::zero() };
            plus.set(i, j, id.plus(a.get(i, j)));
            minus.set(i, j, id.minus(a.get(i, j)));
        }
    }
    let column = |k: usize| -> Result<Vec<CQ>> {
        let rhs: Vec<CQ> = (0..n).map(|m| if m == k { CQ::one() } else { CQ::zero() }).collect();
        let v = solve(&plus, &rhs)?;
        Ok(minus.apply(&v))
    };
    StiefelTuple::new(column(0)?, column(1)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Ring;

    fn c(re: f64, im: f64) -> C64 {
        Complex::new(re, im)
    }

    #[test]
    fn herm_examples() {
        let e1 = vec![c(1.0, 0.0), c(0.0, 0.0)];
        let e2 = vec![c(0.0, 0.0), c(1.0, 0.0)];
        assert_eq!(herm(&e1, &e1).unwrap(), c(1.0, 0.0));
        assert_eq!(herm(&e1, &e2).unwrap(), c(0.0, 0.0));
        let z = vec![c(1.0, 1.0), c(0.0, 0.0)];
        let u = vec![c(1.0, -1.0), c(0.0, 0.0)];
        assert_eq!(herm(&z, &u).unwrap(), c(0.0, 2.0));
        assert!(herm(&z, &e1[..1]).is_err());
    }

    #[test]
    fn bilinear_examples() {
        let i = vec![c(0.0, 1.0), c(0.0, 0.0)];
        assert_eq!(bilinear_pair(&i, &i).unwrap(), c(-1.0, 0.0));
        let a = vec![c(1.0, 0.0), c(1.0, 0.0)];
        let b = vec![c(1.0, 0.0), c(-1.0, 0.0)];
        assert_eq!(bilinear_pair(&a, &b).unwrap(), c(0.0, 0.0));
    }

    #[test]
    fn axis_tuples() {
        let t: StiefelTuple<CQ> = axis_tuple(2, 0, 1).unwrap();
        assert_eq!(t.t(), &[cq(1, 0), cq(0, 0)]);
        assert_eq!(t.s(), &[cq(0, 0), cq(1, 0)]);
        assert!(herm(t.t(), t.s()).unwrap().is_zero());
        let t3: StiefelTuple<CQ> = axis_tuple(3, 2, 0).unwrap();
        assert_eq!(t3.t(), &[cq(0, 0), cq(0, 0), cq(1, 0)]);
        assert!(matches!(axis_tuple::<CQ>(3, 1, 1), Err(Error::InvalidTuple(_))));
        assert!(matches!(axis_tuple::<CQ>(1, 0, 0), Err(Error::DimensionTooSmall(1))));
    }

    #[test]
    fn sampled_tuples_are_orthonormal_and_seeded() {
        for seed in 0..50 {
            for n in 2..6 {
                let t = sample_stiefel(n, seed).unwrap();
                assert!(t.residuals().iter().all(|r| *r <= 1e-12));
            }
        }
        assert_eq!(sample_stiefel(3, 9).unwrap(), sample_stiefel(3, 9).unwrap());
        assert_ne!(sample_stiefel(3, 9).unwrap(), sample_stiefel(3, 10).unwrap());
    }

    #[test]
    fn cayley_tuples_are_exactly_orthonormal() {
        for seed in 0..20 {
            for n in 2..5 {
                let t = cayley_tuple(n, seed).unwrap();
                assert_eq!(t.residuals(), [0.0, 0.0, 0.0]);
            }
        }
    }

    #[test]
    fn plane_wave_directions_have_squared_norm_two() {
        for seed in 0..20 {
            let t = sample_stiefel(3, seed).unwrap();
            let a = t.holomorphic_direction();
            let b = t.antiholomorphic_direction();
            let aa = bilinear_pair(&conj_vec(&a), &a).unwrap();
            let bb = bilinear_pair(&conj_vec(&b), &b).unwrap();
            assert!((aa - c(2.0, 0.0)).norm() < 1e-12);
            assert!((bb - c(2.0, 0.0)).norm() < 1e-12);
            // a . b = 0 makes the plane wave harmonic
            assert!(bilinear_pair(&a, &b).unwrap().norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_non_orthonormal() {
        let t = vec![c(1.0, 0.0), c(0.0, 0.0)];
        let s = vec![c(0.1, 0.0), c(1.0, 0.0)];
        assert!(matches!(StiefelTuple::new(t, s), Err(Error::InvalidTuple(_))));
    }
}
