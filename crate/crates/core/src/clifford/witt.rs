//! Witt basis, spinor space and the null vector of a tuple.

use num::BigRational;

use super::algebra::Multivector;
use crate::error::{Error, Result};
use crate::geometry::StiefelTuple;
use crate::scalar::{Scalar, CQ};

fn half<S: Scalar>() -> S {
    S::from_rational(&BigRational::new(1.into(), 2.into()))
}

/// `f_j = (e_j - i e_{n+j}) / 2`, or `f_j^dagger = -(e_j + i e_{n+j}) / 2`;
/// `j` is one-based.
pub fn witt<S: Scalar>(n: usize, j: usize, daggered: bool) -> Result<Multivector<S>> {
    if j == 0 || j > n {
        return Err(Error::IndexOutOfRange { index: j, n });
    }
    if 2 * n > super::algebra::MAX_GENERATORS {
        return Err(Error::Domain(format!("n = {n} exceeds the blade mask width")));
    }
    let ej = Multivector::<S>::generator(j - 1);
    let enj = Multivector::<S>::generator(n + j - 1).scale(&S::imag_unit());
    let h = half::<S>();
    Ok(if daggered {
        ej.add(&enj).scale(&h.negated())
    } else {
        ej.sub(&enj).scale(&h)
    })
}

fn witt_unchecked<S: Scalar>(n: usize, j: usize, daggered: bool) -> Multivector<S> {
    witt(n, j, daggered).expect("index in range")
}

/// `beta = sum_j f_j^dagger f_j`.
pub fn spin_euler<S: Scalar>(n: usize) -> Multivector<S> {
    (1..=n).fold(Multivector::zero(), |acc, j| {
        acc.add(&witt_unchecked::<S>(n, j, true).mul(&witt_unchecked(n, j, false)))
    })
}

/// Primitive idempotent `I = f_1 f_1^dagger ... f_n f_n^dagger`.
pub fn idempotent<S: Scalar>(n: usize) -> Multivector<S> {
    (1..=n).fold(Multivector::one(), |acc, j| {
        acc.mul(&witt_unchecked::<S>(n, j, false))
            .mul(&witt_unchecked(n, j, true))
    })
}

/// `sum_j f_j v_j`, or `sum_j f_j^dagger conj(v_j)`.
pub fn herm_vector<S: Scalar>(v: &[S], daggered: bool) -> Multivector<S> {
    let n = v.len();
    v.iter().enumerate().fold(Multivector::zero(), |acc, (j, c)| {
        let c = if daggered { c.conj() } else { c.clone() };
        acc.add(&witt_unchecked::<S>(n, j + 1, daggered).scale(&c))
    })
}

/// `tau = (t - s)(t^dagger + s^dagger)` as Hermitian Clifford vectors.
pub fn null_tau<S: Scalar>(tuple: &StiefelTuple<S>) -> Multivector<S> {
    let t = herm_vector(tuple.t(), false);
    let s = herm_vector(tuple.s(), false);
    let td = herm_vector(tuple.t(), true);
    let sd = herm_vector(tuple.s(), true);
    t.sub(&s).mul(&td.add(&sd))
}

/// `f_{a_1}^dagger ... f_{a_k}^dagger I` for the set bits of `subset`; these
/// span the spinor space, and `subset` has grade `popcount(subset)`.
pub fn spinor_basis_element<S: Scalar>(n: usize, subset: u32) -> Multivector<S> {
    let mut out = idempotent::<S>(n);
    for j in (1..=n).rev() {
        if subset & (1 << (j - 1)) != 0 {
            out = witt_unchecked::<S>(n, j, true).mul(&out);
        }
    }
    out
}

/// Basis of the grade-`j` spinors.
pub fn spinor_basis<S: Scalar>(n: usize, grade: usize) -> Vec<Multivector<S>> {
    (0u32..(1 << n))
        .filter(|m| m.count_ones() as usize == grade)
        .map(|m| spinor_basis_element(n, m))
        .collect()
}

/// Component of `x` on which left multiplication by `beta` is `grade`:
/// `prod_{k != grade} (beta - k) / (grade - k)` applied on the left.
/// Exact on spinors.
pub fn grade_projection<S: Scalar>(n: usize, grade: usize, x: &Multivector<S>) -> Multivector<S> {
    let beta = spin_euler::<S>(n);
    let mut out = x.clone();
    for k in 0..=n {
        if k == grade {
            continue;
        }
        let shifted = beta.sub(&Multivector::scalar(S::from_i64(k as i64)));
        let denom = S::from_i64(grade as i64 - k as i64).inverse().expect("nonzero");
        out = shifted.mul(&out).scale(&denom);
    }
    out
}

/// `true` when `x = x I`, so `x` lies in the spinor space `C_{2n} I`.
pub fn is_spinor<S: Scalar>(n: usize, x: &Multivector<S>) -> bool {
    x.mul(&idempotent(n)) == *x
}

/// `true` when `beta x = grade x`.
pub fn has_grade<S: Scalar>(n: usize, grade: usize, x: &Multivector<S>) -> bool {
    spin_euler::<S>(n).mul(x) == x.scale(&S::from_i64(grade as i64))
}

/// Checks the identities of the Witt basis for all index pairs:
/// `f_j f_k + f_k f_j = 0`, the same for the daggers, and
/// `f_j f_k^dagger + f_k^dagger f_j = delta_jk`.
pub fn witt_identities_hold(n: usize) -> bool {
    let z = Multivector::<CQ>::zero();
    let one = Multivector::<CQ>::one();
    for j in 1..=n {
        for k in 1..=n {
            let fj = witt_unchecked::<CQ>(n, j, false);
            let fk = witt_unchecked::<CQ>(n, k, false);
            let fjd = witt_unchecked::<CQ>(n, j, true);
            let fkd = witt_unchecked::<CQ>(n, k, true);
            if fj.anticommutator(&fk) != z || fjd.anticommutator(&fkd) != z {
                return false;
            }
            let expected = if j == k { one.clone() } else { z.clone() };
            if fj.anticommutator(&fkd) != expected {
                return false;
            }
            if fj.dagger() != fjd {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{axis_tuple, cayley_tuple};
    use crate::scalar::{cq, qf};

    type M = Multivector<CQ>;

    fn f(n: usize, j: usize) -> M {
        witt(n, j, false).unwrap()
    }

    fn fd(n: usize, j: usize) -> M {
        witt(n, j, true).unwrap()
    }

    #[test]
    fn witt_examples() {
        assert_eq!(f(2, 1).mul(&f(2, 1)), M::zero());
        assert_eq!(f(2, 1).anticommutator(&f(2, 2)), M::zero());
        assert_eq!(f(2, 1).anticommutator(&fd(2, 1)), M::one());
        for n in 2..=4 {
            assert!(witt_identities_hold(n));
        }
        assert!(witt::<CQ>(2, 0, false).is_err());
        assert!(witt::<CQ>(2, 3, true).is_err());
    }

    #[test]
    fn idempotent_examples() {
        for n in 2..=4 {
            let i = idempotent::<CQ>(n);
            assert_eq!(i.mul(&i), i);
            assert_eq!(i.scalar_part(), CQ::from_rational(&qf(1, 1 << n)));
            for j in 1..=n {
                assert_eq!(f(n, j).mul(&i), M::zero());
            }
        }
    }

    #[test]
    fn spin_euler_grades() {
        let n = 2;
        let beta = spin_euler::<CQ>(n);
        let i = idempotent::<CQ>(n);
        assert_eq!(beta.mul(&i), M::zero());
        let one = fd(n, 1).mul(&i);
        assert_eq!(beta.mul(&one), one);
        let two = fd(n, 1).mul(&fd(n, 2)).mul(&i);
        assert_eq!(beta.mul(&two), two.scale(&cq(2, 0)));
        for n in 2..=4 {
            for grade in 0..=n {
                for x in spinor_basis::<CQ>(n, grade) {
                    assert!(is_spinor(n, &x));
                    assert!(has_grade(n, grade, &x));
                    assert_eq!(grade_projection(n, grade, &x), x);
                }
            }
            // projections of a mixed spinor sum back to it
            let mixed = (0u32..(1 << n)).fold(M::zero(), |acc, m| {
                acc.add(&spinor_basis_element::<CQ>(n, m).scale(&cq(m as i64 + 1, -(m as i64))))
            });
            let total = (0..=n).fold(M::zero(), |acc, g| acc.add(&grade_projection(n, g, &mixed)));
            assert_eq!(total, mixed);
        }
    }

    #[test]
    fn hermitian_vectors() {
        let t = cayley_tuple(3, 4).unwrap();
        let tv = herm_vector(t.t(), false);
        assert_eq!(tv.mul(&tv), M::zero());
        assert_eq!(tv.dagger().mul(&tv).scalar_part(), CQ::from_rational(&qf(1, 2)));
        assert_eq!(tv.anticommutator(&herm_vector(t.t(), true)), M::one());
        assert_eq!(tv.dagger(), herm_vector(t.t(), true));
    }

    #[test]
    fn null_vector_identities() {
        for n in 2..=4 {
            for seed in 0..8 {
                let t = cayley_tuple(n, seed).unwrap();
                let tau = null_tau(&t);
                assert_eq!(tau.mul(&tau), M::zero());
                assert_eq!(tau.mul(&tau.dagger()).mul(&tau), tau.scale(&cq(4, 0)));
            }
        }
        let axis = axis_tuple::<CQ>(2, 0, 1).unwrap();
        let expected = f(2, 1)
            .mul(&fd(2, 1))
            .add(&f(2, 1).mul(&fd(2, 2)))
            .sub(&f(2, 2).mul(&fd(2, 1)))
            .sub(&f(2, 2).mul(&fd(2, 2)));
        assert_eq!(null_tau(&axis), expected);
    }
}
