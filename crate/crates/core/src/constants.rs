//! Exact combinatorial constants.
//!
//! All values are [`BigRational`]; callers convert to floats at the boundary.

use num::{BigInt, BigRational, One, Zero};

use crate::scalar::q;

/// Rising factorial `(a)_k = a (a+1) ... (a+k-1)`, with `(a)_0 = 1`.
pub fn pochhammer(a: &BigRational, k: u32) -> BigRational {
    let mut acc = BigRational::one();
    let mut term = a.clone();
    for _ in 0..k {
        acc *= &term;
        term += BigRational::one();
    }
    acc
}

/// `(a)_k` for an integer base.
pub fn pochhammer_int(a: i64, k: u32) -> BigRational {
    pochhammer(&q(a), k)
}

pub fn factorial(k: u32) -> BigInt {
    (1..=k as u64).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

pub fn factorial_q(k: u32) -> BigRational {
    BigRational::from_integer(factorial(k))
}

pub fn binomial(n: u32, k: u32) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn pow2(k: u32) -> BigRational {
    BigRational::from_integer(BigInt::one() << k as usize)
}

/// Squared spherical norm of the plane wave of bi-degree `(p, q)`:
/// `2^(p+q) p! q! / (n)_(p+q)`.
pub fn gamma_pq(p: u32, q: u32, n: u32) -> BigRational {
    pow2(p + q) * factorial_q(p) * factorial_q(q) / pochhammer_int(n as i64, p + q)
}

/// Dimension of the space of complex spherical harmonics of bi-degree `(p, q)`
/// in `C^n`.
pub fn dim_h(p: u32, q: u32, n: u32) -> BigInt {
    assert!(n >= 2, "dim_h needs n >= 2");
    let num = BigInt::from(n + p + q - 1) * binomial(q + n - 2, n - 2) * binomial(p + n - 2, n - 2);
    num / BigInt::from(n - 1)
}

pub fn dim_h_q(p: u32, q: u32, n: u32) -> BigRational {
    BigRational::from_integer(dim_h(p, q, n))
}

/// Constant of the Stiefel plane-wave integral for the reproducing kernel of
/// `H_{p,q}`: `(k+n-1)! / (2^k (n-1)! (k-nu)!)`, `k = p+q`, `nu = min(p,q)`.
pub fn lambda_pq(p: u32, q: u32, n: u32) -> BigRational {
    let k = p + q;
    let nu = p.min(q);
    factorial_q(k + n - 1) / (pow2(k) * factorial_q(n - 1) * factorial_q(k - nu))
}

/// Hermitian analogue of [`lambda_pq`]:
/// `(p+1)^2 (q+1)^2 (k+n+1)! / (2^(k+2) (n-1)! (k-nu)!)`.
pub fn lambda_tilde_pq(p: u32, q: u32, n: u32) -> BigRational {
    let k = p + q;
    let nu = p.min(q);
    let sq = |x: u32| crate::scalar::q(x as i64) * crate::scalar::q(x as i64);
    sq(p + 1) * sq(q + 1) * factorial_q(k + n + 1) / (pow2(k + 2) * factorial_q(n - 1) * factorial_q(k - nu))
}

/// Fock norm of the entire plane wave of degree `p`: `2^p p!`.
pub fn mu_p(p: u32) -> BigRational {
    pow2(p) * factorial_q(p)
}

/// `Gamma(n) Gamma(p+1) / Gamma(n+p)`, the dual-transform factor on
/// holomorphic degree-`p` components.
pub fn holomorphic_dual_factor(p: u32, n: u32) -> BigRational {
    factorial_q(n - 1) * factorial_q(p) / factorial_q(n + p - 1)
}

/// Multi-index factorial `a! = prod a_j!`.
pub fn multi_factorial(a: &[u32]) -> BigRational {
    a.iter().fold(BigRational::one(), |acc, &k| acc * factorial_q(k))
}

/// Normalised sphere moment of `|z^a|^2` on `S^(2n-1)`:
/// `a! (n-1)! / (n-1+|a|)!`.
pub fn sphere_moment(a: &[u32], n: u32) -> BigRational {
    let total: u32 = a.iter().sum();
    multi_factorial(a) * factorial_q(n - 1) / factorial_q(n - 1 + total)
}

/// Multinomial coefficient `|k|! / prod k_j!`.
pub fn multinomial(parts: &[u32]) -> BigInt {
    let total: u32 = parts.iter().sum();
    let mut acc = factorial(total);
    for &k in parts {
        acc /= factorial(k);
    }
    acc
}
