//! Random exact test inputs.

use rand::Rng;

use crate::bipoly::{harmonic_basis, multi_indices, BiPoly, Monomial, MultiIndex};
use crate::clifford::{hmono_wave, spinor_basis, HermPoly, Multivector};
use crate::geometry::cayley_tuple;
use crate::scalar::{cq, Ring, CQ};

/// Gaussian integer with parts in `-3..=3`, possibly zero.
pub fn small_gaussian<R: Rng + ?Sized>(rng: &mut R) -> CQ {
    cq(rng.random_range(-3..=3), rng.random_range(-3..=3))
}

/// A harmonic polynomial of total degree at most `max_degree` with small
/// Gaussian-integer coefficients on the harmonic basis of each bi-degree.
pub fn random_harmonic<R: Rng + ?Sized>(rng: &mut R, n: usize, max_degree: u32) -> BiPoly<CQ> {
    let mut out = BiPoly::zero(n);
    for p in 0..=max_degree {
        for q in 0..=(max_degree - p) {
            let basis = harmonic_basis(p, q, n).expect("n >= 2");
            for h in basis.iter() {
                if rng.random_bool(0.5) {
                    continue;
                }
                let c = small_gaussian(rng);
                out = out.add(&h.scale(&c)).expect("same dimension");
            }
        }
    }
    out
}

/// A harmonic polynomial of a single bi-degree.
pub fn random_bihomogeneous<R: Rng + ?Sized>(rng: &mut R, n: usize, p: u32, q: u32) -> BiPoly<CQ> {
    let basis = harmonic_basis(p, q, n).expect("n >= 2");
    let mut out = BiPoly::zero(n);
    for h in basis.iter() {
        out = out.add(&h.scale(&small_gaussian(rng))).expect("same dimension");
    }
    if out.is_zero() {
        if let Some(h) = basis.first() {
            out = h.clone();
        }
    }
    out
}

/// A holomorphic polynomial of degree at most `max_degree`.
pub fn random_holomorphic<R: Rng + ?Sized>(rng: &mut R, n: usize, max_degree: u32) -> BiPoly<CQ> {
    let mut out = BiPoly::zero(n);
    for d in 0..=max_degree {
        for alpha in multi_indices(n, d) {
            if rng.random_bool(0.4) {
                continue;
            }
            let c = small_gaussian(rng);
            if !c.is_zero() {
                out.add_term(Monomial::new(alpha, MultiIndex::zeros(n)), c);
            }
        }
    }
    out
}

/// A Hermitian monogenic polynomial of total degree at most `max_degree`
/// with grade-`j` spinor coefficients, built from plane waves of a few
/// exact tuples.
pub fn random_hmonogenic<R: Rng + ?Sized>(rng: &mut R, n: usize, j: usize, max_degree: u32) -> HermPoly<CQ> {
    let basis = spinor_basis::<CQ>(n, j);
    let mut out = BiPoly::zero(n);
    while out.is_zero() {
        for _ in 0..2 {
            let tuple = cayley_tuple(n, rng.random()).expect("n >= 2");
            for p in 0..=max_degree {
                for q in 0..=(max_degree - p) {
                    if rng.random_bool(0.5) {
                        continue;
                    }
                    let alpha = basis
                        .iter()
                        .fold(Multivector::zero(), |acc, b| acc.add(&b.scale(&small_gaussian(rng))));
                    out = out
                        .add(&hmono_wave(&tuple, p, q).right_mul(&alpha))
                        .expect("same dimension");
                }
            }
        }
    }
    out
}
