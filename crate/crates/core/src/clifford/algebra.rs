//! The complex Clifford algebra with generators `e_1..e_{2n}`, `e_i e_j +
//! e_j e_i = -2 delta_ij`, stored as a sparse map from blade bitmask to
//! coefficient.

use std::collections::BTreeMap;
use std::fmt;

use crate::scalar::{Ring, Scalar, C64, CQ};

/// Largest number of generators a blade mask can hold.
pub const MAX_GENERATORS: usize = 32;

#[derive(Clone, PartialEq)]
pub struct Multivector<S: Scalar> {
    blades: BTreeMap<u32, S>,
}

/// Sign of `e_A e_B` relative to the blade `e_{A xor B}`.
pub fn blade_sign(a: u32, b: u32) -> i32 {
    // transpositions needed to move every generator of b past the larger
    // generators of a
    let mut swaps = 0u32;
    let mut rest = a >> 1;
    while rest != 0 {
        swaps += (rest & b).count_ones();
        rest >>= 1;
    }
    // each shared generator squares to -1
    swaps += (a & b).count_ones();
    if swaps.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

impl<S: Scalar> Multivector<S> {
    pub fn zero() -> Self {
        Multivector {
            blades: BTreeMap::new(),
        }
    }

    pub fn scalar(c: S) -> Self {
        Self::blade(0, c)
    }

    pub fn one() -> Self {
        Self::scalar(S::one())
    }

    pub fn blade(mask: u32, c: S) -> Self {
        let mut out = Self::zero();
        out.add_blade(mask, c);
        out
    }

    /// Generator `e_{index+1}` (zero-based `index`).
    pub fn generator(index: usize) -> Self {
        assert!(index < MAX_GENERATORS, "generator index {index} out of range");
        Self::blade(1 << index, S::one())
    }

    pub fn from_blades<I: IntoIterator<Item = (u32, S)>>(blades: I) -> Self {
        let mut out = Self::zero();
        for (m, c) in blades {
            out.add_blade(m, c);
        }
        out
    }

    pub fn add_blade(&mut self, mask: u32, c: S) {
        let entry = self.blades.entry(mask).or_insert_with(S::zero);
        *entry = entry.plus(&c);
        if entry.is_zero() {
            self.blades.remove(&mask);
        }
    }

    pub fn blades(&self) -> impl Iterator<Item = (u32, &S)> {
        self.blades.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, mask: u32) -> S {
        self.blades.get(&mask).cloned().unwrap_or_else(S::zero)
    }

    pub fn len(&self) -> usize {
        self.blades.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blades.is_empty()
    }

    /// Highest generator index in use plus one.
    pub fn generator_span(&self) -> usize {
        self.blades
            .keys()
            .map(|m| (32 - m.leading_zeros()) as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.blades {
            for (b, cb) in &other.blades {
                let mut c = ca.times(cb);
                if blade_sign(*a, *b) < 0 {
                    c = c.negated();
                }
                out.add_blade(a ^ b, c);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.blades {
            out.add_blade(*m, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&S::one().negated())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_blades(self.blades.iter().map(|(m, c)| (*m, c.times(s))))
    }

    /// Hermitian conjugation: reverses products, conjugates coefficients and
    /// maps every generator `e_j` to `-e_j`.
    pub fn dagger(&self) -> Self {
        Self::from_blades(self.blades.iter().map(|(m, c)| {
            let k = m.count_ones();
            let sign_positive = (k * (k + 1) / 2) % 2 == 0;
            let c = c.conj();
            (*m, if sign_positive { c } else { c.negated() })
        }))
    }

    pub fn scalar_part(&self) -> S {
        self.coeff(0)
    }

    /// `ab + ba`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        self.mul(other).add(&other.mul(self))
    }

    pub fn magnitude(&self) -> f64 {
        self.blades.values().map(|c| c.magnitude()).fold(0.0, f64::max)
    }
}

impl Multivector<CQ> {
    pub fn to_c64(&self) -> Multivector<C64> {
        Multivector::from_blades(self.blades.iter().map(|(m, c)| (*m, c.to_c64())))
    }
}

impl<S: Scalar> fmt::Debug for Multivector<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.blades.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.blades {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c:?})e{m:b}")?;
        }
        Ok(())
    }
}

impl<S: Scalar> Ring for Multivector<S> {
    type Scalar = S;
    const EXACT: bool = S::EXACT;

    fn zero() -> Self {
        Multivector::zero()
    }
    fn is_zero(&self) -> bool {
        self.blades.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn minus(&self, other: &Self) -> Self {
        self.sub(other)
    }
    fn negated(&self) -> Self {
        self.neg()
    }
    fn times(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn scaled(&self, s: &S) -> Self {
        self.scale(s)
    }
    fn adjoint(&self) -> Self {
        self.dagger()
    }
    fn scalar_part(&self) -> S {
        Multivector::scalar_part(self)
    }
    fn from_scalar(s: S) -> Self {
        Multivector::scalar(s)
    }
    fn magnitude(&self) -> f64 {
        Multivector::magnitude(self)
    }
}
