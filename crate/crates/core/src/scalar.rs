//! Coefficient rings.
//!
//! Every polynomial in the crate is a [`BiPoly`](crate::bipoly::BiPoly) over
//! some [`Ring`]. Two scalar instantiations exist: [`C64`] for numerical work
//! and [`CQ`] (Gaussian rationals over big integers) for exact identities.
//! Clifford-valued polynomials use [`Multivector`](crate::clifford::Multivector)
//! as the ring.

use std::fmt::Debug;

use num::{BigInt, BigRational, Complex, One, Signed, ToPrimitive, Zero};

/// Double precision complex number.
pub type C64 = Complex<f64>;

/// Exact Gaussian rational.
pub type CQ = Complex<BigRational>;

/// Associative ring with an anti-involution and a scalar part.
///
/// For scalars the adjoint is complex conjugation and the scalar part is the
/// identity; for Clifford numbers the adjoint is the Hermitian conjugation
/// and the scalar part is the coefficient of the empty blade.
pub trait Ring: Clone + Debug + PartialEq + Send + Sync + 'static {
    type Scalar: Scalar;

    /// `true` when arithmetic is exact, so zero tests need no tolerance.
    const EXACT: bool;

    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn scaled(&self, s: &Self::Scalar) -> Self;
    fn adjoint(&self) -> Self;
    fn scalar_part(&self) -> Self::Scalar;
    fn from_scalar(s: Self::Scalar) -> Self;
    /// Largest absolute value of any component, as a float.
    fn magnitude(&self) -> f64;
}

/// Commutative field of complex scalars.
pub trait Scalar: Ring<Scalar = Self> {
    fn one() -> Self;
    fn imag_unit() -> Self;
    fn from_rational(q: &BigRational) -> Self;
    fn from_c64(c: C64) -> Self;
    fn to_c64(&self) -> C64;
    fn inverse(&self) -> Option<Self>;

    fn from_i64(k: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(k)))
    }

    fn conj(&self) -> Self {
        self.adjoint()
    }

    fn divided(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.times(&inv))
    }

    fn powu(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.times(self);
        }
        acc
    }
}

impl Ring for C64 {
    type Scalar = C64;
    const EXACT: bool = false;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn negated(&self) -> Self {
        -self
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, s: &Self) -> Self {
        self * s
    }
    fn adjoint(&self) -> Self {
        Complex::conj(self)
    }
    fn scalar_part(&self) -> Self {
        *self
    }
    fn from_scalar(s: Self) -> Self {
        s
    }
    fn magnitude(&self) -> f64 {
        self.norm()
    }
}

impl Scalar for C64 {
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn imag_unit() -> Self {
        Complex::new(0.0, 1.0)
    }
    fn from_rational(q: &BigRational) -> Self {
        Complex::new(q.to_f64().unwrap_or(f64::NAN), 0.0)
    }
    fn from_c64(c: C64) -> Self {
        c
    }
    fn to_c64(&self) -> C64 {
        *self
    }
    fn inverse(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            None
        } else {
            Some(Complex::new(1.0, 0.0) / self)
        }
    }
}

fn rational_from_f64(x: f64) -> BigRational {
    BigRational::from_float(x).unwrap_or_else(BigRational::zero)
}

impl Ring for CQ {
    type Scalar = CQ;
    const EXACT: bool = true;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn negated(&self) -> Self {
        -self.clone()
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn scaled(&self, s: &Self) -> Self {
        self * s
    }
    fn adjoint(&self) -> Self {
        Complex::new(self.re.clone(), -self.im.clone())
    }
    fn scalar_part(&self) -> Self {
        self.clone()
    }
    fn from_scalar(s: Self) -> Self {
        s
    }
    fn magnitude(&self) -> f64 {
        let re = self.re.to_f64().unwrap_or(f64::INFINITY);
        let im = self.im.to_f64().unwrap_or(f64::INFINITY);
        re.hypot(im)
    }
}

impl Scalar for CQ {
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn imag_unit() -> Self {
        Complex::new(BigRational::zero(), BigRational::one())
    }
    fn from_rational(q: &BigRational) -> Self {
        Complex::new(q.clone(), BigRational::zero())
    }
    fn from_c64(c: C64) -> Self {
        Complex::new(rational_from_f64(c.re), rational_from_f64(c.im))
    }
    fn to_c64(&self) -> C64 {
        Complex::new(
            self.re.to_f64().unwrap_or(f64::NAN),
            self.im.to_f64().unwrap_or(f64::NAN),
        )
    }
    fn inverse(&self) -> Option<Self> {
        let norm2 = &self.re * &self.re + &self.im * &self.im;
        if norm2.is_zero() {
            return None;
        }
        Some(Complex::new(&self.re / &norm2, -(&self.im / &norm2)))
    }
}

/// Exact rational from a small integer.
pub fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Exact rational `num / den`.
pub fn qf(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Gaussian rational `re + i im` from integers.
pub fn cq(re: i64, im: i64) -> CQ {
    Complex::new(q(re), q(im))
}

/// `true` if the rational is strictly positive.
pub fn is_positive(x: &BigRational) -> bool {
    x.is_positive()
}

/// Absolute difference between two scalars, as a float.
pub fn scalar_distance<S: Scalar>(a: &S, b: &S) -> f64 {
    a.minus(b).magnitude()
}

/// Relative error `|a - b| / max(|b|, tiny)`.
pub fn relative_error(a: C64, b: C64) -> f64 {
    let scale = b.norm().max(f64::MIN_POSITIVE);
    (a - b).norm() / scale
}
