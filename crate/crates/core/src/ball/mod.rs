//! Szegő-Radon transform for harmonic and holomorphic functions on the unit
//! ball of `C^n`.

pub mod hypergeometric;
pub mod kernel;
pub mod transform;

use crate::bipoly::{sphere_inner, BiPoly};
use crate::error::Result;
use crate::geometry::StiefelTuple;
use crate::scalar::Scalar;

pub use kernel::{
    holo_kernel_closed, holo_kernel_series, kernel_arguments, kernel_section, split_kernel, szego_kernel_closed,
    szego_kernel_series, KernelParams, SplitKernelValue,
};
pub use transform::{
    dual_exact, dual_factor, dual_monte_carlo, general_inversion_factor, invert_general, invert_holomorphic,
    laplace_integral_oracle, reconstruct, szego_radon, szego_radon_split, BallProjection,
};

/// `<z, conj(s+t)>^p <zbar, s-t>^q` expanded as a polynomial.
pub fn plane_wave<S: Scalar>(tuple: &StiefelTuple<S>, p: u32, q: u32) -> BiPoly<S> {
    let l1 = BiPoly::linear_z(&tuple.holomorphic_direction());
    let l2 = BiPoly::linear_zbar(&tuple.antiholomorphic_direction());
    l1.pow(p).mul(&l2.pow(q)).expect("same dimension")
}

/// Sphere inner product of two plane waves of the same tuple.
pub fn plane_wave_norm_check<S: Scalar>(tuple: &StiefelTuple<S>, (p, q): (u32, u32), (w, v): (u32, u32)) -> Result<S> {
    sphere_inner(&plane_wave(tuple, p, q), &plane_wave(tuple, w, v))
}
