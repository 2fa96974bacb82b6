//! Pointwise evaluation of the Szegő-Radon kernels.
//!
//! With `x = <z, conj(s+t)> <ubar, s+t>` and `y = <zbar, s-t> <u, conj(s-t)>`
//! the kernel is `sum (n)_{p+q} / (p! q!) (x/2)^p (y/2)^q`.

use num::{BigRational, Complex};
use serde::Serialize;

use super::hypergeometric::{horn_h3, hyp2f1};
use super::plane_wave;
use crate::bipoly::BiPoly;
use crate::constants::gamma_pq;
use crate::error::{Error, Result};
use crate::geometry::{bilinear_pair, conj_vec, norm, StiefelTuple};
use crate::projection::Branch;
use crate::scalar::{q, qf, Scalar, C64};

pub const DEFAULT_TRUNCATION: u32 = 40;

/// Shells summed by the hypergeometric closed forms.
const HORN_SHELLS: usize = 160;

/// Geometry and truncation for pointwise kernel evaluation.
#[derive(Clone, Debug, PartialEq)]
pub struct KernelParams {
    pub tuple: StiefelTuple<C64>,
    /// `(P_max, Q_max)` for the truncated double series.
    pub trunc: (u32, u32),
}

impl KernelParams {
    pub fn new(tuple: StiefelTuple<C64>) -> Self {
        KernelParams {
            tuple,
            trunc: (DEFAULT_TRUNCATION, DEFAULT_TRUNCATION),
        }
    }

    pub fn with_truncation(mut self, p: u32, q: u32) -> Self {
        self.trunc = (p, q);
        self
    }

    fn n(&self) -> usize {
        self.tuple.n()
    }
}

/// The pair `(x, y)` at which every ball kernel is evaluated.
pub fn kernel_arguments(tuple: &StiefelTuple<C64>, z: &[C64], u: &[C64]) -> Result<(C64, C64)> {
    let plus: Vec<C64> = tuple.t().iter().zip(tuple.s()).map(|(a, b)| a + b).collect();
    let minus = tuple.antiholomorphic_direction();
    let x = bilinear_pair(z, &conj_vec(&plus))? * bilinear_pair(&conj_vec(u), &plus)?;
    let y = bilinear_pair(&conj_vec(z), &minus)? * bilinear_pair(u, &conj_vec(&minus))?;
    Ok((x, y))
}

fn check_region(z: &[C64], u: &[C64]) -> Result<()> {
    let (nz, nu) = (norm(z), norm(u));
    if nz > 1.0 + 1e-12 {
        return Err(Error::Domain(format!("|z| = {nz} exceeds 1")));
    }
    if nu >= 1.0 {
        return Err(Error::Domain(format!("|u| = {nu} is not below 1")));
    }
    Ok(())
}

fn power_kernel(n: usize, w: C64) -> Result<C64> {
    let den = Complex::new(2.0, 0.0) - w;
    if den.norm() < 1e-14 {
        return Err(Error::SingularKernel(den.norm()));
    }
    Ok((Complex::new(2.0, 0.0) / den).powi(n as i32))
}

/// `(2 / (2 - x - y))^n`. Points with `|z| = 1` are accepted only while the
/// series bound `(|x| + |y|) / 2 < 1` holds.
pub fn szego_kernel_closed(params: &KernelParams, z: &[C64], u: &[C64]) -> Result<C64> {
    check_region(z, u)?;
    let (x, y) = kernel_arguments(&params.tuple, z, u)?;
    if (x.norm() + y.norm()) / 2.0 >= 1.0 {
        return Err(Error::Domain("series bound (|x| + |y|) / 2 < 1 fails".into()));
    }
    power_kernel(params.n(), x + y)
}

fn double_series(n: usize, x: C64, y: C64, pmax: u32, qmax: u32, keep: impl Fn(u32, u32) -> bool) -> C64 {
    let (a, b) = (x / 2.0, y / 2.0);
    let nf = n as f64;
    let mut total = Complex::new(0.0, 0.0);
    // c_{p,0} a^p, then walk q
    let mut head = Complex::new(1.0, 0.0);
    for p in 0..=pmax {
        if p > 0 {
            head *= a * ((nf + p as f64 - 1.0) / p as f64);
        }
        let mut term = head;
        for q in 0..=qmax {
            if q > 0 {
                term *= b * ((nf + (p + q) as f64 - 1.0) / q as f64);
            }
            if keep(p, q) {
                total += term;
            }
        }
    }
    total
}

/// Truncated double series, summed over `p <= P_max`, `q <= Q_max`.
pub fn szego_kernel_series(params: &KernelParams, z: &[C64], u: &[C64]) -> Result<C64> {
    let (x, y) = kernel_arguments(&params.tuple, z, u)?;
    Ok(double_series(
        params.n(),
        x,
        y,
        params.trunc.0,
        params.trunc.1,
        |_, _| true,
    ))
}

/// Holomorphic kernel `(2 / (2 - x))^n`.
pub fn holo_kernel_closed(params: &KernelParams, z: &[C64], u: &[C64]) -> Result<C64> {
    check_region(z, u)?;
    let (x, _) = kernel_arguments(&params.tuple, z, u)?;
    power_kernel(params.n(), x)
}

/// `sum_{p <= P_max} (1 / gamma_{p,0}) x^p`.
pub fn holo_kernel_series(params: &KernelParams, z: &[C64], u: &[C64]) -> Result<C64> {
    let (x, _) = kernel_arguments(&params.tuple, z, u)?;
    Ok(double_series(
        params.n(),
        x,
        Complex::new(0.0, 0.0),
        params.trunc.0,
        0,
        |_, _| true,
    ))
}

/// `z -> sum_{p+q <= degree} f_{p,q}(z) conj(f_{p,q}(u)) / gamma_{p,q}` as a
/// polynomial, exact for exact scalars.
pub fn kernel_section<S: Scalar>(tuple: &StiefelTuple<S>, u: &[S], degree: u32) -> Result<BiPoly<S>> {
    let n = tuple.n();
    let mut out = BiPoly::zero(n);
    for p in 0..=degree {
        for qq in 0..=(degree - p) {
            let wave = plane_wave(tuple, p, qq);
            let weight = wave.eval(u)?.conj().times(
                &S::from_rational(&gamma_pq(p, qq, n as u32))
                    .inverse()
                    .expect("positive"),
            );
            out = out.add(&wave.scale(&weight))?;
        }
    }
    Ok(out)
}

/// One branch of the split kernel together with its hypergeometric forms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SplitKernelValue {
    pub branch: Branch,
    /// Direct restricted double sum; authoritative.
    pub value: C64,
    /// `H3(n,1,1; xy/4, x/2)` for `ge`; `H3(n,1,1; xy/4, y/2) - 2F1(n/2,
    /// (n+1)/2; 1; xy)` for `lt`.
    pub closed_form: C64,
    pub closed_form_error: f64,
    /// For `lt` only: `H3(n,2,2; xy/4, y/2) - 2F1(...)`, the form with
    /// shifted Horn parameters, kept for comparison.
    pub shifted_form: Option<C64>,
    pub shifted_form_error: Option<f64>,
    pub horn_in_domain: bool,
}

fn relative_gap(a: C64, b: C64) -> f64 {
    let scale = a.norm().max(b.norm());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).norm() / scale
    }
}

/// Kernel of the split projection onto bi-degrees in `branch`, for
/// `|z| < 1/2`, `|u| < 1`.
pub fn split_kernel(branch: Branch, params: &KernelParams, z: &[C64], u: &[C64]) -> Result<SplitKernelValue> {
    let (nz, nu) = (norm(z), norm(u));
    if nz >= 0.5 || nu >= 1.0 {
        return Err(Error::Domain(format!(
            "split kernels need |z| < 1/2 and |u| < 1 (got {nz}, {nu})"
        )));
    }
    let n = params.n();
    let (x, y) = kernel_arguments(&params.tuple, z, u)?;
    let value = double_series(n, x, y, params.trunc.0, params.trunc.1, |p, q| branch.contains(p, q));
    let nq = q(n as i64);
    let one = q(1);
    let two = q(2);
    let diag = || hyp2f1(&qf(n as i64, 2), &qf(n as i64 + 1, 2), &one, x * y, 4 * HORN_SHELLS);
    let horn = |b: &BigRational, g: &BigRational, w: C64| horn_h3(&nq, b, g, x * y / 4.0, w, HORN_SHELLS);
    let (closed, shifted, in_domain) = match branch {
        Branch::Ge => {
            let h = horn(&one, &one, x / 2.0)?;
            (h.value, None, h.in_domain)
        }
        Branch::Lt => {
            let d = diag()?.value;
            let h = horn(&one, &one, y / 2.0)?;
            let shifted = horn(&two, &two, y / 2.0)?;
            (h.value - d, Some(shifted.value - d), h.in_domain)
        }
    };
    Ok(SplitKernelValue {
        branch,
        value,
        closed_form: closed,
        closed_form_error: relative_gap(closed, value),
        shifted_form: shifted,
        shifted_form_error: shifted.map(|s| relative_gap(s, value)),
        horn_in_domain: in_domain,
    })
}
