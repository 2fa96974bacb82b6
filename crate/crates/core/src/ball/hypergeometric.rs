//! Truncated Horn `H_3` and Gauss `2F1` series.

use num::{BigRational, Complex, Signed, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::C64;

/// Value of a truncated double or single series.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SeriesValue {
    pub value: C64,
    /// Sum of the absolute values of the terms in the last shell summed;
    /// a proxy for the truncation error.
    pub last_shell: f64,
    /// `false` when the arguments lie outside the convergence domain. The
    /// value is still the truncated sum.
    pub in_domain: bool,
}

fn non_positive_integer(x: &BigRational) -> bool {
    x.is_integer() && !x.is_positive()
}

fn to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// `(|z|, |w|)` inside the union of polydiscs `|z| < r, |w| < s` with
/// `r + (s - 1/2)^2 = 1/4`.
pub fn horn_h3_in_domain(z: C64, w: C64) -> bool {
    let (r, s) = (z.norm(), w.norm());
    if s >= 1.0 {
        return false;
    }
    let bound = if s <= 0.5 { 0.25 } else { 0.25 - (s - 0.5).powi(2) };
    r < bound
}

/// `H_3(alpha, beta, gamma; z, w) = sum (alpha)_{2m+k} (beta)_k z^m w^k /
/// ((gamma)_{m+k} m! k!)`, summed over shells `m + k <= max_terms`.
pub fn horn_h3(
    alpha: &BigRational,
    beta: &BigRational,
    gamma: &BigRational,
    z: C64,
    w: C64,
    max_terms: usize,
) -> Result<SeriesValue> {
    if non_positive_integer(gamma) {
        return Err(Error::Pole(format!("gamma = {gamma} is a non-positive integer")));
    }
    let (a, b, g) = (to_f64(alpha), to_f64(beta), to_f64(gamma));
    let mut shells = vec![Complex::new(0.0, 0.0); max_terms + 1];
    let mut shell_abs = vec![0.0; max_terms + 1];
    let mut row_head = Complex::new(1.0, 0.0);
    for m in 0..=max_terms {
        if m > 0 {
            let mf = m as f64;
            row_head *= z * ((a + 2.0 * mf - 2.0) * (a + 2.0 * mf - 1.0) / ((g + mf - 1.0) * mf));
        }
        let mut term = row_head;
        for k in 0..=(max_terms - m) {
            if k > 0 {
                let (mf, kf) = (m as f64, k as f64);
                term *= w * ((a + 2.0 * mf + kf - 1.0) * (b + kf - 1.0) / ((g + mf + kf - 1.0) * kf));
            }
            shells[m + k] += term;
            shell_abs[m + k] += term.norm();
        }
    }
    Ok(SeriesValue {
        value: shells.iter().sum(),
        last_shell: shell_abs[max_terms],
        in_domain: horn_h3_in_domain(z, w),
    })
}

/// Gauss series `sum (a)_k (b)_k x^k / ((c)_k k!)` for `|x| < 1`.
pub fn hyp2f1(a: &BigRational, b: &BigRational, c: &BigRational, x: C64, max_terms: usize) -> Result<SeriesValue> {
    if x.norm() >= 1.0 {
        return Err(Error::Domain(format!("|x| = {} is not below 1", x.norm())));
    }
    if non_positive_integer(c) {
        return Err(Error::Pole(format!("c = {c} is a non-positive integer")));
    }
    let (a, b, c) = (to_f64(a), to_f64(b), to_f64(c));
    let mut term = Complex::new(1.0, 0.0);
    let mut sum = term;
    for k in 1..=max_terms {
        let kf = k as f64;
        term *= x * ((a + kf - 1.0) * (b + kf - 1.0) / ((c + kf - 1.0) * kf));
        sum += term;
    }
    Ok(SeriesValue {
        value: sum,
        last_shell: term.norm(),
        in_domain: true,
    })
}
