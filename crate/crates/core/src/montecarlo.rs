//! Seeded, parallel Monte-Carlo averaging.
//!
//! Sample `i` of a run with seed `k` draws from a ChaCha stream selected by
//! `(k, i)`, so results do not depend on how samples are spread over
//! workers. Samples are processed in fixed-size chunks whose partial sums are
//! merged in chunk order.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::C64;

/// Fewer samples than this are refused.
pub const MIN_SAMPLES: usize = 100;

const CHUNK: usize = 1024;

/// Environment variable capping the worker count.
pub const THREADS_ENV: &str = "UNITARY_RADON_THREADS";

fn pool() -> &'static rayon::ThreadPool {
    static POOL: OnceLock<rayon::ThreadPool> = OnceLock::new();
    POOL.get_or_init(|| {
        let mut builder = rayon::ThreadPoolBuilder::new();
        if let Some(k) = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|k| *k > 0)
        {
            builder = builder.num_threads(k);
        }
        builder.build().expect("thread pool")
    })
}

/// Runs `f` inside the capped worker pool.
pub fn with_pool<T: Send, F: FnOnce() -> T + Send>(f: F) -> T {
    pool().install(f)
}

/// Generator for sample `index` of a run seeded with `seed`.
pub fn sample_rng(seed: u64, index: u64) -> ChaCha20Rng {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Sample mean with standard errors of its real and imaginary parts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Estimate {
    pub mean: C64,
    pub stderr_re: f64,
    pub stderr_im: f64,
}

impl Estimate {
    /// Largest deviation from `exact` in units of the standard error, per
    /// component. A component with zero spread must match to `1e-12`
    /// relative, otherwise it counts as infinitely many standard errors.
    pub fn z_score(&self, exact: C64) -> f64 {
        let one = |diff: f64, se: f64, scale: f64| {
            if se > 0.0 {
                diff.abs() / se
            } else if diff.abs() <= 1e-12 * scale.max(1.0) {
                0.0
            } else {
                f64::INFINITY
            }
        };
        let d = self.mean - exact;
        one(d.re, self.stderr_re, exact.re.abs()).max(one(d.im, self.stderr_im, exact.im.abs()))
    }
}

#[derive(Clone, Default)]
struct Accumulator {
    sum: C64,
    sq_re: f64,
    sq_im: f64,
}

type Partial<K> = BTreeMap<K, Accumulator>;

/// Averages the sparse vector returned by `f` over `samples` draws. Keys
/// missing from a draw count as zero.
pub fn estimate<K, F>(samples: usize, seed: u64, f: F) -> Result<BTreeMap<K, Estimate>>
where
    K: Ord + Clone + Send,
    F: Fn(&mut ChaCha20Rng) -> Result<Vec<(K, C64)>> + Sync,
{
    if samples < MIN_SAMPLES {
        return Err(Error::Refused(format!(
            "{samples} samples is below the minimum of {MIN_SAMPLES}"
        )));
    }
    let chunks = samples.div_ceil(CHUNK);
    let partials: Vec<Result<Partial<K>>> = with_pool(|| {
        (0..chunks)
            .into_par_iter()
            .map(|c| {
                let mut acc: Partial<K> = BTreeMap::new();
                let end = ((c + 1) * CHUNK).min(samples);
                for i in c * CHUNK..end {
                    let mut rng = sample_rng(seed, i as u64);
                    for (k, v) in f(&mut rng)? {
                        let e = acc.entry(k).or_default();
                        e.sum += v;
                        e.sq_re += v.re * v.re;
                        e.sq_im += v.im * v.im;
                    }
                }
                Ok(acc)
            })
            .collect()
    });
    let mut total: Partial<K> = BTreeMap::new();
    for partial in partials {
        for (k, a) in partial? {
            let e = total.entry(k).or_default();
            e.sum += a.sum;
            e.sq_re += a.sq_re;
            e.sq_im += a.sq_im;
        }
    }
    let nf = samples as f64;
    Ok(total
        .into_iter()
        .map(|(k, a)| {
            let mean = a.sum / nf;
            let se = |sq: f64, m: f64| {
                let var = ((sq - nf * m * m) / (nf - 1.0)).max(0.0);
                (var / nf).sqrt()
            };
            (
                k,
                Estimate {
                    mean,
                    stderr_re: se(a.sq_re, mean.re),
                    stderr_im: se(a.sq_im, mean.im),
                },
            )
        })
        .collect())
}

/// Outcome of comparing estimates against exact values.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Agreement {
    /// Largest z-score over all keys present on either side.
    pub max_z: f64,
    pub sigmas: f64,
    pub within: bool,
}

/// Compares estimates with exact values over the union of their keys.
pub fn compare<K: Ord + Clone>(estimates: &BTreeMap<K, Estimate>, exact: &BTreeMap<K, C64>, sigmas: f64) -> Agreement {
    let zero = Complex::new(0.0, 0.0);
    let mut max_z: f64 = 0.0;
    for (k, e) in estimates {
        max_z = max_z.max(e.z_score(exact.get(k).copied().unwrap_or(zero)));
    }
    for (k, v) in exact {
        if !estimates.contains_key(k) && v.norm() > 1e-12 {
            max_z = f64::INFINITY;
        }
    }
    Agreement {
        max_z,
        sigmas,
        within: max_z <= sigmas,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn uniform_mean_is_within_three_sigma() {
        let est = estimate(20_000, 3, |rng| Ok(vec![(0u8, Complex::new(rng.random::<f64>(), 0.0))])).unwrap();
        let e = est[&0];
        assert!(e.z_score(Complex::new(0.5, 0.0)) < 3.0);
        assert!((e.stderr_re - (1.0f64 / 12.0 / 20_000.0).sqrt()).abs() < 1e-4);
    }

    #[test]
    fn seeded_runs_are_identical() {
        let run = || {
            estimate(5000, 11, |rng| {
                Ok(vec![(1u8, Complex::new(rng.random::<f64>(), rng.random()))])
            })
            .unwrap()
        };
        assert_eq!(run(), run());
    }

    #[test]
    fn refuses_tiny_runs() {
        assert!(matches!(
            estimate(10, 0, |_| Ok(Vec::<(u8, C64)>::new())),
            Err(Error::Refused(_))
        ));
    }

    #[test]
    fn constant_samples_have_zero_spread() {
        let est = estimate(300, 0, |_| Ok(vec![(0u8, Complex::new(1.0, 0.0))])).unwrap();
        assert_eq!(est[&0].z_score(Complex::new(1.0, 0.0)), 0.0);
        assert_eq!(est[&0].z_score(Complex::new(1.1, 0.0)), f64::INFINITY);
    }
}
