//! Acceptance criteria. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::Instant;

use num::{Complex, ToPrimitive};
use rand::Rng;
use unitary_radon::ball::kernel::{split_kernel, KernelParams};
use unitary_radon::ball::plane_wave;
use unitary_radon::cli::{run, JobSpec, EXIT_INVARIANT};
use unitary_radon::constants::gamma_pq;
use unitary_radon::geometry::{norm, sample_stiefel};
use unitary_radon::montecarlo::sample_rng;
use unitary_radon::projection::Branch;
use unitary_radon::report::{Check, Suite};
use unitary_radon::verify::*;
use unitary_radon::C64;

const SEED: u64 = 7;
const KERNEL_REL_TOL: f64 = 1e-10;
const MEHLER_REL_TOL: f64 = 1e-8;
const MC_SAMPLES: usize = 100_000;
const MC_MAX_SIGMAS: f64 = 3.0;
const PROJECTION_TRIALS: usize = 50;
const ROUND_TRIP_TRIALS: usize = 10;
const CLIFFORD_TUPLES: usize = 100;

struct Outcome {
    passed: bool,
    detail: String,
}

fn opts(n: usize) -> VerifyOptions {
    VerifyOptions {
        n,
        seed: SEED,
        ..VerifyOptions::default()
    }
}

fn summarize(checks: &[(String, Check)]) -> Outcome {
    let failed: Vec<String> = checks
        .iter()
        .filter(|(_, c)| !c.passed)
        .map(|(tag, c)| format!("{tag}/{} ({}: {})", c.name, c.measured, c.detail))
        .collect();
    Outcome {
        passed: failed.is_empty(),
        detail: if failed.is_empty() {
            format!("{} checks", checks.len())
        } else {
            format!("failed: {}", failed.join("; "))
        },
    }
}

fn tag(prefix: &str, checks: impl IntoIterator<Item = Check>) -> Vec<(String, Check)> {
    checks.into_iter().map(|c| (prefix.to_string(), c)).collect()
}

fn gates(prefix: &str, s: Suite) -> Vec<(String, Check)> {
    tag(prefix, s.checks.into_iter().filter(|c| c.gate))
}

fn orthogonality_tables() -> Outcome {
    let mut checks = vec![];
    for n in [2, 3] {
        checks.extend(tag(&format!("ball n={n}"), [ball_orthogonality(n, 4, SEED)]));
        checks.extend(tag(&format!("fock n={n}"), [fock_orthogonality(n, 4, SEED)]));
        checks.extend(tag(&format!("l2 n={n}"), [l2_orthogonality(n, 4, SEED)]));
    }
    summarize(&checks)
}

fn kernel_closed_forms() -> Outcome {
    let mut checks = vec![];
    for n in [2, 3] {
        let o = opts(n);
        for c in [
            ball_kernel_closed_form(&o),
            holo_kernel_closed_form(&o),
            fock_kernel_closed_form(&o),
        ] {
            let pinned = c.measured <= KERNEL_REL_TOL;
            checks.push((
                format!("n={n}"),
                Check {
                    passed: c.passed && pinned,
                    ..c
                },
            ));
        }
    }
    summarize(&checks)
}

fn ball_point(rng: &mut impl Rng, n: usize, radius: f64) -> Vec<C64> {
    let v: Vec<C64> = (0..n)
        .map(|_| Complex::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)))
        .collect();
    let r = radius * rng.random::<f64>() / norm(&v);
    v.into_iter().map(|x| x * r).collect()
}

/// Restricted sums `sum e_{p,q}(z) conj(e_{p,q}(u)) / gamma_{p,q}` built from
/// plane-wave polynomials, against `split_kernel`.
fn split_kernel_oracle(n: usize, points: usize, trunc: u32) -> Check {
    let mut rng = sample_rng(SEED, 77);
    let gamma: Vec<Vec<f64>> = (0..=trunc)
        .map(|p| {
            (0..=trunc)
                .map(|q| gamma_pq(p, q, n as u32).to_f64().unwrap())
                .collect()
        })
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..points {
        let tuple = sample_stiefel(n, 500 + i as u64).unwrap();
        let params = KernelParams::new(tuple.clone()).with_truncation(trunc, trunc);
        let z = ball_point(&mut rng, n, 0.45);
        let u = ball_point(&mut rng, n, 0.3);
        let e10 = plane_wave(&tuple, 1, 0);
        let e01 = plane_wave(&tuple, 0, 1);
        let (xz, yz) = (e10.eval(&z).unwrap(), e01.eval(&z).unwrap());
        let (xu, yu) = (e10.eval(&u).unwrap(), e01.eval(&u).unwrap());
        let mut sums = [Complex::new(0.0, 0.0); 2];
        for p in 0..=trunc {
            for q in 0..=trunc {
                let term = xz.powu(p) * yz.powu(q) * (xu.powu(p) * yu.powu(q)).conj() / gamma[p as usize][q as usize];
                sums[usize::from(p < q)] += term;
            }
        }
        for (k, branch) in [Branch::Ge, Branch::Lt].into_iter().enumerate() {
            let v = split_kernel(branch, &params, &z, &u).unwrap().value;
            worst = worst.max((v - sums[k]).norm() / sums[k].norm().max(1e-300));
        }
    }
    Check::within(
        "split_kernel_restricted_sums",
        worst,
        KERNEL_REL_TOL,
        "against plane-wave sums",
    )
}

fn split_kernels() -> Outcome {
    let mut checks = vec![];
    let mut advisory = vec![];
    for n in [2, 3] {
        checks.push((format!("n={n}"), split_kernel_oracle(n, 100, 40)));
        let s = ball_split_kernels(&opts(n));
        for c in &s.checks {
            if !c.gate {
                advisory.push(format!(
                    "{} n={n} {}",
                    c.name,
                    if c.passed {
                        "agrees".to_string()
                    } else {
                        format!("differs by {:.2e}", c.measured)
                    }
                ));
            }
        }
        checks.extend(gates(&format!("n={n}"), s));
    }
    let mut o = summarize(&checks);
    o.detail = format!("{}; printed forms: {}", o.detail, advisory.join(", "));
    o
}

fn projection_laws() -> Outcome {
    let o = VerifyOptions {
        trials: PROJECTION_TRIALS,
        ..opts(2)
    };
    let mut checks = vec![];
    for (name, f) in [
        ("szego", ball_projection_laws as fn(&mut Suite, &VerifyOptions)),
        ("bargmann", fock_projection_laws),
        ("l2", l2_projection_laws),
    ] {
        let mut s = Suite::default();
        f(&mut s, &o);
        checks.extend(gates(name, s));
    }
    let mut s = Suite::default();
    hermitian_projection_laws(&mut s, 2, hermitian_table_degree(2), PROJECTION_TRIALS, SEED);
    checks.extend(gates("hermitian", s));
    let mut out = summarize(&checks);
    out.detail = format!("{}, {PROJECTION_TRIALS} inputs each", out.detail);
    out
}

fn dual_constants() -> Outcome {
    let checks = vec![
        ("ball harmonic".to_string(), ball_dual_monte_carlo(2, MC_SAMPLES, SEED)),
        (
            "ball holomorphic".to_string(),
            holomorphic_dual_monte_carlo(2, MC_SAMPLES, SEED),
        ),
        ("fock".to_string(), fock_dual_mc(2, MC_SAMPLES, SEED)),
        ("hermitian".to_string(), hermitian_dual_mc(2, 1, 2, MC_SAMPLES, SEED)),
    ];
    let worst = checks.iter().map(|(_, c)| c.measured).fold(0.0, f64::max);
    let pinned = worst <= MC_MAX_SIGMAS;
    let mut o = summarize(&checks);
    o.passed &= pinned;
    o.detail = format!("{}, max z = {worst:.2}, N = {MC_SAMPLES}", o.detail);
    o
}

fn round_trips() -> Outcome {
    let mut checks = vec![];
    for n in [2, 3] {
        let o = VerifyOptions {
            max_degree: 5,
            trials: ROUND_TRIP_TRIALS,
            ..opts(n)
        };
        checks.extend(tag(
            &format!("n={n}"),
            [
                holomorphic_round_trip(&o),
                general_round_trip(&o),
                fock_round_trip(&o),
                l2_round_trip(&o),
            ],
        ));
        checks.extend(gates(
            &format!("hermitian n={n}"),
            hermitian_round_trips(n, HERMITIAN_MAX_DEGREE, ROUND_TRIP_TRIALS, SEED),
        ));
    }
    summarize(&checks)
}

fn clifford_suite() -> Outcome {
    let mut checks = vec![];
    for n in [2, 3, 4] {
        checks.extend(gates(&format!("n={n}"), clifford_identities(n, CLIFFORD_TUPLES, SEED)));
        checks.extend(gates(
            &format!("n={n}"),
            hermitian_wave_checks(n, hermitian_table_degree(n), SEED),
        ));
    }
    summarize(&checks)
}

fn cross_module() -> Outcome {
    let mut checks = vec![];
    for n in [2, 3] {
        checks.push((format!("n={n}"), l2_commuting_square(&opts(n))));
        checks.push((format!("n={n}"), hermitian_kernel_factor(n, 4)));
    }
    let m = mehler_oracle(&opts(2));
    let pinned = m.measured <= MEHLER_REL_TOL;
    checks.push((
        "1-d".to_string(),
        Check {
            passed: m.passed && pinned,
            ..m
        },
    ));
    summarize(&checks)
}

fn job(args: &[&str]) -> JobSpec {
    use clap::Parser;
    JobSpec::try_parse_from(std::iter::once("unitary-radon").chain(args.iter().copied())).unwrap()
}

fn constant_ledger() -> Outcome {
    let mut checks = vec![];
    let mut names = vec![];
    for n in [2, 3] {
        checks.extend(gates(&format!("n={n}"), ball_constant_identities(n, 3)));
        let s = hermitian_constant_ledger(n, 3);
        for d in &s.discrepancies {
            if !names.contains(&d.name) {
                names.push(d.name.clone());
            }
        }
        checks.extend(gates(&format!("n={n}"), s));
    }
    let strict = run(&job(&[
        "verify",
        "--space",
        "hermitian",
        "--n",
        "2",
        "--max-degree",
        "1",
        "--trials",
        "1",
        "--strict",
    ]))
    .unwrap();
    let strict_exit = strict.exit == EXIT_INVARIANT && strict.text.contains("hermitian_dual_inverse_as_printed");
    let mut o = summarize(&checks);
    o.passed &= strict_exit;
    o.detail = format!(
        "{}; printed constants reported as discrepancies [{}]; --strict exits {}",
        o.detail,
        names.join(", "),
        strict.exit
    );
    o
}

fn determinism() -> Outcome {
    let mut mismatched = vec![];
    for space in ["ball-harmonic", "ball-holomorphic", "fock", "l2", "hermitian"] {
        let args = ["verify", "--space", space, "--n", "2", "--seed", "11"];
        let a = run(&job(&args)).unwrap();
        let b = run(&job(&args)).unwrap();
        if a != b {
            mismatched.push(space.to_string());
        }
    }
    let mc = [
        "verify",
        "--space",
        "fock",
        "--n",
        "2",
        "--mc",
        "--samples",
        "5000",
        "--trials",
        "1",
    ];
    if run(&job(&mc)).unwrap() != run(&job(&mc)).unwrap() {
        mismatched.push("fock --mc".into());
    }
    Outcome {
        passed: mismatched.is_empty(),
        detail: if mismatched.is_empty() {
            "byte-identical reports for all five suites and a Monte-Carlo run".into()
        } else {
            format!("differing reports: {}", mismatched.join(", "))
        },
    }
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: Vec<Criterion> = vec![
        ("orthogonality tables", orthogonality_tables),
        ("kernel closed forms", kernel_closed_forms),
        ("split kernels", split_kernels),
        ("projection laws", projection_laws),
        ("dual constants (Monte-Carlo)", dual_constants),
        ("inversion round trips", round_trips),
        ("Clifford identities", clifford_suite),
        ("cross-module consistency", cross_module),
        ("constant ledger", constant_ledger),
        ("determinism", determinism),
    ];
    let start = Instant::now();
    let results: Vec<(Outcome, f64)> = std::thread::scope(|scope| {
        let handles: Vec<_> = criteria
            .iter()
            .map(|(_, f)| {
                scope.spawn(move || {
                    let t = Instant::now();
                    (f(), t.elapsed().as_secs_f64())
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("criterion panicked"))
            .collect()
    });
    let mut all = true;
    for (i, ((name, _), (outcome, secs))) in criteria.iter().zip(&results).enumerate() {
        all &= outcome.passed;
        println!(
            "criterion {:>2} {name}: {} ({}; {secs:.1}s)",
            i + 1,
            if outcome.passed { "PASS" } else { "FAIL" },
            outcome.detail
        );
    }
    println!(
        "acceptance: {} in {:.1}s",
        if all { "PASS" } else { "FAIL" },
        start.elapsed().as_secs_f64()
    );
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
