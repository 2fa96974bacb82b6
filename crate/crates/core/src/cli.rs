//! Command-line front end. The binary only parses arguments and calls
//! [`run`].

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, ValueEnum};
use num::Complex;
use serde::Serialize;
use serde_json::{json, Value};

use crate::ball::kernel::{
    holo_kernel_closed, holo_kernel_series, split_kernel, szego_kernel_closed, szego_kernel_series, KernelParams,
};
use crate::ball::transform::branch_part;
use crate::ball::{dual_exact, dual_monte_carlo, invert_general, invert_holomorphic, szego_radon, szego_radon_split};
use crate::bipoly::{BiPoly, Monomial, MultiIndex};
use crate::clifford::hermitian::flatten;
use crate::clifford::{
    has_grade, herm_dual_exact, herm_dual_monte_carlo, herm_invert, herm_radon, herm_radon_split, HermPoly,
};
use crate::error::{Error, Result};
use crate::fock::{
    bargmann_kernel, bargmann_kernel_series, bargmann_radon, fock_dual_exact, fock_dual_monte_carlo, fock_invert,
    FockElement,
};
use crate::geometry::{cayley_tuple, sample_stiefel, sample_stiefel_with, StiefelTuple};
use crate::io::{
    digest, parse_herm_polynomial, parse_hermite, parse_polynomial, parse_tuple, serialize_tuple, HermPolyDoc,
    HermiteDoc, JsonScalar, PolynomialDoc, Tuple, TupleDoc,
};
use crate::montecarlo::{compare, estimate, Estimate};
use crate::projection::Branch;
use crate::realspace::{l2_dual_exact, l2_invert, l2_kernel_closed, l2_kernel_series, l2_radon, HermiteExpansion};
use crate::report::{Check, CoefficientRow, TransformReport};
use crate::scalar::{Scalar, C64, CQ};
use crate::verify::{verify, Space, VerifyOptions, MC_SIGMAS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONTRACT: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Transform,
    Invert,
    Dual,
    Verify,
    KernelEval,
    SampleStiefel,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceArg {
    BallHarmonic,
    BallHolomorphic,
    Fock,
    L2,
    Hermitian,
}

impl From<SpaceArg> for Space {
    fn from(s: SpaceArg) -> Space {
        match s {
            SpaceArg::BallHarmonic => Space::BallHarmonic,
            SpaceArg::BallHolomorphic => Space::BallHolomorphic,
            SpaceArg::Fock => Space::Fock,
            SpaceArg::L2 => Space::L2,
            SpaceArg::Hermitian => Space::Hermitian,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BranchArg {
    Ge,
    Lt,
}

impl From<BranchArg> for Branch {
    fn from(b: BranchArg) -> Branch {
        match b {
            BranchArg::Ge => Branch::Ge,
            BranchArg::Lt => Branch::Lt,
        }
    }
}

/// One invocation. Together with the library version it determines the
/// output completely.
#[derive(Clone, Debug, Parser, Serialize)]
#[command(
    name = "unitary-radon",
    version,
    about = "Radon-type transforms on the ball, Fock space, L2 and Hermitian spinor spaces"
)]
pub struct JobSpec {
    pub command: Command,
    #[arg(long, value_enum)]
    pub space: Option<SpaceArg>,
    /// Input document; `-` reads stdin.
    #[arg(long = "in", value_name = "FILE")]
    pub input: Option<String>,
    #[arg(long, value_name = "FILE")]
    #[serde(skip)]
    pub out: Option<String>,
    /// `axis:i,j` (0-based), `haar:SEED`, `cayley:SEED`, inline JSON or a file.
    #[arg(long, value_name = "SPEC")]
    pub tuple: Option<String>,
    #[arg(long)]
    pub n: Option<usize>,
    /// Series truncation `P,Q`.
    #[arg(long, value_name = "P,Q", value_parser = parse_trunc)]
    pub trunc: Option<(u32, u32)>,
    #[arg(long)]
    pub samples: Option<usize>,
    #[arg(long, default_value_t = 7)]
    pub seed: u64,
    /// Sigma threshold for Monte-Carlo agreement.
    #[arg(long)]
    pub tol: Option<f64>,
    /// Estimate the dual by Monte-Carlo integration over the Stiefel manifold.
    #[arg(long)]
    pub mc: bool,
    #[arg(long)]
    pub max_degree: Option<u32>,
    /// Spinor grade of Hermitian inputs; inferred when omitted.
    #[arg(long)]
    pub grade: Option<usize>,
    #[arg(long)]
    pub trials: Option<usize>,
    #[arg(long)]
    pub points: Option<usize>,
    /// Restrict a ball projection or kernel to one branch of bi-degrees.
    #[arg(long, value_enum)]
    pub branch: Option<BranchArg>,
    /// Treat comparisons with printed closed forms as gates.
    #[arg(long)]
    pub strict: bool,
    /// Grid points per axis for kernel-eval.
    #[arg(long, default_value_t = 21)]
    pub grid: usize,
    /// Grid half-width for kernel-eval.
    #[arg(long)]
    pub radius: Option<f64>,
    /// Evaluate kernels by their truncated series.
    #[arg(long)]
    pub series: bool,
    /// Record wall time in the report.
    #[arg(long)]
    #[serde(skip)]
    pub timing: bool,
}

fn parse_trunc(s: &str) -> std::result::Result<(u32, u32), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected P,Q, got {s:?}"))?;
    let p = a.trim().parse().map_err(|e| format!("{e}"))?;
    let q = b.trim().parse().map_err(|e| format!("{e}"))?;
    Ok((p, q))
}

/// Text to emit and the process exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub text: String,
    pub exit: i32,
}

/// Exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::Io(_) => 1,
        _ => EXIT_CONTRACT,
    }
}

pub fn run(job: &JobSpec) -> Result<Outcome> {
    run_with(job, None)
}

/// Like [`run`], with the input document given in memory instead of `--in`.
pub fn run_document(job: &JobSpec, document: &str) -> Result<Outcome> {
    run_with(job, Some(document))
}

fn run_with(job: &JobSpec, document: Option<&str>) -> Result<Outcome> {
    let start = Instant::now();
    match job.command {
        Command::SampleStiefel => {
            let n = job.n.unwrap_or(2);
            let t = sample_stiefel(n, job.seed)?;
            return Ok(Outcome {
                text: serialize_tuple(&t) + "\n",
                exit: EXIT_OK,
            });
        }
        Command::KernelEval => {
            return Ok(Outcome {
                text: kernel_eval(job)?,
                exit: EXIT_OK,
            })
        }
        _ => {}
    }
    let space: Space = job
        .space
        .ok_or_else(|| Error::Domain("--space is required".into()))?
        .into();
    let mut report = TransformReport::new(command_name(job.command), Some(space.name()));
    report.param("job", job);
    match job.command {
        Command::Verify => run_verify(job, space, &mut report)?,
        _ => {
            let text = match document {
                Some(d) => d.to_string(),
                None => read_input(job)?,
            };
            report.input_digest = Some(digest(text.as_bytes()));
            let input = Input::parse(space, &text)?;
            if let Some(n) = job.n {
                if n != input.n() {
                    return Err(Error::Dimension {
                        expected: n,
                        got: input.n(),
                    });
                }
            }
            match job.command {
                Command::Transform => transform(job, &input, &mut report)?,
                Command::Dual => dual(job, &input, &mut report)?,
                Command::Invert => invert(job, &input, &mut report)?,
                _ => unreachable!(),
            }
        }
    }
    if job.strict {
        report.passed = report.checks.iter().all(|c| c.passed);
    }
    if job.timing {
        report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
    }
    Ok(Outcome {
        exit: if report.passed { EXIT_OK } else { EXIT_INVARIANT },
        text: report.to_json(),
    })
}

fn command_name(c: Command) -> &'static str {
    match c {
        Command::Transform => "transform",
        Command::Invert => "invert",
        Command::Dual => "dual",
        Command::Verify => "verify",
        Command::KernelEval => "kernel-eval",
        Command::SampleStiefel => "sample-stiefel",
    }
}

fn read_input(job: &JobSpec) -> Result<String> {
    let path = job
        .input
        .as_deref()
        .ok_or_else(|| Error::Domain("--in is required".into()))?;
    if path == "-" {
        let mut s = String::new();
        std::io::Read::read_to_string(&mut std::io::stdin(), &mut s).map_err(|e| Error::Io(e.to_string()))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))
    }
}

enum Input {
    Poly(Space, BiPoly<CQ>),
    Hermite(HermiteExpansion<CQ>),
    Herm(HermPoly<CQ>),
}

impl Input {
    fn parse(space: Space, text: &str) -> Result<Input> {
        Ok(match space {
            Space::L2 => Input::Hermite(parse_hermite(text)?),
            Space::Hermitian => Input::Herm(parse_herm_polynomial(text)?),
            _ => {
                let p = parse_polynomial(text)?;
                if space != Space::BallHarmonic && !p.is_holomorphic() {
                    return Err(Error::contract("input has antiholomorphic terms", 1.0));
                }
                Input::Poly(space, p)
            }
        })
    }

    fn n(&self) -> usize {
        match self {
            Input::Poly(_, p) => p.n(),
            Input::Hermite(f) => f.n(),
            Input::Herm(p) => p.n(),
        }
    }
}

fn resolve_tuple(spec: &str, n: usize) -> Result<Tuple> {
    let parse_seed = |s: &str| {
        s.trim()
            .parse::<u64>()
            .map_err(|e| Error::parse("tuple", e.to_string()))
    };
    if let Some(rest) = spec.strip_prefix("axis:") {
        let (a, b) = rest
            .split_once(',')
            .ok_or_else(|| Error::parse("tuple", "expected axis:i,j"))?;
        let i = a.trim().parse().map_err(|_| Error::parse("tuple", "bad axis index"))?;
        let j = b.trim().parse().map_err(|_| Error::parse("tuple", "bad axis index"))?;
        return TupleDoc::Axis { axis: [i, j] }.resolve(n);
    }
    if let Some(rest) = spec.strip_prefix("haar:") {
        return TupleDoc::Haar {
            haar_seed: parse_seed(rest)?,
        }
        .resolve(n);
    }
    if let Some(rest) = spec.strip_prefix("cayley:") {
        return Ok(Tuple::Exact(cayley_tuple(n, parse_seed(rest)?)?));
    }
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec).map_err(|e| Error::Io(format!("{spec}: {e}")))?
    };
    parse_tuple(&text)?.resolve(n)
}

fn require_tuple(job: &JobSpec, n: usize) -> Result<Tuple> {
    let spec = job
        .tuple
        .as_deref()
        .ok_or_else(|| Error::Domain("--tuple is required".into()))?;
    resolve_tuple(spec, n)
}

fn monomial_key(m: &Monomial) -> Value {
    json!({"alpha": m.alpha.parts(), "beta": m.beta.parts()})
}

fn index_key(a: &MultiIndex) -> Value {
    json!(a.parts())
}

fn poly_value<S: JsonScalar>(p: &BiPoly<S>) -> Value {
    serde_json::to_value(PolynomialDoc::from_poly(p)).expect("document")
}

fn hermite_value<S: JsonScalar>(f: &HermiteExpansion<S>) -> Value {
    serde_json::to_value(HermiteDoc::from_expansion(f)).expect("document")
}

fn herm_value<S: JsonScalar>(p: &HermPoly<S>) -> Value {
    serde_json::to_value(HermPolyDoc::from_poly(p)).expect("document")
}

fn tuple_residual(report: &mut TransformReport, t: &StiefelTuple<C64>) {
    let r = t.residuals();
    report
        .residuals
        .insert("tuple_orthonormality".into(), r.iter().cloned().fold(0.0, f64::max));
}

fn herm_grade(job: &JobSpec, f: &HermPoly<CQ>) -> Result<usize> {
    if let Some(j) = job.grade {
        return Ok(j);
    }
    let n = f.n();
    (0..=n)
        .find(|&j| f.terms().all(|(_, c)| has_grade(n, j, c)))
        .ok_or_else(|| Error::contract("coefficients do not share a spinor grade; pass --grade", 1.0))
}

fn transform(job: &JobSpec, input: &Input, report: &mut TransformReport) -> Result<()> {
    let tuple = require_tuple(job, input.n())?;
    tuple_residual(report, &tuple.to_c64());
    let branch = job.branch.map(Branch::from);
    match tuple {
        Tuple::Exact(t) => transform_with(input, &t, branch, |p| p.clone(), |f| f.clone(), |h| h.clone(), report),
        Tuple::Float(t) => transform_with(
            input,
            &t,
            branch,
            |p| p.to_c64(),
            |f| f.to_c64(),
            |h| h.map_ring(|c| c.to_c64()),
            report,
        ),
    }
}

fn transform_with<S: JsonScalar>(
    input: &Input,
    t: &StiefelTuple<S>,
    branch: Option<Branch>,
    poly: impl Fn(&BiPoly<CQ>) -> BiPoly<S>,
    hermite: impl Fn(&HermiteExpansion<CQ>) -> HermiteExpansion<S>,
    herm: impl Fn(&HermPoly<CQ>) -> HermPoly<S>,
    report: &mut TransformReport,
) -> Result<()> {
    match input {
        Input::Poly(Space::Fock, p) => {
            let r = bargmann_radon(&FockElement::new(poly(p))?, t)?;
            for (k, c) in &r.coefficients {
                report.coefficients.push(CoefficientRow::new(json!(k), None, c));
            }
            report.output = Some(poly_value(r.reconstructed.poly()));
        }
        Input::Poly(_, p) => {
            let f = poly(p);
            let r = match branch {
                Some(b) => szego_radon_split(&f, t, b)?,
                None => szego_radon(&f, t)?,
            };
            for ((a, b), c) in &r.coefficients {
                report.coefficients.push(CoefficientRow::new(json!([a, b]), None, c));
            }
            report.output = Some(poly_value(&r.reconstructed));
        }
        Input::Hermite(f) => {
            let r = l2_radon(&hermite(f), t)?;
            for (k, c) in &r.coefficients {
                report.coefficients.push(CoefficientRow::new(json!(k), None, c));
            }
            report.output = Some(hermite_value(&r.reconstructed));
        }
        Input::Herm(f) => {
            let f = herm(f);
            let r = match branch {
                Some(b) => herm_radon_split(&f, t, b)?,
                None => herm_radon(&f, t)?,
            };
            for ((a, b), c) in &r.coefficients {
                for (mask, v) in c.blades() {
                    report
                        .coefficients
                        .push(CoefficientRow::new(json!([a, b]), Some(mask), v));
                }
            }
            report.output = Some(herm_value(&r.reconstructed));
        }
    }
    Ok(())
}

fn dual(job: &JobSpec, input: &Input, report: &mut TransformReport) -> Result<()> {
    let n = input.n();
    if job.mc {
        // the exact dual goes to `output` for comparison
        let samples = job.samples.unwrap_or(100_000);
        let sigmas = job.tol.unwrap_or(MC_SIGMAS);
        report.param("samples", samples);
        report.param("sigmas", sigmas);
        let (rows, max_z) = match input {
            Input::Poly(Space::Fock, p) => {
                let est = fock_dual_monte_carlo(&FockElement::new(p.to_c64())?, n, samples, job.seed)?;
                let exact = fock_dual_exact(&FockElement::new(p.clone())?, n)?.into_poly();
                report.output = Some(poly_value(&exact));
                monomial_rows(&est, &exact)
            }
            Input::Poly(_, p) => {
                let est = dual_monte_carlo(&p.to_c64(), n, samples, job.seed)?;
                let exact = dual_exact(p, n)?;
                report.output = Some(poly_value(&exact));
                monomial_rows(&est, &exact)
            }
            Input::Hermite(f) => {
                let fc = f.to_c64();
                let est = estimate(samples, job.seed, |rng| {
                    let t = sample_stiefel_with(n, rng)?;
                    let image = l2_radon(&fc, &t)?.reconstructed;
                    Ok(image.coeffs().iter().map(|(a, c)| (a.clone(), *c)).collect())
                })?;
                let exact_doc = l2_dual_exact(f, n)?;
                report.output = Some(hermite_value(&exact_doc));
                let exact: BTreeMap<MultiIndex, C64> = exact_doc
                    .coeffs()
                    .iter()
                    .map(|(a, c)| (a.clone(), c.to_c64()))
                    .collect();
                let rows = est
                    .iter()
                    .map(|(a, e)| CoefficientRow::estimate(index_key(a), None, e))
                    .collect();
                (rows, compare(&est, &exact, sigmas).max_z)
            }
            Input::Herm(f) => {
                let j = herm_grade(job, f)?;
                report.param("grade", j);
                let est = herm_dual_monte_carlo(&f.map_ring(|c| c.to_c64()), n, samples, job.seed)?;
                let exact_doc = herm_dual_exact(f, n, j)?;
                report.output = Some(herm_value(&exact_doc));
                let exact: BTreeMap<(Monomial, u32), C64> =
                    flatten(&exact_doc).into_iter().map(|(k, v)| (k, v.to_c64())).collect();
                let rows = est
                    .iter()
                    .map(|((m, mask), e)| CoefficientRow::estimate(monomial_key(m), Some(*mask), e))
                    .collect();
                (rows, compare(&est, &exact, sigmas).max_z)
            }
        };
        report.coefficients = rows;
        report.add_suite(single(Check::within(
            "dual_monte_carlo",
            max_z,
            sigmas,
            format!("max z-score against the exact dual, N = {samples}"),
        )));
        return Ok(());
    }
    let round_trip = match input {
        Input::Poly(Space::Fock, p) => {
            let f = FockElement::new(p.clone())?;
            let g = fock_dual_exact(&f, n)?;
            report.output = Some(poly_value(g.poly()));
            fock_invert(&g, n)? == f
        }
        Input::Poly(Space::BallHolomorphic, p) => {
            let g = dual_exact(p, n)?;
            report.output = Some(poly_value(&g));
            invert_holomorphic(&g, n)? == *p
        }
        Input::Poly(_, p) => {
            let g = dual_exact(p, n)?;
            report.output = Some(poly_value(&g));
            invert_ball(&g, n)? == *p
        }
        Input::Hermite(f) => {
            let g = l2_dual_exact(f, n)?;
            report.output = Some(hermite_value(&g));
            l2_invert(&g, n)? == *f
        }
        Input::Herm(f) => {
            let j = herm_grade(job, f)?;
            report.param("grade", j);
            let g = herm_dual_exact(f, n, j)?;
            report.output = Some(herm_value(&g));
            invert_herm(&g, n, j)? == *f
        }
    };
    report.add_suite(single(Check::exact("round_trip", usize::from(!round_trip), 1)));
    Ok(())
}

fn monomial_rows(est: &BTreeMap<Monomial, Estimate>, exact: &BiPoly<CQ>) -> (Vec<CoefficientRow>, f64) {
    let exact: BTreeMap<Monomial, C64> = exact.terms().map(|(m, c)| (m.clone(), c.to_c64())).collect();
    let rows = est
        .iter()
        .map(|(m, e)| CoefficientRow::estimate(monomial_key(m), None, e))
        .collect();
    (rows, compare(est, &exact, f64::INFINITY).max_z)
}

fn single(c: Check) -> crate::report::Suite {
    let mut s = crate::report::Suite::default();
    s.push(c);
    s
}

fn invert_ball(g: &BiPoly<CQ>, n: usize) -> Result<BiPoly<CQ>> {
    let mut out = BiPoly::zero(n);
    for b in Branch::both() {
        out = out.add(&invert_general(&branch_part(g, b), n, b)?)?;
    }
    Ok(out)
}

fn invert_herm(g: &HermPoly<CQ>, n: usize, j: usize) -> Result<HermPoly<CQ>> {
    let mut out = BiPoly::zero(n);
    for b in Branch::both() {
        out = out.add(&herm_invert(&branch_part(g, b), n, j, b)?)?;
    }
    Ok(out)
}

fn invert(job: &JobSpec, input: &Input, report: &mut TransformReport) -> Result<()> {
    let n = input.n();
    let round_trip = match input {
        Input::Poly(Space::Fock, p) => {
            let g = FockElement::new(p.clone())?;
            let f = fock_invert(&g, n)?;
            report.output = Some(poly_value(f.poly()));
            fock_dual_exact(&f, n)? == g
        }
        Input::Poly(Space::BallHolomorphic, p) => {
            let f = invert_holomorphic(p, n)?;
            report.output = Some(poly_value(&f));
            dual_exact(&f, n)? == *p
        }
        Input::Poly(_, p) => {
            let f = invert_ball(p, n)?;
            report.output = Some(poly_value(&f));
            dual_exact(&f, n)? == *p
        }
        Input::Hermite(g) => {
            let f = l2_invert(g, n)?;
            report.output = Some(hermite_value(&f));
            l2_dual_exact(&f, n)? == *g
        }
        Input::Herm(g) => {
            let j = herm_grade(job, g)?;
            report.param("grade", j);
            let f = invert_herm(g, n, j)?;
            report.output = Some(herm_value(&f));
            herm_dual_exact(&f, n, j)? == *g
        }
    };
    report.add_suite(single(Check::exact("round_trip", usize::from(!round_trip), 1)));
    Ok(())
}

/// Options of a `verify` job with defaults filled in.
pub fn verify_options(job: &JobSpec) -> VerifyOptions {
    let d = VerifyOptions::default();
    VerifyOptions {
        n: job.n.unwrap_or(d.n),
        max_degree: job.max_degree.unwrap_or(d.max_degree),
        seed: job.seed,
        trials: job.trials.unwrap_or(d.trials),
        points: job.points.unwrap_or(d.points),
        samples: job.mc.then(|| job.samples.unwrap_or(100_000)),
        trunc: job.trunc.unwrap_or(d.trunc),
    }
}

fn run_verify(job: &JobSpec, space: Space, report: &mut TransformReport) -> Result<()> {
    let opts = verify_options(job);
    report.param("options", &opts);
    report.add_suite(verify(space, &opts)?);
    Ok(())
}

/// CSV of kernel values `K(x d, y d)` on a square grid, with `d` the first
/// coordinate direction.
fn kernel_eval(job: &JobSpec) -> Result<String> {
    let space: Space = job
        .space
        .ok_or_else(|| Error::Domain("--space is required".into()))?
        .into();
    let n = job.n.unwrap_or(2);
    let tuple = require_tuple(job, n)?.to_c64();
    let (tp, tq) = job.trunc.unwrap_or((40, 40));
    let radius = job.radius.unwrap_or(match space {
        Space::BallHarmonic | Space::BallHolomorphic | Space::Hermitian => 0.9,
        Space::Fock | Space::L2 => 3.0,
    });
    if job.grid < 2 {
        return Err(Error::Domain("--grid must be at least 2".into()));
    }
    let params = KernelParams::new(tuple.clone()).with_truncation(tp, tq);
    let axis = |x: f64| -> Vec<C64> {
        let mut v = vec![Complex::new(0.0, 0.0); n];
        v[0] = Complex::new(x, 0.0);
        v
    };
    let mut out = String::from("x,y,k_re,k_im\n");
    for i in 0..job.grid {
        for k in 0..job.grid {
            let x = -radius + 2.0 * radius * i as f64 / (job.grid - 1) as f64;
            let y = -radius + 2.0 * radius * k as f64 / (job.grid - 1) as f64;
            let (z, u) = (axis(x), axis(y));
            let value = match space {
                Space::BallHarmonic | Space::Hermitian => {
                    let v = match job.branch {
                        Some(b) => split_kernel(b.into(), &params, &z, &u)?.value,
                        None if job.series => szego_kernel_series(&params, &z, &u)?,
                        None => szego_kernel_closed(&params, &z, &u)?,
                    };
                    if space == Space::Hermitian {
                        v * 0.25
                    } else {
                        v
                    }
                }
                Space::BallHolomorphic if job.series => holo_kernel_series(&params, &z, &u)?,
                Space::BallHolomorphic => holo_kernel_closed(&params, &z, &u)?,
                Space::Fock if job.series => bargmann_kernel_series(&tuple, &z, &u, tp)?,
                Space::Fock => bargmann_kernel(&tuple, &z, &u)?,
                Space::L2 => {
                    let (xs, ys): (Vec<f64>, Vec<f64>) =
                        (z.iter().map(|c| c.re).collect(), u.iter().map(|c| c.re).collect());
                    if job.series {
                        l2_kernel_series(&tuple, &xs, &ys, tp)?
                    } else {
                        l2_kernel_closed(&tuple, &xs, &ys)?
                    }
                }
            };
            writeln!(out, "{x:.17e},{y:.17e},{:.17e},{:.17e}", value.re, value.im).expect("string write");
        }
    }
    Ok(out)
}
