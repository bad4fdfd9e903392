use std::collections::BTreeSet;
use std::path::PathBuf;
use std::time::Instant;

use coinvariant::combinatorics::{
    code, enumerate_codes, enumerate_injective_tableaux, enumerate_osp, insert, membership, membership_shuffle_oracle,
    CodeSequence, Partition,
};
use coinvariant::exact::{apply_diff, elementary_symmetric, span_dimension, ExponentVector};
use coinvariant::harmonics::{
    antisymmetrize_oracle, delta_osp, delta_tableau, harmonic_check, harmonic_space_bases, hilbert_coinv,
    hilbert_linear_algebra, ideal_generators, leading_exponents_of_harmonics, module_closure_dimension,
    staircase_expansion, telescoping_identity_check, wilson_ideal_equality,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::args::Suite;
use crate::commands::Target;
use crate::output::{csv_table, json_document, paint, Render};
use crate::{golden, CliError, Verdict};

pub struct Options {
    pub suite: Suite,
    pub max_n: Option<usize>,
    pub all_shapes: bool,
    pub k: Option<usize>,
    pub s: Option<usize>,
    pub budget: Option<usize>,
    pub timings: bool,
    pub fixtures: Option<PathBuf>,
}

/// Why a check did not pass.
pub enum Failure {
    /// Replayable input on which the property fails.
    Counterexample(Value),
    Error(coinvariant::Error),
}

impl From<coinvariant::Error> for Failure {
    fn from(e: coinvariant::Error) -> Self {
        Failure::Error(e)
    }
}

/// `Ok` carries optional detail for the report.
pub type Outcome = Result<Option<Value>, Failure>;

pub struct Job {
    pub suite: &'static str,
    pub check: String,
    pub params: Value,
    pub run: Box<dyn Fn() -> Outcome + Send + Sync>,
}

#[derive(Debug, Serialize)]
pub struct CheckRecord {
    suite: &'static str,
    check: String,
    params: Value,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<Value>,
}

#[derive(Debug, Serialize)]
pub struct Timing {
    suite: &'static str,
    check: String,
    params: Value,
    seconds: f64,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    status: &'static str,
    suites: Vec<&'static str>,
    checks: Vec<CheckRecord>,
    skipped: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings: Option<Vec<Timing>>,
}

impl VerificationReport {
    pub fn verdict(&self) -> Verdict {
        if self.checks.iter().all(|c| c.pass) {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }
}

impl Render for VerificationReport {
    fn json(&self) -> String {
        json_document(self)
    }

    fn csv(&self) -> String {
        csv_table(
            &["suite", "check", "params", "pass", "counterexample"],
            self.checks.iter().map(|c| {
                vec![
                    c.suite.to_string(),
                    c.check.clone(),
                    c.params.to_string(),
                    c.pass.to_string(),
                    c.counterexample.as_ref().map(Value::to_string).unwrap_or_default(),
                ]
            }),
        )
    }

    fn text(&self, color: bool) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let word = paint(if c.pass { "PASS" } else { "FAIL" }, c.pass, color);
            out += &format!("{word} {} {} {}", c.suite, c.check, c.params);
            if let Some(ce) = &c.counterexample {
                out += &format!("  counterexample: {ce}");
            }
            if let Some(d) = &c.detail {
                out += &format!("  {d}");
            }
            out.push('\n');
        }
        let ok = self.status == "pass";
        out += &format!(
            "{}: {} checks, {} skipped\n",
            paint(self.status, ok, color),
            self.checks.len(),
            self.skipped
        );
        if let Some(ts) = &self.timings {
            let total: f64 = ts.iter().map(|t| t.seconds).sum();
            out += &format!("total check time {total:.2}s\n");
        }
        out
    }
}

pub fn run(target: &Target, opts: &Options) -> Result<VerificationReport, CliError> {
    let suites: Vec<Suite> = match opts.suite {
        Suite::All => vec![Suite::Bijection, Suite::Harmonic, Suite::Staircase, Suite::Leading, Suite::Wilson, Suite::Golden],
        s => vec![s],
    };
    let mut jobs = Vec::new();
    let mut skipped = 0;
    for suite in &suites {
        let mut these = jobs_for(*suite, target, opts)?;
        if let Some(b) = opts.budget {
            if these.len() > b {
                skipped += these.len() - b;
                these.truncate(b);
            }
        }
        jobs.extend(these);
    }
    // rayon's indexed collect keeps job order, so output does not depend on scheduling
    let results: Vec<(CheckRecord, Timing)> = jobs
        .par_iter()
        .map(|job| {
            let start = Instant::now();
            let outcome = (job.run)();
            let seconds = start.elapsed().as_secs_f64();
            let (pass, counterexample, detail) = match outcome {
                Ok(detail) => (true, None, detail),
                Err(Failure::Counterexample(v)) => (false, Some(v), None),
                Err(Failure::Error(e)) => (false, Some(json!({ "error": e.to_string(), "input": job.params })), None),
            };
            let record = CheckRecord {
                suite: job.suite,
                check: job.check.clone(),
                params: job.params.clone(),
                pass,
                counterexample,
                detail,
            };
            let timing = Timing { suite: job.suite, check: job.check.clone(), params: job.params.clone(), seconds };
            (record, timing)
        })
        .collect();
    let (checks, timings): (Vec<_>, Vec<_>) = results.into_iter().unzip();
    let status = if checks.iter().all(|c| c.pass) { "pass" } else { "fail" };
    Ok(VerificationReport {
        status,
        suites: suites.iter().map(|s| s.name()).collect(),
        checks,
        skipped,
        timings: opts.timings.then_some(timings),
    })
}

fn default_max_n(suite: Suite) -> usize {
    match suite {
        Suite::Bijection => 5,
        _ => 4,
    }
}

/// `(n, λ)` pairs selected by `--n`, `--shape`, `--max-n` and `--all-shapes`.
fn shape_cases(suite: Suite, target: &Target, opts: &Options) -> Result<Vec<(usize, Partition)>, CliError> {
    if let (Some(lam), false) = (&target.shape, opts.all_shapes) {
        let n = target.n.ok_or_else(|| CliError::Invalid("--shape needs --n".into()))?;
        return Ok(vec![(n, lam.clone())]);
    }
    let ns: Vec<usize> = match target.n {
        Some(n) => vec![n],
        None => (1..=opts.max_n.unwrap_or_else(|| default_max_n(suite))).collect(),
    };
    Ok(ns.into_iter().flat_map(|n| Partition::all_up_to(n).into_iter().map(move |lam| (n, lam))).collect())
}

fn shape_jobs(
    suite: Suite,
    target: &Target,
    opts: &Options,
    check: fn(usize, &Partition) -> Outcome,
) -> Result<Vec<Job>, CliError> {
    Ok(shape_cases(suite, target, opts)?
        .into_iter()
        .map(|(n, lam)| Job {
            suite: suite.name(),
            check: suite.name().to_string(),
            params: json!({ "n": n, "shape": lam.to_string() }),
            run: Box::new(move || check(n, &lam)),
        })
        .collect())
}

fn jobs_for(suite: Suite, target: &Target, opts: &Options) -> Result<Vec<Job>, CliError> {
    match suite {
        Suite::Bijection => shape_jobs(suite, target, opts, bijection),
        Suite::Harmonic => shape_jobs(suite, target, opts, harmonic),
        Suite::Staircase => shape_jobs(suite, target, opts, staircase),
        Suite::Leading => shape_jobs(suite, target, opts, leading),
        Suite::Wilson => wilson_jobs(target, opts),
        Suite::Golden => match &opts.fixtures {
            Some(path) => golden::jobs(&std::fs::read_to_string(path)?),
            None => golden::jobs(golden::BUNDLED),
        },
        Suite::All => unreachable!("expanded by the caller"),
    }
}

fn counter(v: Value) -> Outcome {
    Err(Failure::Counterexample(v))
}

/// Every vector in `[0, s)^n`, first coordinate fastest.
fn small_vectors(n: usize, s: usize) -> impl Iterator<Item = CodeSequence> {
    (0..s.pow(n as u32)).map(move |mut idx| {
        let mut v = Vec::with_capacity(n);
        for _ in 0..n {
            v.push(idx % s);
            idx /= s;
        }
        CodeSequence(v)
    })
}

fn bijection(n: usize, lam: &Partition) -> Outcome {
    let shape = lam.to_string();
    let ops = enumerate_osp(n, lam)?;
    let codes = enumerate_codes(n, lam)?;
    if ops.len() != codes.len() {
        return counter(json!({ "n": n, "shape": shape, "op": ops.len(), "codes": codes.len() }));
    }
    let set: BTreeSet<&CodeSequence> = codes.iter().collect();
    for sigma in &ops {
        let c = code(sigma);
        if !set.contains(&c) || &insert(&c, n, lam)? != sigma {
            return counter(json!({ "n": n, "shape": shape, "blocks": sigma.to_string() }));
        }
    }
    if n <= 5 {
        for c in small_vectors(n, lam.num_parts()) {
            let fast = membership(&c, n, lam)?;
            if fast != membership_shuffle_oracle(&c, n, lam) || fast != set.contains(&c) {
                return counter(json!({ "n": n, "shape": shape, "code": c.to_string() }));
            }
        }
    }
    Ok(Some(json!({ "size": ops.len() })))
}

fn harmonic(n: usize, lam: &Partition) -> Outcome {
    let shape = lam.to_string();
    let s = lam.num_parts();
    let ideal = ideal_generators(n, lam)?;
    for t in enumerate_injective_tableaux(lam, n)? {
        let d = delta_tableau(&t, n, s)?;
        // the antisymmetrizer is factorial in column length; skip it past 6
        if !harmonic_check(&d, &ideal)? || (s <= 6 && d != antisymmetrize_oracle(&t, n, s)?) {
            return counter(json!({ "n": n, "shape": shape, "tableau": t.to_string() }));
        }
    }
    let ops = enumerate_osp(n, lam)?;
    let mut deltas = Vec::with_capacity(ops.len());
    for sigma in &ops {
        let d = delta_osp(sigma)?;
        if !harmonic_check(&d, &ideal)? {
            return counter(json!({ "n": n, "shape": shape, "blocks": sigma.to_string() }));
        }
        deltas.push(d);
    }
    let rank = span_dimension(&deltas);
    let dim_v: usize = harmonic_space_bases(n, lam)?.iter().map(Vec::len).sum();
    let closure = module_closure_dimension(n, lam)?;
    if rank != ops.len() || dim_v != ops.len() || closure != ops.len() {
        return counter(json!({
            "n": n, "shape": shape, "op": ops.len(), "rank": rank, "dim_v": dim_v, "closure": closure
        }));
    }
    Ok(Some(json!({ "dimension": ops.len() })))
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << n).map(move |mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
}

fn staircase(n: usize, lam: &Partition) -> Outcome {
    let s = lam.num_parts();
    for t in enumerate_injective_tableaux(lam, n)? {
        let delta = delta_tableau(&t, n, s)?;
        for subset in subsets(n) {
            for d in 0..=subset.len() {
                let lhs = staircase_expansion(d, &subset, &t, n, s)?;
                if lhs != apply_diff(&elementary_symmetric(d, &subset, n)?, &delta)? {
                    return counter(json!({
                        "n": n, "shape": lam.to_string(), "tableau": t.to_string(), "subset": subset, "d": d
                    }));
                }
            }
        }
    }
    Ok(None)
}

fn leading(n: usize, lam: &Partition) -> Outcome {
    let shape = lam.to_string();
    let lead = leading_exponents_of_harmonics(n, lam)?;
    let codes: BTreeSet<ExponentVector> = enumerate_codes(n, lam)?
        .iter()
        .map(|c| ExponentVector::new(c.entries().iter().map(|&a| a as u32).collect()))
        .collect();
    if lead != codes {
        let extra: Vec<String> = lead.difference(&codes).map(ToString::to_string).collect();
        let missing: Vec<String> = codes.difference(&lead).map(ToString::to_string).collect();
        return counter(json!({ "n": n, "shape": shape, "extra": extra, "missing": missing }));
    }
    let series = hilbert_coinv(n, lam)?;
    if hilbert_linear_algebra(n, lam)?.series() != series {
        return counter(json!({ "n": n, "shape": shape, "hilbert": series }));
    }
    let mut listed: Vec<&ExponentVector> = lead.iter().collect();
    listed.sort();
    let listed: Vec<String> = listed.iter().map(ToString::to_string).collect();
    Ok(Some(json!({ "leading": listed })))
}

fn wilson_jobs(target: &Target, opts: &Options) -> Result<Vec<Job>, CliError> {
    let ns: Vec<usize> = match target.n {
        Some(n) => vec![n],
        None => (1..=opts.max_n.unwrap_or(4)).collect(),
    };
    let mut jobs = Vec::new();
    for n in ns {
        let ks: Vec<usize> = match opts.k {
            Some(k) if k == 0 || k > n => return Err(CliError::Invalid(format!("--k must lie in 1..={n}"))),
            Some(k) => vec![k],
            None => (1..=n).collect(),
        };
        let ss: Vec<usize> = match opts.s {
            Some(0) => return Err(CliError::Invalid("--s must be positive".into())),
            Some(s) => vec![s],
            None => (1..=4).collect(),
        };
        for &k in &ks {
            for &s in &ss {
                jobs.push(Job {
                    suite: "wilson",
                    check: "ideal-equality".into(),
                    params: json!({ "n": n, "k": k, "s": s }),
                    run: Box::new(move || {
                        if wilson_ideal_equality(n, k, s)? {
                            Ok(None)
                        } else {
                            counter(json!({ "n": n, "k": k, "s": s }))
                        }
                    }),
                });
            }
        }
    }
    jobs.push(Job {
        suite: "wilson",
        check: "telescoping".into(),
        params: json!({ "instances": 100, "seed": TELESCOPE_SEED, "max_n": 5 }),
        run: Box::new(telescoping),
    });
    Ok(jobs)
}

const TELESCOPE_SEED: u64 = 2024;

fn telescoping() -> Outcome {
    let mut rng = StdRng::seed_from_u64(TELESCOPE_SEED);
    for _ in 0..100 {
        let n = rng.gen_range(1..=5);
        let i = rng.gen_range(1..=n);
        let subset: Vec<usize> = (1..=n).filter(|&j| j != i && rng.gen_bool(0.5)).collect();
        let d = rng.gen_range(1..=subset.len() + 2);
        let s = rng.gen_range(1..=4);
        if !telescoping_identity_check(&subset, i, d, s, n)? {
            return counter(json!({ "subset": subset, "i": i, "d": d, "s": s, "n": n }));
        }
    }
    Ok(None)
}
