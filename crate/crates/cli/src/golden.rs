use std::collections::BTreeMap;

use coinvariant::combinatorics::{
    code, coinv, enumerate_osp, insert, maxcode, tableau_of, CodeSequence, InjectiveTableau, OrderedSetPartition,
    Partition,
};
use coinvariant::harmonics::{
    delta_osp, hilbert_coinv, hilbert_linear_algebra, ideal_generators, leading_exponents_of_harmonics,
    module_closure_dimension, x_of_tableau, wilson_partition, GeneratorKind,
};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::verify::{Failure, Job, Outcome};
use crate::CliError;

pub const BUNDLED: &str = include_str!("../fixtures/golden.json");

#[derive(Debug, Clone, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Fixture {
    Statistics { name: String, shape: String, blocks: String, code: String, maxcode: String, coinv: usize },
    Insert { name: String, shape: String, code: String, blocks: String },
    TableauOf { name: String, shape: String, blocks: String, tableau: String },
    XOfTableau { name: String, tableau: String, n: usize, s: usize, exponent: Vec<u32> },
    IdealDegrees { name: String, n: usize, shape: String, power: u32, degrees: BTreeMap<String, Vec<usize>> },
    IdealGenerators { name: String, n: usize, shape: String, generators: Vec<String> },
    Count { name: String, n: usize, shape: String, count: usize },
    Hilbert { name: String, n: usize, shape: String, series: Vec<usize> },
    Leading { name: String, n: usize, shape: String, exponents: Vec<Vec<u32>> },
    Delta { name: String, shape: String, blocks: String, display: String },
    WilsonPartition { name: String, k: usize, s: usize, parts: Vec<usize> },
    ModuleDimension { name: String, n: usize, shape: String, dimension: usize },
}

impl Fixture {
    fn name(&self) -> &str {
        match self {
            Fixture::Statistics { name, .. }
            | Fixture::Insert { name, .. }
            | Fixture::TableauOf { name, .. }
            | Fixture::XOfTableau { name, .. }
            | Fixture::IdealDegrees { name, .. }
            | Fixture::IdealGenerators { name, .. }
            | Fixture::Count { name, .. }
            | Fixture::Hilbert { name, .. }
            | Fixture::Leading { name, .. }
            | Fixture::Delta { name, .. }
            | Fixture::WilsonPartition { name, .. }
            | Fixture::ModuleDimension { name, .. } => name,
        }
    }
}

pub fn parse(text: &str) -> Result<Vec<Fixture>, CliError> {
    serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("golden fixtures: {e}")))
}

pub fn jobs(text: &str) -> Result<Vec<Job>, CliError> {
    // params echo each fixture as written, so a failing case is replayable
    let raw: Vec<Value> = serde_json::from_str(text).map_err(|e| CliError::Invalid(format!("golden fixtures: {e}")))?;
    Ok(parse(text)?
        .into_iter()
        .zip(raw)
        .map(|(f, params)| Job { suite: "golden", check: f.name().to_string(), params, run: Box::new(move || replay(&f)) })
        .collect())
}

fn expect(ok: bool, got: Value) -> Outcome {
    if ok {
        Ok(None)
    } else {
        Err(Failure::Counterexample(json!({ "got": got })))
    }
}

fn shape(text: &str) -> Result<Partition, Failure> {
    Ok(text.parse()?)
}

fn replay(f: &Fixture) -> Outcome {
    match f {
        Fixture::Statistics { shape: lam, blocks, code: c, maxcode: m, coinv: k, .. } => {
            let sigma = OrderedSetPartition::parse(blocks, shape(lam)?)?;
            let (gc, gm, gk) = (code(&sigma), maxcode(&sigma), coinv(&sigma));
            let ok = gc.to_string() == *c && gm.to_string() == *m && gk == *k;
            expect(ok, json!({ "code": gc.to_string(), "maxcode": gm.to_string(), "coinv": gk }))
        }
        Fixture::Insert { shape: lam, code: c, blocks, .. } => {
            let c: CodeSequence = c.parse()?;
            let sigma = insert(&c, c.len(), &shape(lam)?)?;
            expect(sigma.to_string() == *blocks, json!(sigma.to_string()))
        }
        Fixture::TableauOf { shape: lam, blocks, tableau, .. } => {
            let t = tableau_of(&OrderedSetPartition::parse(blocks, shape(lam)?)?);
            expect(t.to_string() == *tableau, json!(t.to_string()))
        }
        Fixture::XOfTableau { tableau, n, s, exponent, .. } => {
            let t: InjectiveTableau = tableau.parse()?;
            let x = x_of_tableau(&t, *n, *s)?;
            expect(x.as_slice() == exponent.as_slice(), json!(x.as_slice()))
        }
        Fixture::IdealDegrees { n, shape: lam, power, degrees, .. } => {
            let ideal = ideal_generators(*n, &shape(lam)?)?;
            // keys are subset sizes; JSON object keys are strings
            let mut got: BTreeMap<String, Vec<usize>> = degrees.keys().map(|k| (k.clone(), Vec::new())).collect();
            for g in ideal.elementary() {
                if let GeneratorKind::Elementary { degree, subset } = &g.kind {
                    if let Some(ds) = got.get_mut(&subset.len().to_string()) {
                        if !ds.contains(degree) {
                            ds.push(*degree);
                        }
                    }
                }
            }
            got.values_mut().for_each(|v| v.sort_unstable());
            expect(ideal.power == *power && got == *degrees, json!({ "power": ideal.power, "degrees": got }))
        }
        Fixture::IdealGenerators { n, shape: lam, generators, .. } => {
            let got: Vec<String> = ideal_generators(*n, &shape(lam)?)?.generators.iter().map(ToString::to_string).collect();
            expect(got == *generators, json!(got))
        }
        Fixture::Count { n, shape: lam, count, .. } => {
            let got = enumerate_osp(*n, &shape(lam)?)?.len();
            expect(got == *count, json!(got))
        }
        Fixture::Hilbert { n, shape: lam, series, .. } => {
            let lam = shape(lam)?;
            let a = hilbert_coinv(*n, &lam)?;
            let b = hilbert_linear_algebra(*n, &lam)?.series();
            expect(a == *series && b == *series, json!({ "coinv": a, "linear_algebra": b }))
        }
        Fixture::Leading { n, shape: lam, exponents, .. } => {
            let got: Vec<Vec<u32>> =
                leading_exponents_of_harmonics(*n, &shape(lam)?)?.iter().map(|e| e.as_slice().to_vec()).collect();
            let mut want = exponents.clone();
            want.sort();
            expect(got == want, json!(got))
        }
        Fixture::Delta { shape: lam, blocks, display, .. } => {
            let f = delta_osp(&OrderedSetPartition::parse(blocks, shape(lam)?)?)?;
            expect(f.to_string() == *display, json!(f.to_string()))
        }
        Fixture::WilsonPartition { k, s, parts, .. } => {
            let lam = wilson_partition(*k, *s)?;
            expect(lam.parts() == parts.as_slice(), json!(lam.parts()))
        }
        Fixture::ModuleDimension { n, shape: lam, dimension, .. } => {
            let got = module_closure_dimension(*n, &shape(lam)?)?;
            expect(got == *dimension, json!(got))
        }
    }
}
