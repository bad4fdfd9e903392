use std::path::Path;

use coinvariant::combinatorics::{
    code, coinv, enumerate_osp, insert, maxcode, membership, CodeSequence, InjectiveTableau, OrderedSetPartition,
    Partition,
};
use coinvariant::exact::{PolyRecord, SparsePolynomial};
use coinvariant::harmonics::{
    delta_osp, delta_tableau, hilbert_coinv, hilbert_linear_algebra, wilson_ideal_equality, wilson_partition,
};
use serde::Serialize;

use crate::args::{Cli, Command};
use crate::output::{csv_table, emit, json_line, paint, Render};
use crate::{verify, CliError, Verdict};

/// `--n` and `--shape`, validated together.
pub struct Target {
    pub n: Option<usize>,
    pub shape: Option<Partition>,
}

impl Target {
    pub fn from_cli(cli: &Cli) -> Result<Self, CliError> {
        let shape = match &cli.shape {
            Some(text) => Some(text.parse::<Partition>().map_err(|e| CliError::Invalid(format!("--shape: {e}")))?),
            None => None,
        };
        if let Some(lam) = &shape {
            if lam.num_parts() == 0 {
                return Err(CliError::Invalid("--shape needs at least one part".into()));
            }
        }
        if cli.n == Some(0) {
            return Err(CliError::Invalid("--n must be positive".into()));
        }
        if let (Some(n), Some(lam)) = (cli.n, &shape) {
            if lam.size() > n {
                return Err(CliError::Invalid(format!("|λ| = {} exceeds n = {n}", lam.size())));
            }
        }
        Ok(Target { n: cli.n, shape })
    }

    pub fn n(&self) -> Result<usize, CliError> {
        self.n.ok_or_else(|| CliError::Invalid("--n is required".into()))
    }

    pub fn shape(&self) -> Result<&Partition, CliError> {
        self.shape.as_ref().ok_or_else(|| CliError::Invalid("--shape is required".into()))
    }

    pub fn both(&self) -> Result<(usize, &Partition), CliError> {
        Ok((self.n()?, self.shape()?))
    }

    /// Parses blocks against `--shape`, checking `--n` if present.
    fn osp(&self, blocks: &str) -> Result<OrderedSetPartition, CliError> {
        let sigma = OrderedSetPartition::parse(blocks, self.shape()?.clone())?;
        if let Some(n) = self.n {
            if n != sigma.n() {
                return Err(CliError::Invalid(format!("--blocks has {} entries but --n is {n}", sigma.n())));
            }
        }
        Ok(sigma)
    }
}

pub fn run(cli: &Cli) -> Result<Verdict, CliError> {
    let target = Target::from_cli(cli)?;
    let out = cli.output.as_deref();
    match &cli.command {
        Command::Enumerate { blocks } => {
            let records = match blocks {
                Some(b) => vec![OspRecord::of(&target.osp(b)?)],
                None => {
                    let (n, lam) = target.both()?;
                    enumerate_osp(n, lam)?.iter().map(OspRecord::of).collect()
                }
            };
            finish(&Records(records), Verdict::Pass, cli, out)
        }
        Command::Code { blocks: Some(b), .. } => finish(&Records(vec![OspRecord::of(&target.osp(b)?)]), Verdict::Pass, cli, out),
        Command::Code { code: Some(c), .. } => {
            let (n, lam) = target.both()?;
            let c: CodeSequence = c.parse()?;
            let member = membership(&c, n, lam)?;
            finish(&Membership { n, shape: lam.to_string(), code: c.0, member }, Verdict::Pass, cli, out)
        }
        Command::Code { .. } => Err(CliError::Invalid("give --blocks or --code".into())),
        Command::Insert { code: c } => {
            let (n, lam) = target.both()?;
            let c: CodeSequence = c.parse()?;
            let sigma = insert(&c, n, lam)?;
            finish(&Records(vec![OspRecord::of(&sigma)]), Verdict::Pass, cli, out)
        }
        Command::Hilbert { cross_check } => {
            let (n, lam) = target.both()?;
            let series = hilbert_coinv(n, lam)?;
            let mut report = HilbertReport { n, shape: lam.to_string(), coinv: series, linear_algebra: None, agree: None };
            if *cross_check {
                let table = hilbert_linear_algebra(n, lam)?;
                report.agree = Some(table.series() == report.coinv);
                report.linear_algebra =
                    Some(TableRecord { ambient: table.ambient, ideal: table.ideal, quotient: table.quotient });
            }
            let verdict = if report.agree == Some(false) { Verdict::Fail } else { Verdict::Pass };
            finish(&report, verdict, cli, out)
        }
        Command::Delta { tableau: Some(t), s, .. } => {
            let t: InjectiveTableau = t.parse()?;
            if let Some(lam) = &target.shape {
                if lam != t.shape() {
                    return Err(CliError::Invalid(format!("tableau has shape {}, not {lam}", t.shape())));
                }
            }
            let n = target.n.unwrap_or_else(|| t.max_entry());
            let s = s.unwrap_or_else(|| t.shape().num_parts());
            finish(&DeltaRecord::of(&delta_tableau(&t, n, s)?)?, Verdict::Pass, cli, out)
        }
        Command::Delta { blocks: Some(b), .. } => {
            let sigma = target.osp(b)?;
            finish(&DeltaRecord::of(&delta_osp(&sigma)?)?, Verdict::Pass, cli, out)
        }
        Command::Delta { .. } => Err(CliError::Invalid("give --tableau or --blocks".into())),
        Command::Verify { suite, max_n, all_shapes, k, s, budget, timings, fixtures } => {
            let opts = verify::Options {
                suite: *suite,
                max_n: *max_n,
                all_shapes: *all_shapes,
                k: *k,
                s: *s,
                budget: *budget,
                timings: *timings,
                fixtures: fixtures.clone(),
            };
            let report = verify::run(&target, &opts)?;
            let verdict = report.verdict();
            finish(&report, verdict, cli, out)
        }
        Command::Wilson { k, s } => {
            let n = target.n()?;
            if *k == 0 || *k > n || *s == 0 {
                return Err(CliError::Invalid(format!("need 1 ≤ k ≤ n and s ≥ 1 (n={n}, k={k}, s={s})")));
            }
            let lam = wilson_partition(*k, *s)?;
            let equal = wilson_ideal_equality(n, *k, *s)?;
            let report = WilsonRecord {
                n,
                k: *k,
                s: *s,
                partition: lam.to_string(),
                equal,
                hilbert: hilbert_linear_algebra(n, &lam)?.series(),
            };
            finish(&report, if equal { Verdict::Pass } else { Verdict::Fail }, cli, out)
        }
    }
}

fn finish(report: &dyn Render, verdict: Verdict, cli: &Cli, out: Option<&Path>) -> Result<Verdict, CliError> {
    emit(report, cli.out, out)?;
    Ok(verdict)
}

fn join<T: ToString>(v: &[T]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
}

#[derive(Debug, Serialize)]
pub struct OspRecord {
    pub blocks: String,
    pub code: Vec<usize>,
    pub maxcode: Vec<usize>,
    pub coinv: usize,
}

impl OspRecord {
    pub fn of(sigma: &OrderedSetPartition) -> Self {
        OspRecord { blocks: sigma.to_string(), code: code(sigma).0, maxcode: maxcode(sigma).0, coinv: coinv(sigma) }
    }
}

struct Records(Vec<OspRecord>);

impl Render for Records {
    fn json(&self) -> String {
        self.0.iter().map(json_line).collect()
    }

    fn csv(&self) -> String {
        csv_table(
            &["blocks", "code", "maxcode", "coinv"],
            self.0.iter().map(|r| vec![r.blocks.clone(), join(&r.code), join(&r.maxcode), r.coinv.to_string()]),
        )
    }

    fn text(&self, _: bool) -> String {
        self.0
            .iter()
            .map(|r| format!("{}  code={}  maxcode={}  coinv={}\n", r.blocks, join(&r.code), join(&r.maxcode), r.coinv))
            .collect()
    }
}

#[derive(Serialize)]
struct Membership {
    n: usize,
    shape: String,
    code: Vec<usize>,
    member: bool,
}

impl Render for Membership {
    fn json(&self) -> String {
        json_line(self)
    }

    fn csv(&self) -> String {
        csv_table(
            &["n", "shape", "code", "member"],
            [vec![self.n.to_string(), self.shape.clone(), join(&self.code), self.member.to_string()]],
        )
    }

    fn text(&self, _: bool) -> String {
        let verb = if self.member { "is" } else { "is not" };
        format!("({}) {verb} in C_{{{},({})}}\n", join(&self.code), self.n, self.shape)
    }
}

#[derive(Serialize)]
struct TableRecord {
    ambient: Vec<usize>,
    ideal: Vec<usize>,
    quotient: Vec<usize>,
}

#[derive(Serialize)]
struct HilbertReport {
    n: usize,
    shape: String,
    coinv: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    linear_algebra: Option<TableRecord>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

fn q_polynomial(coeffs: &[usize]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(d, &c)| match (d, c) {
            (0, c) => c.to_string(),
            (1, 1) => "q".into(),
            (1, c) => format!("{c}q"),
            (d, 1) => format!("q^{d}"),
            (d, c) => format!("{c}q^{d}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

impl Render for HilbertReport {
    fn json(&self) -> String {
        json_line(self)
    }

    fn csv(&self) -> String {
        let rows = match &self.linear_algebra {
            None => self.coinv.len(),
            Some(t) => t.quotient.len().max(self.coinv.len()),
        };
        let at = |v: &[usize], d: usize| v.get(d).copied().unwrap_or(0).to_string();
        match &self.linear_algebra {
            None => csv_table(&["degree", "coinv"], (0..rows).map(|d| vec![d.to_string(), at(&self.coinv, d)])),
            Some(t) => csv_table(
                &["degree", "coinv", "ambient", "ideal", "quotient"],
                (0..rows).map(|d| {
                    vec![d.to_string(), at(&self.coinv, d), at(&t.ambient, d), at(&t.ideal, d), at(&t.quotient, d)]
                }),
            ),
        }
    }

    fn text(&self, color: bool) -> String {
        let mut s = format!("Hilbert series of R_{{{},({})}}: {}\n", self.n, self.shape, q_polynomial(&self.coinv));
        if let Some(agree) = self.agree {
            let word = if agree { "agrees" } else { "DISAGREES" };
            let la = self.linear_algebra.as_ref().map(|t| q_polynomial(&t.quotient)).unwrap_or_default();
            s += &format!("linear algebra: {la} ({})\n", paint(word, agree, color));
        }
        s
    }
}

#[derive(Serialize)]
struct DeltaRecord {
    polynomial: PolyRecord,
    leading_exponent: Vec<u32>,
    degree: u32,
    display: String,
}

impl DeltaRecord {
    fn of(f: &SparsePolynomial) -> Result<Self, CliError> {
        let (lead, _) = f.leading_monomial()?;
        Ok(DeltaRecord {
            polynomial: f.to_record(),
            leading_exponent: lead.as_slice().to_vec(),
            degree: lead.degree(),
            display: f.to_string(),
        })
    }
}

impl Render for DeltaRecord {
    fn json(&self) -> String {
        json_line(self)
    }

    fn csv(&self) -> String {
        csv_table(&["coeff", "exps"], self.polynomial.terms.iter().map(|t| vec![t.coeff.clone(), join(&t.exps)]))
    }

    fn text(&self, _: bool) -> String {
        format!("{}\nleading exponent ({})  degree {}\n", self.display, join(&self.leading_exponent), self.degree)
    }
}

#[derive(Serialize)]
struct WilsonRecord {
    n: usize,
    k: usize,
    s: usize,
    partition: String,
    equal: bool,
    hilbert: Vec<usize>,
}

impl Render for WilsonRecord {
    fn json(&self) -> String {
        json_line(self)
    }

    fn csv(&self) -> String {
        csv_table(
            &["n", "k", "s", "partition", "equal", "hilbert"],
            [vec![
                self.n.to_string(),
                self.k.to_string(),
                self.s.to_string(),
                self.partition.clone(),
                self.equal.to_string(),
                join(&self.hilbert),
            ]],
        )
    }

    fn text(&self, color: bool) -> String {
        let word = if self.equal { "equal" } else { "DIFFERENT" };
        format!(
            "I_{{{},{},{}}} vs I_{{{},({})}}: {}\nHilbert series: {}\n",
            self.n,
            self.k,
            self.s,
            self.n,
            self.partition,
            paint(word, self.equal, color),
            q_polynomial(&self.hilbert)
        )
    }
}
