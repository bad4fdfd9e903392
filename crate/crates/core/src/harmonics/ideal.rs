use std::fmt;

use crate::combinatorics::Partition;
use crate::error::{invalid, Result};
use crate::exact::{elementary_symmetric, ExponentVector, Rational, SparsePolynomial};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GeneratorKind {
    /// `x_var^s`, `var` one-based.
    Power { var: usize },
    /// `e_degree(subset)`, indices one-based and increasing.
    Elementary { degree: usize, subset: Vec<usize> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub kind: GeneratorKind,
    pub poly: SparsePolynomial,
}

impl Generator {
    pub fn degree(&self) -> u32 {
        self.poly.homogeneous_degree().expect("generators are nonzero and homogeneous")
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            GeneratorKind::Power { var } => write!(f, "x{var}^{}", self.degree()),
            GeneratorKind::Elementary { degree, subset } => {
                let s: Vec<String> = subset.iter().map(ToString::to_string).collect();
                write!(f, "e{degree}({{{}}})", s.join(","))
            }
        }
    }
}

/// Finite generating set of a homogeneous ideal that contains every `x_i^s`.
#[derive(Debug, Clone)]
pub struct IdealPresentation {
    pub n: usize,
    /// The common exponent `s` of the power generators.
    pub power: u32,
    pub generators: Vec<Generator>,
}

impl IdealPresentation {
    pub fn elementary(&self) -> impl Iterator<Item = &Generator> {
        self.generators.iter().filter(|g| matches!(g.kind, GeneratorKind::Elementary { .. }))
    }

    /// `x_1^s, ..., x_n^s` followed by the given elementary generators.
    pub(crate) fn with_powers(n: usize, power: u32, elementary: Vec<Generator>) -> Self {
        let mut generators: Vec<Generator> = (1..=n)
            .map(|var| {
                let mut e = vec![0; n];
                e[var - 1] = power;
                Generator {
                    kind: GeneratorKind::Power { var },
                    poly: SparsePolynomial::monomial(ExponentVector::new(e), Rational::from_integer(1.into())),
                }
            })
            .collect();
        generators.extend(elementary);
        IdealPresentation { n, power, generators }
    }
}

/// Generators of `I_{n,λ}`: every `x_i^s`, and `e_d(S)` for each subset `S`
/// and each `d ≤ |S|` with `d > |S| - λ'_n - λ'_{n-1} - ... - λ'_{n-|S|+1}`
/// (`λ'` padded to length `n`).
///
/// Subsets are visited by increasing size, then lexicographically.
pub fn ideal_generators(n: usize, shape: &Partition) -> Result<IdealPresentation> {
    let s = shape.num_parts();
    if s == 0 {
        return invalid("shape with no parts");
    }
    if shape.size() > n {
        return invalid(format!("|λ| = {} exceeds n = {n}", shape.size()));
    }
    let conj = shape.conjugate(n)?;
    let conj = conj.parts();
    let mut subsets: Vec<Vec<usize>> = (0u64..1 << n)
        .map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect())
        .collect();
    subsets.sort_by(|a: &Vec<usize>, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    let mut elementary = Vec::new();
    for subset in subsets {
        let m = subset.len();
        let tail: usize = conj[n - m..].iter().sum();
        // tail ≤ m always holds here, so the threshold is never negative
        let threshold = m as i64 - tail as i64;
        for d in (threshold + 1).max(0) as usize..=m {
            elementary.push(Generator {
                poly: elementary_symmetric(d, &subset, n)?,
                kind: GeneratorKind::Elementary { degree: d, subset: subset.clone() },
            });
        }
    }
    Ok(IdealPresentation::with_powers(n, s as u32, elementary))
}
