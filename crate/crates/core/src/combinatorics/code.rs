use std::fmt;
use std::str::FromStr;

use super::{Cell, OrderedSetPartition, Partition};
use crate::error::{invalid, Error, Result};

/// Length-`n` vector of nonnegative integers; a candidate member of `C_{n,λ}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CodeSequence(pub Vec<usize>);

impl CodeSequence {
    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Componentwise `≤`.
    pub fn le(&self, other: &CodeSequence) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl fmt::Display for CodeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for CodeSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(CodeSequence(Vec::new()));
        }
        text.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad code entry {t:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(CodeSequence)
    }
}

/// All coinversions `(i, j)`, `i < j`, sorted.
///
/// - `i` floating, `j` in the top container box of a column right of `i`;
/// - `i`, `j` in the same container row, `j` to the right;
/// - `i`, `j` in the container, `j` one row below `i` and to its left.
pub fn coinversion_pairs(sigma: &OrderedSetPartition) -> Vec<(usize, usize)> {
    let cells = sigma.cells();
    let mut out = Vec::new();
    for i in 1..=sigma.n() {
        for j in i + 1..=sigma.n() {
            if is_coinversion(cells[i - 1], cells[j - 1]) {
                out.push((i, j));
            }
        }
    }
    out
}

fn is_coinversion(ci: Cell, cj: Cell) -> bool {
    match (ci, cj) {
        (Cell::Floating { col: a }, Cell::Container { col: b, row: 0 }) => b > a,
        (Cell::Container { col: a, row: ra }, Cell::Container { col: b, row: rb }) => {
            (rb == ra && b > a) || (rb == ra + 1 && b < a)
        }
        _ => false,
    }
}

/// `code(σ)`: per-entry coinversion counts, plus `p - 1` for entries floating in block `p`.
pub fn code(sigma: &OrderedSetPartition) -> CodeSequence {
    let cells = sigma.cells();
    let n = sigma.n();
    let mut c = vec![0; n];
    for i in 1..=n {
        let ci = cells[i - 1];
        c[i - 1] = (i + 1..=n).filter(|&j| is_coinversion(ci, cells[j - 1])).count();
        if let Cell::Floating { col } = ci {
            c[i - 1] += col;
        }
    }
    CodeSequence(c)
}

pub fn coinv(sigma: &OrderedSetPartition) -> usize {
    code(sigma).sum()
}

/// Upper bound for `code(σ)`: the `j`-th smallest entry of container row `r`
/// gets `λ'_r - j`, floating entries get `s - 1`.
///
/// The within-row placement is read off from the bound each row entry's
/// coinversion count obeys; the worked n = 16 value pins it.
pub fn maxcode(sigma: &OrderedSetPartition) -> CodeSequence {
    let s = sigma.shape().num_parts();
    let mut c = vec![s - 1; sigma.n()];
    for r in 0..sigma.shape().largest() {
        let row = sigma.container_row(r);
        let len = row.len();
        for (j, &x) in row.iter().enumerate() {
            c[x - 1] = len - 1 - j;
        }
    }
    CodeSequence(c)
}

/// `c ∈ C_{n,λ}`, decided by peeling first entries: an entry `< ℓ(λ)` removes
/// one box from the matching part, an entry in `ℓ(λ)..s` leaves `λ` alone.
pub fn membership(c: &CodeSequence, n: usize, shape: &Partition) -> Result<bool> {
    if c.len() != n {
        return invalid(format!("code of length {} for n = {n}", c.len()));
    }
    let s = shape.num_parts();
    let mut lam = shape.clone();
    for (pos, &x) in c.entries().iter().enumerate() {
        if x >= s || lam.size() > n - pos {
            return Ok(false);
        }
        if x < lam.length() {
            lam = lam.decrement_part(x + 1)?;
        }
    }
    Ok(lam.size() == 0)
}

/// `c ∈ C_{n,λ}` by searching the shuffles of the staircases
/// `(λ'_j - 1, ..., 1, 0)` and `n - k` copies of `s - 1` for one that
/// dominates `c`. Exponential; intended for `n ≤ 8`.
pub fn membership_shuffle_oracle(c: &CodeSequence, n: usize, shape: &Partition) -> bool {
    let k = shape.size();
    if c.len() != n || k > n {
        return false;
    }
    let s = shape.num_parts();
    let mut seqs: Vec<Vec<usize>> = shape.conjugate_nonzero().iter().map(|&h| (0..h).rev().collect()).collect();
    seqs.push(vec![s - 1; n - k]);
    let mut ptr = vec![0; seqs.len()];
    dominating_shuffle(c.entries(), 0, &seqs, &mut ptr)
}

fn dominating_shuffle(c: &[usize], pos: usize, seqs: &[Vec<usize>], ptr: &mut [usize]) -> bool {
    if pos == c.len() {
        return true;
    }
    for q in 0..seqs.len() {
        if ptr[q] < seqs[q].len() && c[pos] <= seqs[q][ptr[q]] {
            ptr[q] += 1;
            let found = dominating_shuffle(c, pos + 1, seqs, ptr);
            ptr[q] -= 1;
            if found {
                return true;
            }
        }
    }
    false
}

/// Every element of `C_{n,λ}` once, in lex order.
pub fn enumerate_codes(n: usize, shape: &Partition) -> Result<Vec<CodeSequence>> {
    if shape.size() > n {
        return invalid(format!("|λ| = {} exceeds n = {n}", shape.size()));
    }
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    extend_codes(n, shape, &mut cur, &mut out);
    Ok(out)
}

fn extend_codes(n: usize, lam: &Partition, cur: &mut Vec<usize>, out: &mut Vec<CodeSequence>) {
    let left = n - cur.len();
    if left == 0 {
        if lam.size() == 0 {
            out.push(CodeSequence(cur.clone()));
        }
        return;
    }
    if lam.size() > left {
        return;
    }
    for x in 0..lam.num_parts() {
        cur.push(x);
        if x < lam.length() {
            let next = lam.decrement_part(x + 1).expect("index below ℓ(λ)");
            extend_codes(n, &next, cur, out);
        } else {
            extend_codes(n, lam, cur, out);
        }
        cur.pop();
    }
}
