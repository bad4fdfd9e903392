use std::cmp::Ordering;
use std::fmt;

use crate::error::{invalid, Result};

/// Exponent vector `(a_1, ..., a_n)` of the monomial `x_1^{a_1} ... x_n^{a_n}`.
///
/// The derived `Ord` is the lexicographic order with `x_1` most significant.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(exps: Vec<u32>) -> Self {
        ExponentVector(exps)
    }

    pub fn zero(n: usize) -> Self {
        ExponentVector(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn max_exponent(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Componentwise sum. Callers guarantee equal lengths.
    pub(crate) fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `true` when every entry of `self` is at most the matching entry of `other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl std::ops::Index<usize> for ExponentVector {
    type Output = u32;
    fn index(&self, i: usize) -> &u32 {
        &self.0[i]
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, a) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Lexicographic comparison with `x_1` most significant.
pub fn lex_compare(a: &ExponentVector, b: &ExponentVector) -> Result<Ordering> {
    if a.len() != b.len() {
        return invalid(format!("exponent vectors of lengths {} and {}", a.len(), b.len()));
    }
    Ok(a.cmp(b))
}

/// All exponent vectors of length `n` and total degree `d` with every entry
/// `< cap`, in decreasing lex order.
pub fn monomials_of_degree(n: usize, d: u32, cap: u32) -> impl Iterator<Item = ExponentVector> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fill(&mut cur, 0, d, cap, &mut out);
    out.into_iter()
}

fn fill(cur: &mut Vec<u32>, pos: usize, remaining: u32, cap: u32, out: &mut Vec<ExponentVector>) {
    let n = cur.len();
    if pos == n {
        if remaining == 0 {
            out.push(ExponentVector(cur.clone()));
        }
        return;
    }
    // the tail can absorb at most (n - pos - 1) * (cap - 1)
    let tail_room = (n - pos - 1) as u64 * u64::from(cap.saturating_sub(1));
    let hi = remaining.min(cap.saturating_sub(1));
    for a in (0..=hi).rev() {
        if u64::from(remaining - a) > tail_room {
            break;
        }
        cur[pos] = a;
        fill(cur, pos + 1, remaining - a, cap, out);
    }
    cur[pos] = 0;
}
