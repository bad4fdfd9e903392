use std::fmt;
use std::str::FromStr;

use crate::error::{invalid, Error, Result};

/// Weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// significant: they count towards the number of parts `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return invalid(format!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `λ_i` with `i` one-based; zero past the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// `k = Σ λ_i`.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `s`, the number of parts including zeros.
    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    /// `ℓ(λ)`, the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.iter().take_while(|&&p| p > 0).count()
    }

    pub fn largest(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    /// `λ'_r = #{i : λ_i ≥ r}` for `r = 1..pad_to`.
    pub fn conjugate(&self, pad_to: usize) -> Result<Partition> {
        if pad_to < self.largest() {
            return invalid(format!("cannot pad the conjugate of {self} to length {pad_to}"));
        }
        let parts = (1..=pad_to).map(|r| self.parts.iter().filter(|&&p| p >= r).count()).collect();
        Ok(Partition { parts })
    }

    /// `λ'` with exactly `λ_1` entries (its nonzero parts).
    pub fn conjugate_nonzero(&self) -> Vec<usize> {
        (1..=self.largest()).map(|r| self.parts.iter().filter(|&&p| p >= r).count()).collect()
    }

    /// Subtracts one from `λ_i` (one-based) and re-sorts; the number of parts is unchanged.
    pub fn decrement_part(&self, i: usize) -> Result<Partition> {
        if i == 0 || i > self.length() {
            return invalid(format!("part index {i} outside 1..={} for {self}", self.length()));
        }
        let mut parts = self.parts.clone();
        parts[i - 1] -= 1;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    /// Every partition with `Σλ ≤ n` and `1 ≤ s ≤ n` parts, grouped by `s` then
    /// in decreasing lex order of the parts.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for s in 1..=n {
            let mut cur = Vec::with_capacity(s);
            weak_decreasing(s, n, n, &mut cur, &mut out);
        }
        out
    }
}

fn weak_decreasing(s: usize, budget: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if cur.len() == s {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (0..=cap.min(budget)).rev() {
        cur.push(p);
        weak_decreasing(s, budget - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,3,2,2,0,0"`.
    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return invalid("empty partition");
        }
        let parts = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad part {t:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}
