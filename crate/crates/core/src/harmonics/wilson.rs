use super::graded::truncated_ideal_spans;
use super::{ideal_generators, Generator, GeneratorKind, IdealPresentation};
use crate::combinatorics::Partition;
use crate::error::{invalid, Result};
use crate::exact::{elementary_symmetric, ExponentVector, Rational, SparsePolynomial};

/// `λ(k,s) = ((q+1)^r, q^{s-r})` where `k = qs + r`, `0 ≤ r < s`.
pub fn wilson_partition(k: usize, s: usize) -> Result<Partition> {
    if k == 0 || s == 0 {
        return invalid("need k ≥ 1 and s ≥ 1");
    }
    let (q, r) = (k / s, k % s);
    let mut parts = vec![q + 1; r];
    parts.extend(std::iter::repeat_n(q, s - r));
    Partition::new(parts)
}

/// `I_{n,k,s} = ⟨e_n, e_{n-1}, ..., e_{n-k+1}, x_1^s, ..., x_n^s⟩` in the full variable set.
pub fn wilson_ideal(n: usize, k: usize, s: usize) -> Result<IdealPresentation> {
    if k == 0 || k > n || s == 0 {
        return invalid(format!("need 1 ≤ k ≤ n and s ≥ 1 (n={n}, k={k}, s={s})"));
    }
    let all: Vec<usize> = (1..=n).collect();
    let mut elementary = Vec::new();
    for d in (n - k + 1..=n).rev() {
        elementary.push(Generator {
            poly: elementary_symmetric(d, &all, n)?,
            kind: GeneratorKind::Elementary { degree: d, subset: all.clone() },
        });
    }
    Ok(IdealPresentation::with_powers(n, s as u32, elementary))
}

/// Compares the degree-`d` pieces of `I_{n,k,s}` and `I_{n,λ(k,s)}` for every
/// `d ≤ n(s-1)`; higher degrees lie entirely in `⟨x_i^s⟩` for both.
pub fn wilson_ideal_equality(n: usize, k: usize, s: usize) -> Result<bool> {
    let lhs = wilson_ideal(n, k, s)?;
    let rhs = ideal_generators(n, &wilson_partition(k, s)?)?;
    let top = (n * (s - 1)) as u32;
    let same = truncated_ideal_spans(&lhs, top)
        .iter()
        .zip(&truncated_ideal_spans(&rhs, top))
        .all(|((_, a), (_, b))| a.rank() == b.rank() && a.integer_rows() == b.integer_rows());
    Ok(same)
}

/// Expands both sides of
/// `e_d(S) = Σ_{j<s} (-1)^j x_i^j e_{d-j}(S ∪ {i}) + (-1)^s x_i^s e_{d-s}(S)`
/// and compares them.
pub fn telescoping_identity_check(subset: &[usize], i: usize, d: usize, s: usize, n: usize) -> Result<bool> {
    if subset.contains(&i) {
        return invalid(format!("index {i} already in S"));
    }
    if i == 0 || i > n {
        return invalid(format!("index {i} outside 1..{n}"));
    }
    let mut bigger = subset.to_vec();
    bigger.push(i);
    let e = |deg: isize, set: &[usize]| -> Result<SparsePolynomial> {
        if deg < 0 {
            Ok(SparsePolynomial::zero(n))
        } else {
            elementary_symmetric(deg as usize, set, n)
        }
    };
    let xi_pow = |j: usize| {
        let mut exps = vec![0; n];
        exps[i - 1] = j as u32;
        ExponentVector::new(exps)
    };
    let sign = |j: usize| Rational::from_integer(if j.is_multiple_of(2) { 1 } else { -1 }.into());
    let mut rhs = SparsePolynomial::zero(n);
    for j in 0..s {
        let term = e(d as isize - j as isize, &bigger)?.mul_monomial(&xi_pow(j))?.scale(&sign(j));
        rhs = rhs.checked_add(&term)?;
    }
    let tail = e(d as isize - s as isize, subset)?.mul_monomial(&xi_pow(s))?.scale(&sign(s));
    rhs = rhs.checked_add(&tail)?;
    Ok(e(d as isize, subset)? == rhs)
}
