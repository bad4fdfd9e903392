use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{falling_factorial, format_rational, parse_rational, ExponentVector, Rational};
use crate::error::{domain, invalid, Result};

/// Polynomial in `x_1..x_n` with exact rational coefficients.
///
/// Terms are kept sorted by decreasing lex order of their exponent vectors,
/// so the leading term is the first entry. No stored coefficient is zero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    n: usize,
    terms: Vec<(ExponentVector, Rational)>,
}

impl SparsePolynomial {
    pub fn zero(n: usize) -> Self {
        SparsePolynomial { n, terms: Vec::new() }
    }

    pub fn constant(n: usize, c: Rational) -> Self {
        Self::monomial(ExponentVector::zero(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Rational::one())
    }

    pub fn monomial(exps: ExponentVector, c: Rational) -> Self {
        let n = exps.len();
        if c.is_zero() {
            return Self::zero(n);
        }
        SparsePolynomial { n, terms: vec![(exps, c)] }
    }

    /// The variable `x_i`, with `i` one-based.
    pub fn variable(n: usize, i: usize) -> Result<Self> {
        if i == 0 || i > n {
            return invalid(format!("variable x_{i} outside x_1..x_{n}"));
        }
        let mut e = vec![0; n];
        e[i - 1] = 1;
        Ok(Self::monomial(ExponentVector::new(e), Rational::one()))
    }

    /// Collects arbitrary terms, summing repeated exponents and dropping zeros.
    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (ExponentVector, Rational)>) -> Result<Self> {
        let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (e, c) in terms {
            if e.len() != n {
                return invalid(format!("exponent vector {e} in a polynomial with n = {n}"));
            }
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        Ok(Self::from_map(n, acc))
    }

    fn from_map(n: usize, acc: BTreeMap<ExponentVector, Rational>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        SparsePolynomial { n, terms }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in decreasing lex order.
    pub fn terms(&self) -> &[(ExponentVector, Rational)] {
        &self.terms
    }

    pub fn coefficient(&self, e: &ExponentVector) -> Rational {
        self.terms
            .binary_search_by(|(t, _)| e.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    /// Lex-largest monomial and its coefficient.
    pub fn leading_monomial(&self) -> Result<(&ExponentVector, &Rational)> {
        match self.terms.first() {
            Some((e, c)) => Ok((e, c)),
            None => domain("the zero polynomial has no leading monomial"),
        }
    }

    /// Total degree if every term has the same degree; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        self.terms.iter().all(|(e, _)| e.degree() == d).then_some(d)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        SparsePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut a, mut b) = (self.terms.iter().peekable(), other.terms.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some((ea, ca)), Some((eb, cb))) => match ea.cmp(eb) {
                    std::cmp::Ordering::Greater => {
                        out.push((ea.clone(), ca.clone()));
                        a.next();
                    }
                    std::cmp::Ordering::Less => {
                        out.push((eb.clone(), cb.clone()));
                        b.next();
                    }
                    std::cmp::Ordering::Equal => {
                        let c = ca + cb;
                        if !c.is_zero() {
                            out.push((ea.clone(), c));
                        }
                        a.next();
                        b.next();
                    }
                },
                (Some(t), None) => {
                    out.push((*t).clone());
                    a.next();
                }
                (None, Some(t)) => {
                    out.push((*t).clone());
                    b.next();
                }
                (None, None) => break,
            }
        }
        Ok(SparsePolynomial { n: self.n, terms: out })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.scale(&-Rational::one()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_arity(other)?;
        let mut acc: BTreeMap<ExponentVector, Rational> = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                *acc.entry(ea.mul(eb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        Ok(Self::from_map(self.n, acc))
    }

    /// Multiplies by the monomial with exponent `e`.
    pub fn mul_monomial(&self, e: &ExponentVector) -> Result<Self> {
        if e.len() != self.n {
            return invalid(format!("monomial of arity {} against n = {}", e.len(), self.n));
        }
        // shifting every term by the same exponent preserves lex order
        Ok(SparsePolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(t, c)| (t.mul(e), c.clone())).collect(),
        })
    }

    /// `∂/∂x_i`, with `i` one-based.
    pub fn derivative(&self, i: usize) -> Result<Self> {
        let mut e = vec![0; self.n];
        if i == 0 || i > self.n {
            return invalid(format!("variable x_{i} outside x_1..x_{}", self.n));
        }
        e[i - 1] = 1;
        Ok(diff_monomial(&ExponentVector::new(e), self))
    }

    /// Substitutes `x_i -> x_{w(i)}` where `w` is a permutation of `0..n` (zero-based).
    pub fn permute_variables(&self, w: &[usize]) -> Result<Self> {
        if w.len() != self.n {
            return invalid("permutation length differs from the variable count");
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = vec![0; self.n];
            for (i, &a) in e.as_slice().iter().enumerate() {
                out[w[i]] = a;
            }
            (ExponentVector::new(out), c.clone())
        });
        Self::from_terms(self.n, terms)
    }

    /// Drops every term with some exponent `>= cap`.
    pub fn truncate_exponents(&self, cap: u32) -> Self {
        SparsePolynomial {
            n: self.n,
            terms: self.terms.iter().filter(|(e, _)| e.max_exponent() < cap).cloned().collect(),
        }
    }

    fn same_arity(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return invalid(format!("polynomials in {} and {} variables", self.n, other.n));
        }
        Ok(())
    }

    pub fn to_record(&self) -> PolyRecord {
        PolyRecord {
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRecord { coeff: format_rational(c), exps: e.as_slice().to_vec() })
                .collect(),
        }
    }

    pub fn from_record(rec: &PolyRecord) -> Result<Self> {
        let mut terms = Vec::with_capacity(rec.terms.len());
        for t in &rec.terms {
            terms.push((ExponentVector::new(t.exps.clone()), parse_rational(&t.coeff)?));
        }
        Self::from_terms(rec.n, terms)
    }
}

/// Interchange form: `{"n": .., "terms": [{"coeff": "p/q", "exps": [..]}]}`,
/// terms in decreasing lex order, canonical coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRecord {
    pub n: usize,
    pub terms: Vec<TermRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: String,
    pub exps: Vec<u32>,
}

/// `x^a ⊙ g`: exponentwise falling factorials, terms with some `b_i < a_i` vanish.
fn diff_monomial(a: &ExponentVector, g: &SparsePolynomial) -> SparsePolynomial {
    let mut terms = Vec::new();
    for (b, c) in &g.terms {
        if !a.divides(b) {
            continue;
        }
        let mut coeff = c.clone();
        let mut out = Vec::with_capacity(b.len());
        for (&ai, &bi) in a.as_slice().iter().zip(b.as_slice()) {
            if ai > 0 {
                coeff *= falling_factorial(bi, ai);
            }
            out.push(bi - ai);
        }
        terms.push((ExponentVector::new(out), coeff));
    }
    // subtracting a fixed vector from a divisible set keeps lex order and distinctness
    SparsePolynomial { n: g.n, terms }
}

/// `f ⊙ g := (∂f)(g)`, substituting `∂/∂x_i` for `x_i` in `f`.
pub fn apply_diff(f: &SparsePolynomial, g: &SparsePolynomial) -> Result<SparsePolynomial> {
    f.same_arity(g)?;
    let mut acc = SparsePolynomial::zero(g.n);
    for (a, c) in &f.terms {
        let part = diff_monomial(a, g).scale(c);
        acc = acc.checked_add(&part)?;
    }
    Ok(acc)
}

/// `⟨f, g⟩`: the constant term of `f ⊙ g`. Distinct monomials are orthogonal
/// and `⟨x^a, x^a⟩ = a_1! ... a_n!`.
pub fn inner_product(f: &SparsePolynomial, g: &SparsePolynomial) -> Result<Rational> {
    f.same_arity(g)?;
    let mut acc = Rational::zero();
    for (a, c) in &f.terms {
        let d = g.coefficient(a);
        if !d.is_zero() {
            let w = a.as_slice().iter().fold(Rational::one(), |w, &ai| w * super::factorial(ai));
            acc += c * d * w;
        }
    }
    Ok(acc)
}

/// `e_d(S)` in `x_1..x_n`, where `S` holds one-based indices.
///
/// `e_0(S) = 1`; `e_d(S) = 0` whenever `d > |S|`.
pub fn elementary_symmetric(d: usize, subset: &[usize], n: usize) -> Result<SparsePolynomial> {
    let mut idx: Vec<usize> = subset.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.len() != subset.len() {
        return invalid("repeated index in variable subset");
    }
    if let Some(&bad) = idx.iter().find(|&&i| i == 0 || i > n) {
        return invalid(format!("index {bad} outside 1..{n}"));
    }
    if d > idx.len() {
        return Ok(SparsePolynomial::zero(n));
    }
    let mut terms = Vec::new();
    let mut chosen = Vec::with_capacity(d);
    choose(&idx, d, 0, &mut chosen, &mut |pick| {
        let mut e = vec![0; n];
        for &i in pick {
            e[i - 1] = 1;
        }
        terms.push((ExponentVector::new(e), Rational::one()));
    });
    SparsePolynomial::from_terms(n, terms)
}

fn choose(pool: &[usize], k: usize, start: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if cur.len() == k {
        f(cur);
        return;
    }
    for i in start..pool.len() {
        if pool.len() - i < k - cur.len() {
            break;
        }
        cur.push(pool[i]);
        choose(pool, k, i + 1, cur, f);
        cur.pop();
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;
    /// Panics on arity mismatch; use [`SparsePolynomial::checked_add`] otherwise.
    fn add(self, rhs: Self) -> SparsePolynomial {
        self.checked_add(rhs).expect("arity mismatch in polynomial addition")
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn sub(self, rhs: Self) -> SparsePolynomial {
        self.checked_sub(rhs).expect("arity mismatch in polynomial subtraction")
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn mul(self, rhs: Self) -> SparsePolynomial {
        self.checked_mul(rhs).expect("arity mismatch in polynomial multiplication")
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;
    fn neg(self) -> SparsePolynomial {
        self.scale(&-Rational::one())
    }
}

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let neg = c < &Rational::zero();
            let mag = if neg { -c.clone() } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let is_const = e.degree() == 0;
            if !mag.is_one() || is_const {
                write!(f, "{}", format_rational(&mag))?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (i, &a) in e.as_slice().iter().enumerate() {
                if a == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "x{}", i + 1)?;
                if a > 1 {
                    write!(f, "^{a}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::monomials_of_degree;
    use proptest::prelude::*;

    fn q(a: i64) -> Rational {
        Rational::from_integer(a.into())
    }

    fn mono(e: &[u32], c: i64) -> SparsePolynomial {
        SparsePolynomial::monomial(ExponentVector::new(e.to_vec()), q(c))
    }

    fn x(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i).unwrap()
    }

    #[test]
    fn leading_monomial_examples() {
        let f = &x(2, 1) - &x(2, 2);
        let (e, c) = f.leading_monomial().unwrap();
        assert_eq!(e.as_slice(), &[1, 0]);
        assert_eq!(*c, q(1));

        let v = |i, j| &x(9, i) - &x(9, j);
        let f = [v(2, 5), v(2, 6), v(5, 6), v(1, 4), v(3, 9), mono(&[0, 0, 0, 0, 0, 0, 4, 4, 0], 1)]
            .iter()
            .fold(SparsePolynomial::one(9), |acc, p| &acc * p);
        assert_eq!(f.leading_monomial().unwrap().0.as_slice(), &[1, 2, 1, 0, 1, 0, 4, 4, 0]);

        let c = SparsePolynomial::constant(3, q(5));
        let (e, k) = c.leading_monomial().unwrap();
        assert_eq!(e.as_slice(), &[0, 0, 0]);
        assert_eq!(*k, q(5));

        assert!(matches!(SparsePolynomial::zero(2).leading_monomial(), Err(crate::Error::Domain(_))));
    }

    #[test]
    fn apply_diff_examples() {
        assert_eq!(apply_diff(&mono(&[2], 1), &mono(&[3], 1)).unwrap(), mono(&[1], 6));
        assert!(apply_diff(&x(2, 1), &x(2, 2)).unwrap().is_zero());
        assert_eq!(apply_diff(&x(2, 2), &x(2, 2)).unwrap(), SparsePolynomial::one(2));
        assert!(apply_diff(&x(2, 1), &x(3, 1)).is_err());
    }

    #[test]
    fn inner_product_examples() {
        let m = mono(&[2, 1], 1);
        assert_eq!(inner_product(&m, &m).unwrap(), q(2));
        assert_eq!(inner_product(&x(2, 1), &x(2, 2)).unwrap(), q(0));
        assert_eq!(inner_product(&SparsePolynomial::one(2), &SparsePolynomial::one(2)).unwrap(), q(1));
        assert!(inner_product(&x(2, 1), &x(1, 1)).is_err());
    }

    #[test]
    fn inner_product_on_monomials_is_factorial_diagonal() {
        for n in 1..=4usize {
            let all: Vec<_> = (0..=4 * n as u32).flat_map(|d| monomials_of_degree(n, d, 5)).collect();
            for a in &all {
                for b in &all {
                    let got = inner_product(
                        &SparsePolynomial::monomial(a.clone(), q(1)),
                        &SparsePolynomial::monomial(b.clone(), q(1)),
                    )
                    .unwrap();
                    let want = if a == b {
                        a.as_slice().iter().map(|&k| (1..=k as i64).product::<i64>()).product::<i64>()
                    } else {
                        0
                    };
                    assert_eq!(got, q(want));
                }
            }
        }
    }

    #[test]
    fn elementary_symmetric_examples() {
        let e = elementary_symmetric(2, &[1, 4, 5, 7], 7).unwrap();
        let want = [(1, 4), (1, 5), (1, 7), (4, 5), (4, 7), (5, 7)]
            .iter()
            .fold(SparsePolynomial::zero(7), |acc, &(i, j)| &acc + &(&x(7, i) * &x(7, j)));
        assert_eq!(e, want);
        assert_eq!(elementary_symmetric(0, &[2, 3], 3).unwrap(), SparsePolynomial::one(3));
        assert!(elementary_symmetric(3, &[1, 2], 2).unwrap().is_zero());
        assert!(elementary_symmetric(1, &[3], 2).is_err());
    }

    #[test]
    fn elementary_symmetric_recurrence() {
        let n = 5;
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
            for i in (1..=n).filter(|i| !s.contains(i)) {
                let mut t = s.clone();
                t.push(i);
                for d in 1..=n {
                    let lhs = elementary_symmetric(d, &t, n).unwrap();
                    let rhs = &elementary_symmetric(d, &s, n).unwrap()
                        + &(&x(n, i) * &elementary_symmetric(d - 1, &s, n).unwrap());
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn record_round_trip_is_canonical() {
        let f = &(&x(3, 1) * &x(3, 2)).scale(&Rational::new(3.into(), 6.into())) - &x(3, 3);
        let rec = f.to_record();
        assert_eq!(rec.terms[0].coeff, "1/2");
        assert_eq!(rec.terms[1].coeff, "-1");
        assert_eq!(SparsePolynomial::from_record(&rec).unwrap(), f);
    }

    fn small_poly(n: usize) -> impl Strategy<Value = SparsePolynomial> {
        prop::collection::vec((prop::collection::vec(0u32..4, n), -5i64..=5), 0..6).prop_map(move |ts| {
            SparsePolynomial::from_terms(n, ts.into_iter().map(|(e, c)| (ExponentVector::new(e), q(c)))).unwrap()
        })
    }

    fn homogeneous(n: usize, d: u32) -> impl Strategy<Value = SparsePolynomial> {
        let basis: Vec<_> = monomials_of_degree(n, d, d + 1).collect();
        prop::collection::vec(-4i64..=4, basis.len()).prop_map(move |cs| {
            SparsePolynomial::from_terms(n, basis.iter().cloned().zip(cs.into_iter().map(q))).unwrap()
        })
    }

    proptest! {
        #[test]
        fn diff_is_bilinear(f1 in small_poly(3), f2 in small_poly(3), g1 in small_poly(3), g2 in small_poly(3)) {
            let lhs = apply_diff(&(&f1 + &f2), &g1).unwrap();
            let rhs = &apply_diff(&f1, &g1).unwrap() + &apply_diff(&f2, &g1).unwrap();
            prop_assert_eq!(lhs, rhs);
            let lhs = apply_diff(&f1, &(&g1 + &g2)).unwrap();
            let rhs = &apply_diff(&f1, &g1).unwrap() + &apply_diff(&f1, &g2).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn pairing_symmetric_and_graded(f in homogeneous(3, 2), g in homogeneous(3, 2), h in homogeneous(3, 3)) {
            prop_assert_eq!(inner_product(&f, &g).unwrap(), inner_product(&g, &f).unwrap());
            prop_assert_eq!(inner_product(&f, &h).unwrap(), q(0));
        }

        #[test]
        fn record_round_trip(f in small_poly(4)) {
            let json = serde_json::to_string(&f.to_record()).unwrap();
            let back: PolyRecord = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(SparsePolynomial::from_record(&back).unwrap(), f);
        }
    }
}
