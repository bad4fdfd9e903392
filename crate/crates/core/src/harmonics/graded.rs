use std::collections::{BTreeSet, HashMap, VecDeque};

use super::{delta_tableau, ideal_generators, IdealPresentation};
use crate::combinatorics::{coinv, enumerate_injective_tableaux, enumerate_osp, Partition};
use crate::error::{invalid, Result};
use crate::exact::{apply_diff, factorial, monomials_of_degree, EchelonBasis, ExponentVector, Rational, SparsePolynomial};
use num_bigint::BigInt;
use num_traits::Zero;

/// Degree-`d` monomials with every exponent `< cap`, decreasing lex, indexed.
pub(crate) struct MonomialBasis {
    monos: Vec<ExponentVector>,
    index: HashMap<ExponentVector, usize>,
}

impl MonomialBasis {
    pub(crate) fn new(n: usize, d: u32, cap: u32) -> Self {
        let monos: Vec<ExponentVector> = monomials_of_degree(n, d, cap).collect();
        let index = monos.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialBasis { monos, index }
    }

    pub(crate) fn len(&self) -> usize {
        self.monos.len()
    }

    /// Coefficient vector of `p`; monomials outside the basis are dropped.
    pub(crate) fn row(&self, p: &SparsePolynomial) -> Vec<Rational> {
        let mut v = vec![Rational::from_integer(0.into()); self.monos.len()];
        for (e, c) in p.terms() {
            if let Some(&i) = self.index.get(e) {
                v[i] = c.clone();
            }
        }
        v
    }

    pub(crate) fn poly(&self, n: usize, coeffs: &[Rational]) -> SparsePolynomial {
        let terms = self.monos.iter().cloned().zip(coeffs.iter().cloned());
        SparsePolynomial::from_terms(n, terms).expect("basis monomials have length n")
    }
}

/// Truncated degree pieces of the ideal for `d = 0..=top`.
///
/// Write `π` for the projection that drops monomials with an exponent `≥ s`;
/// those lie in `⟨x_i^s⟩` already. Since `π(x_i · π(f)) = π(x_i · f)`,
/// `π(I_d) = Σ_i π(x_i · π(I_{d-1})) + π(span of the degree-d generators)`.
pub(crate) fn truncated_ideal_spans(ideal: &IdealPresentation, top: u32) -> Vec<(MonomialBasis, EchelonBasis)> {
    let (n, cap) = (ideal.n, ideal.power);
    let mut out: Vec<(MonomialBasis, EchelonBasis)> = Vec::new();
    for d in 0..=top {
        let basis = MonomialBasis::new(n, d, cap);
        let mut span = EchelonBasis::new(basis.len());
        if let Some((prev_basis, prev_span)) = out.last() {
            'rows: for row in prev_span.integer_rows() {
                for i in 0..n {
                    if span.is_full() {
                        break 'rows;
                    }
                    let mut v = vec![BigInt::zero(); basis.len()];
                    let mut any = false;
                    for (c, x) in row.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
                        let mut e = prev_basis.monos[c].as_slice().to_vec();
                        e[i] += 1;
                        if e[i] < cap {
                            v[basis.index[&ExponentVector::new(e)]] = x.clone();
                            any = true;
                        }
                    }
                    if any {
                        span.insert(v);
                    }
                }
            }
        }
        for g in ideal.elementary().filter(|g| g.degree() == d) {
            if span.is_full() {
                break;
            }
            span.insert_rational(&basis.row(&g.poly));
        }
        out.push((basis, span));
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    (1..=k).fold(1u64, |acc, i| acc * (n - k + i) / i)
}

/// `dim ℚ[x_n]_d`.
fn ambient_dimension(n: usize, d: u32) -> usize {
    binomial(u64::from(d) + n as u64 - 1, n as u64 - 1) as usize
}

/// `dim (I)_d`, by exact elimination.
pub fn graded_ideal_dimension(ideal: &IdealPresentation, d: u32) -> usize {
    let top = (ideal.n as u32) * ideal.power.saturating_sub(1);
    if d > top {
        return ambient_dimension(ideal.n, d);
    }
    let spans = truncated_ideal_spans(ideal, d);
    let (basis, span) = &spans[d as usize];
    ambient_dimension(ideal.n, d) - basis.len() + span.rank()
}

/// Per-degree dimensions of `ℚ[x_n]`, `I_{n,λ}` and `R_{n,λ}` for `d = 0..n(s-1)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedDimensionTable {
    pub ambient: Vec<usize>,
    pub ideal: Vec<usize>,
    pub quotient: Vec<usize>,
}

impl GradedDimensionTable {
    /// Hilbert series coefficients with trailing zeros removed.
    pub fn series(&self) -> Vec<usize> {
        trim(self.quotient.clone())
    }

    pub fn total(&self) -> usize {
        self.quotient.iter().sum()
    }
}

fn trim(mut v: Vec<usize>) -> Vec<usize> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn top_degree(n: usize, shape: &Partition) -> u32 {
    (n * (shape.num_parts() - 1)) as u32
}

fn check(n: usize, shape: &Partition) -> Result<()> {
    if n == 0 || shape.num_parts() == 0 {
        return invalid("need n ≥ 1 and at least one part");
    }
    if shape.size() > n {
        return invalid(format!("|λ| = {} exceeds n = {n}", shape.size()));
    }
    Ok(())
}

/// Graded dimensions of `R_{n,λ}` by linear algebra. Every monomial of degree
/// above `n(s-1)` has an exponent `≥ s`, so the table stops there.
pub fn hilbert_linear_algebra(n: usize, shape: &Partition) -> Result<GradedDimensionTable> {
    check(n, shape)?;
    let ideal = ideal_generators(n, shape)?;
    let mut table = GradedDimensionTable { ambient: Vec::new(), ideal: Vec::new(), quotient: Vec::new() };
    for (d, (basis, span)) in truncated_ideal_spans(&ideal, top_degree(n, shape)).iter().enumerate() {
        let amb = ambient_dimension(n, d as u32);
        let dim_i = amb - basis.len() + span.rank();
        table.ambient.push(amb);
        table.ideal.push(dim_i);
        table.quotient.push(amb - dim_i);
    }
    Ok(table)
}

/// `Σ_{σ ∈ OP_{n,λ}} q^{coinv(σ)}` as a coefficient vector, trailing zeros removed.
pub fn hilbert_coinv(n: usize, shape: &Partition) -> Result<Vec<usize>> {
    check(n, shape)?;
    let mut coeffs = vec![0usize; top_degree(n, shape) as usize + 1];
    for sigma in enumerate_osp(n, shape)? {
        let c = coinv(&sigma);
        if c >= coeffs.len() {
            coeffs.resize(c + 1, 0);
        }
        coeffs[c] += 1;
    }
    Ok(trim(coeffs))
}

/// `true` iff every generator annihilates `f` under `⊙`.
///
/// This certifies `f ∈ I^⊥`: for `h = Σ a_j g_j`, `h ⊙ f = Σ a_j ⊙ (g_j ⊙ f)`.
pub fn harmonic_check(f: &SparsePolynomial, ideal: &IdealPresentation) -> Result<bool> {
    if f.n() != ideal.n {
        return invalid(format!("polynomial in {} variables against an ideal in {}", f.n(), ideal.n));
    }
    for g in &ideal.generators {
        if !apply_diff(&g.poly, f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Basis of `V_{n,λ} ∩ ℚ[x_n]_d` in reduced echelon form with respect to
/// decreasing lex order, so leading monomials are pairwise distinct.
pub fn harmonic_space_basis(n: usize, shape: &Partition, d: u32) -> Result<Vec<SparsePolynomial>> {
    check(n, shape)?;
    let s = shape.num_parts() as u32;
    if shape.size() == 0 {
        // no elementary generators: V is spanned by the monomials with exponents < s
        let one = Rational::from_integer(1.into());
        return Ok(monomials_of_degree(n, d, s).map(|m| SparsePolynomial::monomial(m, one.clone())).collect());
    }
    let ideal = ideal_generators(n, shape)?;
    if d > top_degree(n, shape) {
        return Ok(Vec::new());
    }
    Ok(harmonic_basis_of(&ideal, d))
}

/// `(I_d)^⊥` inside the span of monomials with exponents `< s`. With `u`
/// orthogonal to the ideal rows in the plain dot product, `u_b / b!` is
/// orthogonal under `⟨x^b, x^b⟩ = b!`.
fn harmonic_basis_from_span(n: usize, basis: &MonomialBasis, span: &EchelonBasis) -> Vec<SparsePolynomial> {
    let mut out = EchelonBasis::new(basis.len());
    for u in span.null_space() {
        let v: Vec<Rational> = u
            .iter()
            .zip(&basis.monos)
            .map(|(x, m)| x / m.as_slice().iter().fold(Rational::from_integer(1.into()), |w, &a| w * factorial(a)))
            .collect();
        out.insert_rational(&v);
    }
    let rref = out.to_rref();
    (0..rref.rows()).map(|r| basis.poly(n, rref.row(r))).collect()
}

pub(crate) fn harmonic_basis_of(ideal: &IdealPresentation, d: u32) -> Vec<SparsePolynomial> {
    let spans = truncated_ideal_spans(ideal, d);
    let (basis, span) = &spans[d as usize];
    harmonic_basis_from_span(ideal.n, basis, span)
}

/// Harmonic bases in every degree `0..=n(s-1)`, as from [`harmonic_space_basis`].
pub fn harmonic_space_bases(n: usize, shape: &Partition) -> Result<Vec<Vec<SparsePolynomial>>> {
    check(n, shape)?;
    let top = top_degree(n, shape);
    if shape.size() == 0 {
        return (0..=top).map(|d| harmonic_space_basis(n, shape, d)).collect();
    }
    let ideal = ideal_generators(n, shape)?;
    Ok(truncated_ideal_spans(&ideal, top).iter().map(|(basis, span)| harmonic_basis_from_span(n, basis, span)).collect())
}

/// Lex-leading exponents of all nonzero harmonic polynomials, gathered from the
/// echelonized degree-by-degree bases of `V_{n,λ}`.
pub fn leading_exponents_of_harmonics(n: usize, shape: &Partition) -> Result<BTreeSet<ExponentVector>> {
    let mut out = BTreeSet::new();
    for f in harmonic_space_bases(n, shape)?.iter().flatten() {
        out.insert(f.leading_monomial()?.0.clone());
    }
    Ok(out)
}

/// `dim span{x^b ⊙ δ_T : T ∈ Inj(λ, ≤ n), b ≥ 0}`.
///
/// Breadth-first closure under `∂/∂x_i`; only polynomials that enlarge their
/// degree's span are differentiated further.
pub fn module_closure_dimension(n: usize, shape: &Partition) -> Result<usize> {
    check(n, shape)?;
    let s = shape.num_parts();
    let cap = s as u32;
    let mut layers: HashMap<u32, (MonomialBasis, EchelonBasis)> = HashMap::new();
    let mut queue = VecDeque::new();
    let mut admit = |f: SparsePolynomial, queue: &mut VecDeque<SparsePolynomial>| {
        let d = f.homogeneous_degree().expect("derivatives of δ_T are homogeneous");
        let (basis, span) = layers.entry(d).or_insert_with(|| {
            let b = MonomialBasis::new(n, d, cap);
            let len = b.len();
            (b, EchelonBasis::new(len))
        });
        if span.insert_rational(&basis.row(&f)) {
            queue.push_back(f);
        }
    };
    for t in enumerate_injective_tableaux(shape, n)? {
        admit(delta_tableau(&t, n, s)?, &mut queue);
    }
    while let Some(f) = queue.pop_front() {
        for i in 1..=n {
            let g = f.derivative(i)?;
            if !g.is_zero() {
                admit(g, &mut queue);
            }
        }
    }
    Ok(layers.values().map(|(_, span)| span.rank()).sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::enumerate_codes;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    fn x(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i).unwrap()
    }

    #[test]
    fn graded_ideal_dimension_examples() {
        let i10 = ideal_generators(2, &p("1,0")).unwrap();
        assert_eq!(graded_ideal_dimension(&i10, 2), 3);
        assert_eq!(graded_ideal_dimension(&i10, 0), 0);
        let i11 = ideal_generators(2, &p("1,1")).unwrap();
        assert_eq!(graded_ideal_dimension(&i11, 1), 1);
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_linear_algebra(2, &p("1,0")).unwrap().series(), vec![1, 2]);
        assert_eq!(hilbert_linear_algebra(3, &p("1,1,1")).unwrap().series(), vec![1, 2, 2, 1]);
        assert_eq!(hilbert_linear_algebra(2, &p("1,1")).unwrap().series(), vec![1, 1]);
        assert_eq!(hilbert_linear_algebra(2, &p("0,0")).unwrap().series(), vec![1, 2, 1]);
        assert_eq!(hilbert_coinv(2, &p("1,0")).unwrap(), vec![1, 2]);
        assert_eq!(hilbert_coinv(2, &p("1,1")).unwrap(), vec![1, 1]);
        assert_eq!(hilbert_coinv(2, &p("0,0")).unwrap(), vec![1, 2, 1]);
    }

    #[test]
    fn table_rows_are_consistent() {
        let t = hilbert_linear_algebra(3, &p("2,1,0")).unwrap();
        for d in 0..t.ambient.len() {
            assert_eq!(t.quotient[d], t.ambient[d] - t.ideal[d]);
        }
        assert_eq!(t.total(), enumerate_osp(3, &p("2,1,0")).unwrap().len());
    }

    #[test]
    fn harmonic_check_examples() {
        let ideal = ideal_generators(2, &p("1,0")).unwrap();
        let pow = SparsePolynomial::monomial(ExponentVector::new(vec![2, 0]), Rational::from_integer(1.into()));
        assert!(!harmonic_check(&pow, &ideal).unwrap());
        assert!(harmonic_check(&SparsePolynomial::constant(2, Rational::from_integer(7.into())), &ideal).unwrap());
        assert!(harmonic_check(&x(2, 1), &ideal).unwrap());
        assert!(!harmonic_check(&(&x(2, 1) * &x(2, 2)), &ideal).unwrap());
        assert!(harmonic_check(&x(3, 1), &ideal).is_err());
    }

    #[test]
    fn harmonic_basis_examples() {
        let b = harmonic_space_basis(2, &p("1,0"), 1).unwrap();
        assert_eq!(b, vec![x(2, 1), x(2, 2)]);
        let b = harmonic_space_basis(2, &p("1,1"), 1).unwrap();
        assert_eq!(b, vec![&x(2, 1) - &x(2, 2)]);
        assert_eq!(harmonic_space_basis(2, &p("1,1"), 2).unwrap(), vec![]);
    }

    #[test]
    fn zero_shape_fast_path_matches_generic_path() {
        for n in 1..=3 {
            for s in 1..=3usize {
                let lam = Partition::new(vec![0; s]).unwrap();
                let ideal = ideal_generators(n, &lam).unwrap();
                for d in 0..=(n * (s - 1)) as u32 {
                    assert_eq!(harmonic_space_basis(n, &lam, d).unwrap(), harmonic_basis_of(&ideal, d));
                }
            }
        }
    }

    #[test]
    fn leading_exponent_examples() {
        let want = |v: &[&[u32]]| -> BTreeSet<ExponentVector> { v.iter().map(|e| ExponentVector::new(e.to_vec())).collect() };
        assert_eq!(leading_exponents_of_harmonics(2, &p("1,0")).unwrap(), want(&[&[0, 0], &[0, 1], &[1, 0]]));
        assert_eq!(leading_exponents_of_harmonics(2, &p("1,1")).unwrap(), want(&[&[0, 0], &[1, 0]]));
    }

    #[test]
    fn module_closure_examples() {
        assert_eq!(module_closure_dimension(2, &p("1,0")).unwrap(), 3);
        assert_eq!(module_closure_dimension(3, &p("1,1,1")).unwrap(), 6);
        assert_eq!(module_closure_dimension(2, &p("1,1")).unwrap(), 2);
    }

    #[test]
    fn random_ideal_elements_kill_delta() {
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let mut rng = StdRng::seed_from_u64(7);
        for (n, text) in [(3, "1,1,0"), (4, "2,1,0"), (4, "1,1,1,1"), (3, "0,0,0")] {
            let lam = p(text);
            let s = lam.num_parts();
            let ideal = ideal_generators(n, &lam).unwrap();
            let deltas: Vec<_> = enumerate_injective_tableaux(&lam, n)
                .unwrap()
                .iter()
                .map(|t| delta_tableau(t, n, s).unwrap())
                .collect();
            for _ in 0..20 {
                let mut h = SparsePolynomial::zero(n);
                for _ in 0..3 {
                    let g = &ideal.generators[rng.gen_range(0..ideal.generators.len())].poly;
                    let m = ExponentVector::new((0..n).map(|_| rng.gen_range(0..2)).collect());
                    let c = Rational::from_integer(rng.gen_range(-3i64..4).into());
                    h = h.checked_add(&g.mul_monomial(&m).unwrap().scale(&c)).unwrap();
                }
                for d in &deltas {
                    assert!(apply_diff(&h, d).unwrap().is_zero());
                }
            }
        }
    }

    #[test]
    fn small_sweep_agrees() {
        for n in 1..=3 {
            for lam in Partition::all_up_to(n) {
                let codes: BTreeSet<ExponentVector> = enumerate_codes(n, &lam)
                    .unwrap()
                    .into_iter()
                    .map(|c| ExponentVector::new(c.entries().iter().map(|&a| a as u32).collect()))
                    .collect();
                assert_eq!(hilbert_linear_algebra(n, &lam).unwrap().series(), hilbert_coinv(n, &lam).unwrap(), "λ={lam}");
                assert_eq!(leading_exponents_of_harmonics(n, &lam).unwrap(), codes, "λ={lam}");
                assert_eq!(module_closure_dimension(n, &lam).unwrap(), codes.len(), "λ={lam}");
            }
        }
    }
}
