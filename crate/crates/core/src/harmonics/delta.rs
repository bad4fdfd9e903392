use crate::combinatorics::{code, maxcode, tableau_of, InjectiveTableau, OrderedSetPartition};
use crate::error::{invalid, Error, Result};
use crate::exact::{apply_diff, ExponentVector, Rational, SparsePolynomial};

/// `x(T)`: the exponent of `x_i` is the number of boxes below `i` in its
/// column, or `s - 1` when `i` does not appear in `T`.
pub fn x_of_tableau(t: &InjectiveTableau, n: usize, s: usize) -> Result<ExponentVector> {
    check_tableau(t, n, s)?;
    let mut e = vec![(s - 1) as u32; n];
    for col in t.columns() {
        let h = col.len();
        for (r, &x) in col.iter().enumerate() {
            e[x - 1] = (h - 1 - r) as u32;
        }
    }
    Ok(ExponentVector::new(e))
}

fn check_tableau(t: &InjectiveTableau, n: usize, s: usize) -> Result<()> {
    if t.max_entry() > n {
        return invalid(format!("tableau entry {} exceeds n = {n}", t.max_entry()));
    }
    if s == 0 || s < t.shape().length() {
        return invalid(format!("s = {s} is smaller than the number of rows of T"));
    }
    Ok(())
}

/// `δ_T` as a product of column Vandermondes `Π_{a above b} (x_a - x_b)`
/// times `x_i^{s-1}` for every `i` absent from `T`.
pub fn delta_tableau(t: &InjectiveTableau, n: usize, s: usize) -> Result<SparsePolynomial> {
    check_tableau(t, n, s)?;
    let mut acc = SparsePolynomial::one(n);
    for col in t.columns() {
        for (a_pos, &a) in col.iter().enumerate() {
            for &b in &col[a_pos + 1..] {
                let diff = &SparsePolynomial::variable(n, a)? - &SparsePolynomial::variable(n, b)?;
                acc = &acc * &diff;
            }
        }
    }
    let mut absent = vec![0u32; n];
    for (i, slot) in absent.iter_mut().enumerate() {
        if !t.contains(i + 1) {
            *slot = (s - 1) as u32;
        }
    }
    acc.mul_monomial(&ExponentVector::new(absent))
}

/// Elements of the column group `C_T` as zero-based permutations of `0..n`,
/// paired with their signs.
fn column_group(t: &InjectiveTableau, n: usize, max_column: usize) -> Result<Vec<(Vec<usize>, i32)>> {
    let cols = t.columns();
    if let Some(c) = cols.iter().find(|c| c.len() > max_column) {
        return Err(Error::Resource(format!("column of length {} exceeds the enumeration limit {max_column}", c.len())));
    }
    let mut group = vec![((0..n).collect::<Vec<usize>>(), 1)];
    for col in cols {
        let mut next = Vec::new();
        for perm in permutations(col.len()) {
            let sign = permutation_sign(&perm);
            for (w, sg) in &group {
                let mut w = w.clone();
                for (from, &to) in perm.iter().enumerate() {
                    w[col[from] - 1] = col[to] - 1;
                }
                next.push((w, sg * sign));
            }
        }
        group = next;
    }
    Ok(group)
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(k - 1) {
        for at in 0..=p.len() {
            let mut q = p.clone();
            q.insert(at, k - 1);
            out.push(q);
        }
    }
    out
}

fn permutation_sign(p: &[usize]) -> i32 {
    let inversions = (0..p.len()).flat_map(|i| (i + 1..p.len()).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]);
    if inversions.count() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `ε_T · x(T) = Σ_{w ∈ C_T} sign(w) w(x(T))`, summed over explicitly
/// enumerated group elements. Columns longer than 6 are refused.
pub fn antisymmetrize_oracle(t: &InjectiveTableau, n: usize, s: usize) -> Result<SparsePolynomial> {
    let base = x_of_tableau(t, n, s)?;
    let mono = SparsePolynomial::monomial(base, Rational::from_integer(1.into()));
    let mut terms = Vec::new();
    for (w, sign) in column_group(t, n, 6)? {
        for (e, c) in mono.permute_variables(&w)?.terms() {
            terms.push((e.clone(), c * Rational::from_integer(sign.into())));
        }
    }
    SparsePolynomial::from_terms(n, terms)
}

/// `δ_σ = x^{maxcode(σ) - code(σ)} ⊙ δ_{T(σ)}`.
pub fn delta_osp(sigma: &OrderedSetPartition) -> Result<SparsePolynomial> {
    let n = sigma.n();
    let s = sigma.shape().num_parts();
    let c = code(sigma);
    let m = maxcode(sigma);
    let exps: Vec<u32> = m.entries().iter().zip(c.entries()).map(|(a, b)| (a - b) as u32).collect();
    let op = SparsePolynomial::monomial(ExponentVector::new(exps), Rational::from_integer(1.into()));
    apply_diff(&op, &delta_tableau(&tableau_of(sigma), n, s)?)
}

/// A permuted `(S,T)`-staircase with `d` marked boxes.
///
/// Column `i` carries `boxes[i]` boxes after applying `w`; `dots[i]` is the
/// height of the marked box in column `i`, if any. Frozen columns (indices
/// outside `S`) are never marked.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DottedStaircase {
    pub permutation: Vec<usize>,
    pub sign: i32,
    pub frozen: Vec<bool>,
    pub boxes: Vec<u32>,
    pub dots: Vec<Option<u32>>,
}

impl DottedStaircase {
    /// `x_1^{a_1} ... x_n^{a_n}` with `a_i` the unmarked boxes in column `i`.
    pub fn weight(&self) -> ExponentVector {
        ExponentVector::new(
            self.boxes.iter().zip(&self.dots).map(|(&b, d)| b - u32::from(d.is_some())).collect(),
        )
    }
}

/// Every `d`-dotted permuted `(S,T)`-staircase. `subset` holds one-based indices.
pub fn dotted_staircases(
    d: usize,
    subset: &[usize],
    t: &InjectiveTableau,
    n: usize,
    s: usize,
) -> Result<Vec<DottedStaircase>> {
    if d > subset.len() {
        return invalid(format!("d = {d} exceeds |S| = {}", subset.len()));
    }
    if subset.iter().any(|&i| i == 0 || i > n) {
        return invalid("subset index outside 1..n");
    }
    let base = x_of_tableau(t, n, s)?;
    let frozen: Vec<bool> = (1..=n).map(|i| !subset.contains(&i)).collect();
    let mut out = Vec::new();
    for (w, sign) in column_group(t, n, 8)? {
        let mut boxes = vec![0u32; n];
        for i in 0..n {
            boxes[w[i]] = base[i];
        }
        let mut dots = vec![None; n];
        place_dots(d, 0, &boxes, &frozen, &mut dots, &mut |dots| {
            out.push(DottedStaircase {
                permutation: w.clone(),
                sign,
                frozen: frozen.clone(),
                boxes: boxes.clone(),
                dots: dots.to_vec(),
            });
        });
    }
    Ok(out)
}

fn place_dots(
    left: usize,
    from: usize,
    boxes: &[u32],
    frozen: &[bool],
    dots: &mut Vec<Option<u32>>,
    emit: &mut impl FnMut(&[Option<u32>]),
) {
    if left == 0 {
        emit(dots);
        return;
    }
    for col in from..boxes.len() {
        if frozen[col] {
            continue;
        }
        for height in 0..boxes[col] {
            dots[col] = Some(height);
            place_dots(left - 1, col + 1, boxes, frozen, dots, emit);
        }
        dots[col] = None;
    }
}

/// `Σ sign(σ•) wt(σ•)` over all `d`-dotted permuted `(S,T)`-staircases;
/// equals `e_d(S) ⊙ δ_T`.
pub fn staircase_expansion(
    d: usize,
    subset: &[usize],
    t: &InjectiveTableau,
    n: usize,
    s: usize,
) -> Result<SparsePolynomial> {
    let terms = dotted_staircases(d, subset, t, n, s)?
        .into_iter()
        .map(|st| (st.weight(), Rational::from_integer(st.sign.into())));
    SparsePolynomial::from_terms(n, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{coinv, enumerate_injective_tableaux, enumerate_osp, Partition};
    use crate::exact::elementary_symmetric;

    fn tab(text: &str) -> InjectiveTableau {
        text.parse().unwrap()
    }

    fn ev(v: &[u32]) -> ExponentVector {
        ExponentVector::new(v.to_vec())
    }

    fn x(n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::variable(n, i).unwrap()
    }

    #[test]
    fn x_of_worked_tableau() {
        let t = tab("2,1,3|5,4,9|6||");
        assert_eq!(x_of_tableau(&t, 9, 5).unwrap(), ev(&[1, 2, 1, 0, 1, 0, 4, 4, 0]));
        assert_eq!(x_of_tableau(&tab("1|"), 2, 2).unwrap(), ev(&[0, 1]));
        assert_eq!(x_of_tableau(&tab("2|"), 2, 2).unwrap(), ev(&[1, 0]));
        assert!(x_of_tableau(&tab("3|"), 2, 2).is_err());
    }

    #[test]
    fn delta_of_worked_tableau() {
        let t = tab("2,1,3|5,4,9|6||");
        let v = |i, j| &x(9, i) - &x(9, j);
        let want = [v(2, 5), v(2, 6), v(5, 6), v(1, 4), v(3, 9)]
            .iter()
            .fold(SparsePolynomial::one(9), |acc, p| &acc * p)
            .mul_monomial(&ev(&[0, 0, 0, 0, 0, 0, 4, 4, 0]))
            .unwrap();
        let got = delta_tableau(&t, 9, 5).unwrap();
        assert_eq!(got, want);
        assert_eq!(got.leading_monomial().unwrap().0, &x_of_tableau(&t, 9, 5).unwrap());
        assert_eq!(antisymmetrize_oracle(&t, 9, 5).unwrap(), want);
    }

    #[test]
    fn small_deltas() {
        assert_eq!(delta_tableau(&tab("1|"), 2, 2).unwrap(), x(2, 2));
        assert_eq!(antisymmetrize_oracle(&tab("1|"), 2, 2).unwrap(), x(2, 2));
        assert_eq!(antisymmetrize_oracle(&tab("1|2"), 2, 2).unwrap(), &x(2, 1) - &x(2, 2));
    }

    #[test]
    fn oracle_refuses_long_columns() {
        let t = tab("1|2|3|4|5|6|7");
        assert!(matches!(antisymmetrize_oracle(&t, 7, 7), Err(Error::Resource(_))));
    }

    #[test]
    fn factored_delta_equals_antisymmetrization() {
        for n in 1..=4 {
            for lam in Partition::all_up_to(n) {
                let s = lam.num_parts();
                for t in enumerate_injective_tableaux(&lam, n).unwrap() {
                    let f = delta_tableau(&t, n, s).unwrap();
                    assert_eq!(f, antisymmetrize_oracle(&t, n, s).unwrap(), "T={t}");
                    assert_eq!(f.leading_monomial().unwrap().0, &x_of_tableau(&t, n, s).unwrap());
                }
            }
        }
    }

    #[test]
    fn small_delta_sigma() {
        let one = |t: &str, lam: &str| delta_osp(&OrderedSetPartition::parse(t, lam.parse().unwrap()).unwrap()).unwrap();
        assert_eq!(one("1,2|", "1,0"), SparsePolynomial::one(2));
        assert_eq!(one("2|1", "1,0"), x(2, 1));
    }

    #[test]
    fn delta_sigma_leads_with_code() {
        for n in 1..=4 {
            for lam in Partition::all_up_to(n) {
                for sigma in enumerate_osp(n, &lam).unwrap() {
                    let f = delta_osp(&sigma).unwrap();
                    let c: Vec<u32> = code(&sigma).entries().iter().map(|&a| a as u32).collect();
                    assert_eq!(f.leading_monomial().unwrap().0, &ExponentVector::new(c));
                    assert_eq!(f.homogeneous_degree(), Some(coinv(&sigma) as u32));
                }
            }
        }
    }

    #[test]
    fn staircase_small_cases() {
        let t = tab("1|2");
        assert_eq!(staircase_expansion(0, &[1, 2], &t, 2, 2).unwrap(), delta_tableau(&t, 2, 2).unwrap());
        // e_1({1,2}) ⊙ (x1 - x2) = 0
        assert!(staircase_expansion(1, &[1, 2], &t, 2, 2).unwrap().is_zero());
        // e_1({1}) ⊙ (x1 - x2) = 1
        assert_eq!(staircase_expansion(1, &[1], &t, 2, 2).unwrap(), SparsePolynomial::one(2));
        assert!(staircase_expansion(2, &[1], &t, 2, 2).is_err());
    }

    #[test]
    fn staircase_matches_differentiation_n3() {
        let n = 3;
        for lam in Partition::all_up_to(n) {
            let s = lam.num_parts();
            for t in enumerate_injective_tableaux(&lam, n).unwrap() {
                let delta = delta_tableau(&t, n, s).unwrap();
                for mask in 0u32..1 << n {
                    let subset: Vec<usize> = (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect();
                    for d in 0..=subset.len() {
                        let want = apply_diff(&elementary_symmetric(d, &subset, n).unwrap(), &delta).unwrap();
                        assert_eq!(staircase_expansion(d, &subset, &t, n, s).unwrap(), want);
                    }
                }
            }
        }
    }
}
