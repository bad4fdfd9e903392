use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use super::matrix::clear_denominators;
use std::collections::{BTreeMap, BTreeSet};

use super::{ExponentVector, Rational, RationalMatrix, SparsePolynomial};

/// Integer entries for fraction-free elimination. Machine integers report
/// overflow instead of wrapping.
trait Scalar: Clone + std::fmt::Debug {
    fn zero_value() -> Self;
    fn vanishes(&self) -> bool;
    fn negative(&self) -> bool;
    fn negate(&self) -> Self;
    /// `a*x - b*y`
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self>;
    fn gcd_with(&self, other: &Self) -> Self;
    fn is_unit(&self) -> bool;
    fn div_exact(&self, g: &Self) -> Self;
    fn to_big(&self) -> BigInt;
}

impl Scalar for i128 {
    fn zero_value() -> Self {
        0
    }
    fn vanishes(&self) -> bool {
        *self == 0
    }
    fn negative(&self) -> bool {
        *self < 0
    }
    fn negate(&self) -> Self {
        -self
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        a.checked_mul(*x)?.checked_sub(b.checked_mul(*y)?)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        *self == 1
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
    fn to_big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Scalar for BigInt {
    fn zero_value() -> Self {
        Zero::zero()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn negate(&self) -> Self {
        -self
    }
    fn cross(a: &Self, x: &Self, b: &Self, y: &Self) -> Option<Self> {
        Some(a * x - b * y)
    }
    fn gcd_with(&self, other: &Self) -> Self {
        Integer::gcd(self, other)
    }
    fn is_unit(&self) -> bool {
        num_traits::One::is_one(self)
    }
    fn div_exact(&self, g: &Self) -> Self {
        self / g
    }
    fn to_big(&self) -> BigInt {
        self.clone()
    }
}

fn make_primitive<T: Scalar>(v: &mut [T]) {
    let mut g = T::zero_value();
    for x in v.iter() {
        if !x.vanishes() {
            g = g.gcd_with(x);
            if g.is_unit() {
                return;
            }
        }
    }
    if g.vanishes() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_exact(&g);
    }
}

/// Rows kept primitive, with positive pivots, and zero in every other row's pivot column.
#[derive(Debug, Clone)]
struct Reduced<T> {
    rows: Vec<(usize, Vec<T>)>,
}

impl<T: Scalar> Reduced<T> {
    /// Eliminates `row`'s pivot column from `v`.
    fn eliminate(v: &mut [T], pivot: usize, row: &[T]) -> Option<()> {
        let f = v[pivot].clone();
        if f.vanishes() {
            return Some(());
        }
        let lead = &row[pivot];
        let zero = T::zero_value();
        for (x, r) in v.iter_mut().zip(row) {
            if r.vanishes() {
                if !x.vanishes() {
                    *x = T::cross(lead, x, &zero, &zero)?;
                }
            } else {
                *x = T::cross(lead, x, &f, r)?;
            }
        }
        make_primitive(v);
        Some(())
    }

    /// `None` means a machine-integer overflow; `self` is then unchanged.
    fn insert(&mut self, mut v: Vec<T>) -> Option<bool> {
        for (p, r) in &self.rows {
            Self::eliminate(&mut v, *p, r)?;
        }
        let Some(q) = v.iter().position(|x| !x.vanishes()) else {
            return Some(false);
        };
        make_primitive(&mut v);
        if v[q].negative() {
            v.iter_mut().for_each(|x| *x = x.negate());
        }
        let mut updated = Vec::new();
        for (k, (_, r)) in self.rows.iter().enumerate() {
            if !r[q].vanishes() {
                let mut r = r.clone();
                Self::eliminate(&mut r, q, &v)?;
                updated.push((k, r));
            }
        }
        for (k, r) in updated {
            self.rows[k].1 = r;
        }
        let at = self.rows.partition_point(|(p, _)| *p < q);
        self.rows.insert(at, (q, v));
        Some(true)
    }
}

#[derive(Debug, Clone)]
enum Store {
    Small(Reduced<i128>),
    Big(Reduced<BigInt>),
}

/// Incrementally grown basis of a subspace of `ℚ^cols`, held in reduced row
/// echelon form up to scaling each row to a primitive integer vector.
///
/// Arithmetic runs on `i128` until something overflows, then on `BigInt`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    cols: usize,
    store: Store,
}

impl EchelonBasis {
    pub fn new(cols: usize) -> Self {
        EchelonBasis { cols, store: Store::Small(Reduced { rows: Vec::new() }) }
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rank(&self) -> usize {
        match &self.store {
            Store::Small(r) => r.rows.len(),
            Store::Big(r) => r.rows.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn pivots(&self) -> Vec<usize> {
        match &self.store {
            Store::Small(r) => r.rows.iter().map(|(p, _)| *p).collect(),
            Store::Big(r) => r.rows.iter().map(|(p, _)| *p).collect(),
        }
    }

    /// Adds a sparse row `(column, value)`; returns `true` if it enlarged the span.
    pub fn insert_sparse(&mut self, entries: &[(usize, BigInt)]) -> bool {
        let mut v = vec![BigInt::zero(); self.cols];
        for (c, x) in entries {
            v[*c] += x;
        }
        self.insert(v)
    }

    pub fn insert_rational(&mut self, row: &[Rational]) -> bool {
        self.insert(clear_denominators(row))
    }

    /// Adds a dense integer row; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: Vec<BigInt>) -> bool {
        assert_eq!(v.len(), self.cols);
        if let Store::Small(small) = &mut self.store {
            if let Some(sv) = v.iter().map(ToPrimitive::to_i128).collect::<Option<Vec<_>>>() {
                if let Some(added) = small.insert(sv) {
                    return added;
                }
            }
            let rows = small.rows.iter().map(|(p, r)| (*p, r.iter().map(Scalar::to_big).collect())).collect();
            self.store = Store::Big(Reduced { rows });
        }
        match &mut self.store {
            Store::Big(big) => big.insert(v).expect("BigInt arithmetic does not overflow"),
            Store::Small(_) => unreachable!(),
        }
    }

    /// Whether `v` already lies in the span.
    pub fn contains(&self, v: &[Rational]) -> bool {
        let mut probe = self.clone();
        !probe.insert_rational(v)
    }

    /// Basis rows as primitive integer vectors, sorted by pivot.
    pub fn integer_rows(&self) -> Vec<Vec<BigInt>> {
        match &self.store {
            Store::Small(r) => r.rows.iter().map(|(_, v)| v.iter().map(Scalar::to_big).collect()).collect(),
            Store::Big(r) => r.rows.iter().map(|(_, v)| v.clone()).collect(),
        }
    }

    /// The span as a matrix in reduced row echelon form.
    pub fn to_rref(&self) -> RationalMatrix {
        let pivots = self.pivots();
        let rows = self
            .integer_rows()
            .into_iter()
            .zip(pivots)
            .map(|(r, p)| {
                let lead = r[p].clone();
                r.into_iter().map(|x| Rational::new(x, lead.clone())).collect()
            })
            .collect();
        RationalMatrix::from_rows(self.cols, rows)
    }

    /// The standard basis of the orthogonal complement: one vector per
    /// non-pivot column `f`, with `1` at `f` and zeros at the other non-pivots.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let rref = self.to_rref();
        let pivots = self.pivots();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::from_integer(1.into());
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -rref.get(i, f).clone();
                }
                v
            })
            .collect()
    }
}

/// Dimension of the span of `polys`, which must share an arity.
pub fn span_dimension(polys: &[SparsePolynomial]) -> usize {
    let monos: BTreeSet<&ExponentVector> = polys.iter().flat_map(|p| p.terms().iter().map(|(e, _)| e)).collect();
    let index: BTreeMap<&ExponentVector, usize> = monos.into_iter().enumerate().map(|(i, e)| (e, i)).collect();
    let mut basis = EchelonBasis::new(index.len());
    for p in polys {
        let mut row = vec![Rational::zero(); index.len()];
        for (e, c) in p.terms() {
            row[index[e]] = c.clone();
        }
        basis.insert_rational(&row);
    }
    basis.rank()
}
