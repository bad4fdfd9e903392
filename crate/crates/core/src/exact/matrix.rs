use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::Rational;

/// Dense matrix over `ℚ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix { rows, cols, entries: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.entries[i * n + i] = Rational::one();
        }
        m
    }

    /// Builds a matrix from rows of equal length `cols`.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let nrows = rows.len();
        let mut entries = Vec::with_capacity(nrows * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged matrix row");
            entries.extend(r);
        }
        RationalMatrix { rows: nrows, cols, entries }
    }

    pub fn from_integers(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            cols,
            rows.iter().map(|r| r.iter().map(|&a| Rational::from_integer(a.into())).collect()).collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.entries[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
            .collect()
    }

    /// Reduced row echelon form (zero rows dropped) and its pivot columns.
    ///
    /// Rows are cleared to integers and eliminated with Bareiss' fraction-free
    /// scheme; only the final back substitution divides.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut ints: Vec<Vec<BigInt>> = (0..self.rows).map(|r| clear_denominators(self.row(r))).collect();
        let pivots = bareiss(&mut ints, self.cols);
        let rank = pivots.len();
        let mut red: Vec<Vec<Rational>> = ints
            .into_iter()
            .take(rank)
            .map(|r| r.into_iter().map(Rational::from_integer).collect())
            .collect();
        for (i, &p) in pivots.iter().enumerate().rev() {
            let lead = red[i][p].clone();
            for x in red[i].iter_mut() {
                *x /= &lead;
            }
            for k in 0..i {
                let f = red[k][p].clone();
                if f.is_zero() {
                    continue;
                }
                let (top, bottom) = red.split_at_mut(i);
                for (a, b) in top[k].iter_mut().zip(&bottom[0]) {
                    *a -= &f * b;
                }
            }
        }
        (RationalMatrix::from_rows(self.cols, red), pivots)
    }

    pub fn rank(&self) -> usize {
        let mut ints: Vec<Vec<BigInt>> = (0..self.rows).map(|r| clear_denominators(self.row(r))).collect();
        bareiss(&mut ints, self.cols).len()
    }

    /// Basis of the right null space, itself in reduced row echelon form.
    pub fn null_space(&self) -> Vec<Vec<Rational>> {
        let (red, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = vec![Rational::zero(); self.cols];
            v[free] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -red.get(i, free).clone();
            }
            basis.push(v);
        }
        if basis.is_empty() {
            return basis;
        }
        let (ech, _) = RationalMatrix::from_rows(self.cols, basis).rref();
        (0..ech.rows).map(|r| ech.row(r).to_vec()).collect()
    }
}

/// Scales a rational row by the lcm of its denominators.
pub(crate) fn clear_denominators(row: &[Rational]) -> Vec<BigInt> {
    let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    row.iter().map(|x| x.numer() * (&l / x.denom())).collect()
}

/// In-place fraction-free elimination to row echelon form; returns pivot columns.
/// Every intermediate entry is a minor of the input, so divisions are exact.
fn bareiss(m: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let rows = m.len();
    let mut prev = BigInt::one();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let (top, below) = m.split_at_mut(r + 1);
        let pivot_row = &top[r];
        let piv = pivot_row[c].clone();
        for row in below.iter_mut() {
            let factor = row[c].clone();
            for j in c + 1..cols {
                let v = &piv * &row[j] - &factor * &pivot_row[j];
                row[j] = v / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    pivots
}
