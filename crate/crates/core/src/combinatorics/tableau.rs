use std::fmt;
use std::str::FromStr;

use super::{OrderedSetPartition, Partition};
use crate::error::{invalid, Error, Result};

/// Filling of the Young diagram of `λ` with distinct positive integers,
/// strictly increasing down each column.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct InjectiveTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl InjectiveTableau {
    /// Rows are given top to bottom; row `i` must have `λ_i` entries.
    pub fn new(shape: Partition, rows: Vec<Vec<usize>>) -> Result<Self> {
        if rows.len() != shape.num_parts() || rows.iter().zip(shape.parts()).any(|(r, &p)| r.len() != p) {
            return invalid(format!("row lengths do not match shape {shape}"));
        }
        let mut all: Vec<usize> = rows.iter().flatten().copied().collect();
        if all.contains(&0) {
            return invalid("tableau entries must be positive");
        }
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return invalid("tableau entries must be distinct");
        }
        for r in 1..rows.len() {
            for (c, &x) in rows[r].iter().enumerate() {
                if rows[r - 1][c] >= x {
                    return invalid(format!("column {} is not strictly increasing downward", c + 1));
                }
            }
        }
        Ok(InjectiveTableau { shape, rows })
    }

    /// Builds a tableau from its columns, each listed top to bottom.
    pub fn from_columns(shape: Partition, columns: &[Vec<usize>]) -> Result<Self> {
        let mut rows = vec![Vec::new(); shape.num_parts()];
        for col in columns {
            for (r, &x) in col.iter().enumerate() {
                if r >= rows.len() {
                    return invalid("column longer than the shape allows");
                }
                rows[r].push(x);
            }
        }
        Self::new(shape, rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Columns left to right, each read top to bottom.
    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.shape.largest())
            .map(|c| self.rows.iter().take_while(|r| r.len() > c).map(|r| r[c]).collect())
            .collect()
    }

    pub fn max_entry(&self) -> usize {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn contains(&self, x: usize) -> bool {
        self.rows.iter().flatten().any(|&y| y == x)
    }
}

impl fmt::Display for InjectiveTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let segs: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")).collect();
        write!(f, "{}", segs.join("|"))
    }
}

impl FromStr for InjectiveTableau {
    type Err = Error;

    /// Parses row-major text such as `"2,1,3|5,4,9|6"`; empty trailing
    /// segments become zero parts of the shape.
    fn from_str(text: &str) -> Result<Self> {
        let rows = text
            .split('|')
            .map(|seg| {
                let seg = seg.trim();
                if seg.is_empty() {
                    return Ok(Vec::new());
                }
                seg.split(',')
                    .map(|t| t.trim().parse::<usize>().map_err(|_| Error::InvalidInput(format!("bad entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let shape = Partition::new(rows.iter().map(Vec::len).collect())
            .map_err(|_| Error::InvalidInput("tableau rows must weakly decrease in length".into()))?;
        InjectiveTableau::new(shape, rows)
    }
}

/// `T(σ)`: column `r` lists container row `r` of `σ`, increasing downward.
/// Floating entries do not appear.
pub fn tableau_of(sigma: &OrderedSetPartition) -> InjectiveTableau {
    let shape = sigma.shape().clone();
    let columns: Vec<Vec<usize>> = (0..shape.largest()).map(|r| sigma.container_row(r)).collect();
    InjectiveTableau::from_columns(shape, &columns).expect("container rows form a column-strict tableau")
}

/// All of `Inj(λ, ≤ n)`, each once. Columns are filled left to right with
/// increasing subsets of the unused values.
pub fn enumerate_injective_tableaux(shape: &Partition, n: usize) -> Result<Vec<InjectiveTableau>> {
    if shape.size() > n {
        return invalid(format!("|λ| = {} exceeds n = {n}", shape.size()));
    }
    let heights = shape.conjugate_nonzero();
    let mut out = Vec::new();
    let mut used = vec![false; n + 1];
    let mut cols: Vec<Vec<usize>> = Vec::new();
    fill_columns(&heights, n, &mut used, &mut cols, &mut |cols| {
        out.push(InjectiveTableau::from_columns(shape.clone(), cols).expect("generated column-strict"));
    });
    Ok(out)
}

fn fill_columns(
    heights: &[usize],
    n: usize,
    used: &mut Vec<bool>,
    cols: &mut Vec<Vec<usize>>,
    emit: &mut impl FnMut(&[Vec<usize>]),
) {
    if cols.len() == heights.len() {
        emit(cols);
        return;
    }
    let h = heights[cols.len()];
    let mut cur = Vec::with_capacity(h);
    pick_increasing(h, 1, n, used, &mut cur, &mut |col, used| {
        cols.push(col.to_vec());
        fill_columns(heights, n, used, cols, emit);
        cols.pop();
    });
}

fn pick_increasing(
    h: usize,
    from: usize,
    n: usize,
    used: &mut Vec<bool>,
    cur: &mut Vec<usize>,
    f: &mut impl FnMut(&[usize], &mut Vec<bool>),
) {
    if cur.len() == h {
        f(cur, used);
        return;
    }
    for x in from..=n {
        if used[x] {
            continue;
        }
        used[x] = true;
        cur.push(x);
        pick_increasing(h, x + 1, n, used, cur, f);
        cur.pop();
        used[x] = false;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{enumerate_osp, fixtures::worked_sigma};

    #[test]
    fn tableau_of_worked_example() {
        let t = tableau_of(&worked_sigma());
        assert_eq!(t.columns(), vec![vec![5, 8, 12, 13], vec![2, 3, 4, 7], vec![1, 6]]);
        assert_eq!(t.to_string(), "5,2,1|8,3,6|12,4|13,7||");
    }

    #[test]
    fn tableau_of_small_case() {
        let sigma = OrderedSetPartition::parse("1,2|", "1,0".parse().unwrap()).unwrap();
        let t = tableau_of(&sigma);
        assert_eq!(t.rows(), &[vec![1], vec![]]);
    }

    #[test]
    fn tableau_of_lands_in_inj() {
        for n in 1..=5 {
            for lam in Partition::all_up_to(n) {
                let inj = enumerate_injective_tableaux(&lam, n).unwrap();
                for sigma in enumerate_osp(n, &lam).unwrap() {
                    let t = tableau_of(&sigma);
                    assert!(inj.contains(&t));
                    assert!(t.max_entry() <= n);
                }
            }
        }
    }

    #[test]
    fn parse_and_validate() {
        let t: InjectiveTableau = "2,1,3|5,4,9|6".parse().unwrap();
        assert_eq!(t.columns(), vec![vec![2, 5, 6], vec![1, 4], vec![3, 9]]);
        assert!("2,1|1,4".parse::<InjectiveTableau>().is_err());
        assert!("2,1|3,1".parse::<InjectiveTableau>().is_err());
        assert!("2|1,3".parse::<InjectiveTableau>().is_err());
        assert!("0".parse::<InjectiveTableau>().is_err());
    }

    #[test]
    fn enumeration_examples() {
        let strs = |lam: &str, n| -> Vec<String> {
            enumerate_injective_tableaux(&lam.parse().unwrap(), n).unwrap().iter().map(ToString::to_string).collect()
        };
        assert_eq!(strs("1,0", 2), vec!["1|", "2|"]);
        assert_eq!(strs("1,1", 2), vec!["1|2"]);
        assert_eq!(strs("2,1", 3).len(), 3);
    }

    #[test]
    fn enumeration_matches_brute_force_filter() {
        // every injective map from boxes to 1..n, kept when column-strict
        for n in 1..=5 {
            for lam in Partition::all_up_to(n) {
                let k = lam.size();
                let mut want = 0;
                let mut vals = vec![0usize; k];
                fn rec(i: usize, n: usize, vals: &mut Vec<usize>, lam: &Partition, want: &mut usize) {
                    if i == vals.len() {
                        let mut rows = Vec::new();
                        let mut at = 0;
                        for &p in lam.parts() {
                            rows.push(vals[at..at + p].to_vec());
                            at += p;
                        }
                        if InjectiveTableau::new(lam.clone(), rows).is_ok() {
                            *want += 1;
                        }
                        return;
                    }
                    for x in 1..=n {
                        if !vals[..i].contains(&x) {
                            vals[i] = x;
                            rec(i + 1, n, vals, lam, want);
                        }
                    }
                }
                rec(0, n, &mut vals, &lam, &mut want);
                assert_eq!(enumerate_injective_tableaux(&lam, n).unwrap().len(), want, "n={n} λ={lam}");
            }
        }
    }
}
