use std::fmt;

use super::Partition;
use crate::error::{invalid, Error, Result};

/// Where an entry sits in the container diagram. Columns are zero-based block
/// indices; rows are zero-based from the top of the container.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cell {
    Container { col: usize, row: usize },
    Floating { col: usize },
}

impl Cell {
    pub fn col(self) -> usize {
        match self {
            Cell::Container { col, .. } | Cell::Floating { col } => col,
        }
    }

    pub fn is_floating(self) -> bool {
        matches!(self, Cell::Floating { .. })
    }
}

/// `(B_1 | ... | B_s)` with `|B_i| ≥ λ_i`, drawn in the container of `λ`.
///
/// Column `i` of the container holds `λ_i` top-justified boxes, so row `r`
/// (from the top) has `λ'_r` boxes. The `λ_i` smallest entries of `B_i` fill
/// column `i` increasing from bottom to top; the rest of `B_i` is floating.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct OrderedSetPartition {
    n: usize,
    shape: Partition,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    pub fn new(shape: Partition, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.len() != shape.num_parts() {
            return invalid(format!("{} blocks for a shape with {} parts", blocks.len(), shape.num_parts()));
        }
        let n: usize = blocks.iter().map(Vec::len).sum();
        let mut seen = vec![false; n + 1];
        for b in blocks.iter_mut() {
            b.sort_unstable();
            for &x in b.iter() {
                if x == 0 || x > n || seen[x] {
                    return invalid(format!("blocks do not partition 1..{n} (entry {x})"));
                }
                seen[x] = true;
            }
        }
        for (i, b) in blocks.iter().enumerate() {
            if b.len() < shape.parts()[i] {
                return invalid(format!("block {} has {} < λ_{} = {} elements", i + 1, b.len(), i + 1, shape.parts()[i]));
            }
        }
        Ok(OrderedSetPartition { n, shape, blocks })
    }

    /// Parses `"1,3,5,9|6,7,8,10,14|2,12,15|4,13||11,16"`.
    pub fn parse(text: &str, shape: Partition) -> Result<Self> {
        let blocks = text
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
        Self::new(shape, blocks)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Container placement of every entry; index `j - 1` describes entry `j`.
    pub fn cells(&self) -> Vec<Cell> {
        let mut cells = vec![Cell::Floating { col: 0 }; self.n];
        for (col, b) in self.blocks.iter().enumerate() {
            let height = self.shape.parts()[col];
            for (rank, &x) in b.iter().enumerate() {
                cells[x - 1] = if rank < height {
                    // smallest entry sits at the bottom box, row height - 1
                    Cell::Container { col, row: height - 1 - rank }
                } else {
                    Cell::Floating { col }
                };
            }
        }
        cells
    }

    /// Entries of container row `r` (zero-based from the top), increasing.
    pub fn container_row(&self, r: usize) -> Vec<usize> {
        let mut row: Vec<usize> = self
            .blocks
            .iter()
            .enumerate()
            .filter(|(col, _)| self.shape.parts()[*col] > r)
            .map(|(col, b)| b[self.shape.parts()[col] - 1 - r])
            .collect();
        row.sort_unstable();
        row
    }

    /// Floating entries, increasing.
    pub fn floating(&self) -> Vec<usize> {
        let mut out: Vec<usize> =
            self.blocks.iter().enumerate().flat_map(|(c, b)| b[self.shape.parts()[c]..].iter().copied()).collect();
        out.sort_unstable();
        out
    }
}

impl fmt::Display for OrderedSetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let segs: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", segs.join("|"))
    }
}

/// Every element of `OP_{n,λ}` once, ordered lexicographically by the word
/// `(block of 1, block of 2, ..., block of n)`.
pub fn enumerate_osp(n: usize, shape: &Partition) -> Result<Vec<OrderedSetPartition>> {
    if shape.size() > n {
        return invalid(format!("|λ| = {} exceeds n = {n}", shape.size()));
    }
    if shape.num_parts() == 0 {
        return invalid("shape with no parts");
    }
    let s = shape.num_parts();
    let mut out = Vec::new();
    let mut blocks = vec![Vec::new(); s];
    let deficit: usize = shape.size();
    assign(1, n, shape, &mut blocks, deficit, &mut out);
    Ok(out)
}

fn assign(
    next: usize,
    n: usize,
    shape: &Partition,
    blocks: &mut Vec<Vec<usize>>,
    deficit: usize,
    out: &mut Vec<OrderedSetPartition>,
) {
    if next > n {
        if deficit == 0 {
            out.push(OrderedSetPartition { n, shape: shape.clone(), blocks: blocks.clone() });
        }
        return;
    }
    let remaining = n - next + 1;
    for b in 0..blocks.len() {
        let fills = blocks[b].len() < shape.parts()[b];
        let new_deficit = deficit - usize::from(fills);
        if new_deficit > remaining - 1 {
            continue;
        }
        blocks[b].push(next);
        assign(next + 1, n, shape, blocks, new_deficit, out);
        blocks[b].pop();
    }
}
