use super::{CodeSequence, OrderedSetPartition, Partition};
use crate::error::{domain, invalid, Error, Result};

/// A container of shape `λ` partially filled by the insertion map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartialFilling {
    shape: Partition,
    blocks: Vec<Vec<usize>>,
}

impl PartialFilling {
    pub fn empty(shape: Partition) -> Self {
        let s = shape.num_parts();
        PartialFilling { shape, blocks: vec![Vec::new(); s] }
    }

    /// A filling with the given blocks; entries must be distinct and every
    /// block's entries sorted increasing.
    pub fn new(shape: Partition, blocks: Vec<Vec<usize>>) -> Result<Self> {
        if blocks.len() != shape.num_parts() {
            return invalid(format!("{} blocks for a shape with {} parts", blocks.len(), shape.num_parts()));
        }
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) || all.first() == Some(&0) {
            return invalid("partial filling entries must be distinct and positive");
        }
        if blocks.iter().any(|b| b.windows(2).any(|w| w[0] > w[1])) {
            return invalid("block entries must be listed increasing");
        }
        Ok(PartialFilling { shape, blocks })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    fn empty_boxes(&self, col: usize) -> usize {
        self.shape.parts()[col].saturating_sub(self.blocks[col].len())
    }
}

/// Labels `0..s` for the columns of a partial filling.
///
/// Unfilled container columns take the small labels: more empty boxes first,
/// ties broken right to left. Filled columns (including zero-height ones)
/// follow, left to right.
pub fn coinversion_labels(state: &PartialFilling) -> Vec<usize> {
    let s = state.shape.num_parts();
    let mut order: Vec<usize> = (0..s).filter(|&c| state.empty_boxes(c) > 0).collect();
    order.sort_by(|&a, &b| state.empty_boxes(b).cmp(&state.empty_boxes(a)).then(b.cmp(&a)));
    order.extend((0..s).filter(|&c| state.empty_boxes(c) == 0));
    let mut labels = vec![0; s];
    for (label, col) in order.into_iter().enumerate() {
        labels[col] = label;
    }
    labels
}

/// Inverse of `code`: inserts `1..n` in order, entry `i` going to the column
/// currently labelled `c_i`. Fails when `c ∉ C_{n,λ}`.
pub fn insert(c: &CodeSequence, n: usize, shape: &Partition) -> Result<OrderedSetPartition> {
    if c.len() != n {
        return invalid(format!("code of length {} for n = {n}", c.len()));
    }
    let s = shape.num_parts();
    let mut state = PartialFilling::empty(shape.clone());
    for (i, &label) in c.entries().iter().enumerate() {
        if label >= s {
            return domain(format!("entry c_{} = {label} is not a label (s = {s})", i + 1));
        }
        let labels = coinversion_labels(&state);
        let col = labels.iter().position(|&l| l == label).expect("labels are a permutation of 0..s");
        state.blocks[col].push(i + 1);
    }
    if let Some(col) = (0..s).find(|&col| state.empty_boxes(col) > 0) {
        return domain(format!(
            "code {c} is not in C_{{{n},{shape}}}: column {} keeps {} empty container box(es)",
            col + 1,
            state.empty_boxes(col)
        ));
    }
    OrderedSetPartition::new(shape.clone(), state.blocks).map_err(|e| Error::Domain(e.to_string()))
}
