//! Partitions, tableaux, ordered set partitions and coinversion codes.

mod code;
mod insertion;
mod osp;
mod partition;
mod tableau;

pub use code::{
    coinv, coinversion_pairs, code, enumerate_codes, maxcode, membership, membership_shuffle_oracle, CodeSequence,
};
pub use insertion::{coinversion_labels, insert, PartialFilling};
pub use osp::{enumerate_osp, Cell, OrderedSetPartition};
pub use partition::Partition;
pub use tableau::{enumerate_injective_tableaux, tableau_of, InjectiveTableau};
