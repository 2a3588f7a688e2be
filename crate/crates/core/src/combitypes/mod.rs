//! Compositions, partitions and their signed / headed variants, the total
//! orders used to index idempotents, and the permutation helpers behind the
//! combinatorial Cartan rule.

mod composition;
mod headed;
mod partition;
mod perm;

pub use composition::{
    coarsenings, compositions, compositions_with_parts, rearrangements, signed_compositions,
    Composition, SignedComposition,
};
pub use headed::{
    b_compositions, b_partitions, order_index, rpeak_compositions, rpeak_partitions,
    cmp_labels, HeadedComposition, HeadedPartition, OrderKind,
};
pub use partition::{m_factor, partitions, refines, Partition};
pub use perm::{cycle_transform, cycles, standardize};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CombError {
    #[error("weight mismatch: {0} vs {1}")]
    WeightMismatch(usize, usize),
    #[error("invalid label {0:?}")]
    InvalidLabel(String),
}
