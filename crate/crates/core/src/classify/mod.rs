//! Cut metacyclic groups: enumeration, classification up to isomorphism,
//! the published catalog and exclusion table, and central heights.

mod catalog;
mod height;
mod sweep;

use thiserror::Error;

pub use catalog::{
    cut_metacyclic_catalog, exclusion_table, generalized_quaternion_presentation, height_zero_list, CatalogEntry,
    ExclusionRow, Word,
};
pub use height::{central_height, index_two_subgroups, is_qstar, is_qstar_capped, HeightReason, HeightVerdict};
pub use sweep::{
    check_exclusion_row, classify_cut_metacyclic, enumerate_metacyclic, unit_index, verify_exclusion_table,
    CatalogDiff, Classification, ClassifyOptions, Discrepancy, ExclusionCheck, IsoClass,
};

use crate::group::GroupError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("group order {order} exceeds the configured cap {cap}")]
    SizeLimit { order: usize, cap: usize },
    #[error(transparent)]
    Group(GroupError),
    #[error("cannot start worker pool: {0}")]
    ThreadPool(String),
}

impl From<GroupError> for ClassifyError {
    fn from(e: GroupError) -> Self {
        match e {
            GroupError::SizeLimit { order, cap } => ClassifyError::SizeLimit { order, cap },
            other => ClassifyError::Group(other),
        }
    }
}
