//! Finite abelian groups, Littlewood-Richardson coefficients, abelian extensions
//! and the classification of finite abelian subgroups of low-rank Cremona groups.
//!
//! Groups are stored by the types (partitions) of their Sylow subgroups, so an
//! extension question reduces to one Littlewood-Richardson coefficient per prime.

pub mod classify;
pub mod error;
pub mod extension;
pub mod group;
pub mod lr;
pub mod notation;
pub mod partition;
pub mod snf;
pub mod verify;

pub use classify::{classify, ClassificationVerdict, Cr2Family, ProductTypeRow, RankSetting};
pub use error::{Error, Result};
pub use extension::{
    enumerate_extensions, extension_exists, max_cyclic_split, ExtensionResult, Middle,
};
pub use group::AbelianGroup;
pub use lr::{lr_coefficient, lr_product, lr_product_multi};
pub use partition::{Partition, PartitionMultiset};

#[cfg(feature = "cli")]
pub mod cli;
