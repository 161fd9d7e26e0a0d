//! Centrally Γ-graded sets and groups, their products and braidings.

pub mod braiding;
pub mod cocycle;
pub mod group;
pub mod nfold;
pub mod set;

pub use braiding::{braiding_is_group_iso, Braiding, FlatElement, PermutationBraiding};
pub use cocycle::{central_extension_cocycle, Cocycle};
pub use group::GradedGroup;
pub use nfold::{nfold_dual_product, NFoldProduct};
pub use set::{canonicalize, graded_product_set, GradedSet, MAX_MATERIALIZED};
