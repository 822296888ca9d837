//! Modules for symmetric groups given by matrices of adjacent transpositions.
mod induce;
mod module;

pub use induce::{induce, regular_module, SubgroupAction};
pub use module::{GroupModule, Part, SubmoduleBasis};
