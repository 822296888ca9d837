//! Partitions, tableaux, tabloids and permutations.

mod partition;
mod perm;
mod tableau;

pub use partition::{double_coset_count, partitions_of, Partition};
pub use perm::{
    all_permutations, composition_blocks, composition_generators, composition_transversal, young_blocks,
    young_subgroup_generators, young_subgroup_transversal, Permutation,
};
pub use tableau::{composition_tabloids, standard_tableaux, tabloids, StandardTableau, Tabloid, TabloidIndex};
