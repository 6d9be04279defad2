//! Decorated permutations, paths, maps and the sign-reversing machinery
//! relating them.

pub mod bijection;
pub mod enumerate;
pub mod label;
pub mod types;

pub use bijection::{hat_phi, hat_phi_inv, involution_f, involution_f2, pathmap_sign, phi, phi_inv, swgt_pathmap};
pub use enumerate::{decorated_maps, decorated_paths, decorated_permutations, pathmaps_g, pathmaps_h, pathmutations, Cardinalities};
pub use label::{Label, LabelIndex, TwoLabel};
pub use types::{
    Decorated2Map, Decorated2Path, Decorated2Permutation, DecoratedMap, DecoratedPath, DecoratedPermutation, Pathmap,
    Pathmap2, Pathmutation, Pathmutation2,
};
