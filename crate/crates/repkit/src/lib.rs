//! Finite subgroups of SO(3)/SU(2) and their representation theory:
//! multiplication tables, character tables, fusion multiplicities, McKay
//! graphs with affine ADE classification, module-category actions of
//! SU(2)/SO(3) spins, and the Euclidean/Lorentzian time-functor label maps.
//!
//! Everything is immutable after construction and deterministic: tables,
//! class orderings, and JSON exports are byte-stable for a given input and
//! seed.

pub mod action;
pub mod catalog;
pub mod chartable;
pub mod diagram;
pub mod error;
pub mod export;
pub mod fusion;
pub mod group;
pub mod labels;
pub mod mckay;
pub mod quaternion;
pub mod spec;
pub mod time_functor;

pub use action::{
    action_matrix, admissible_spins, induction_row, restrict_spin, su2_character_at, su2_fusion,
    verify_module_axiom, ActionMatrix, InductionRow, ModuleAxiomReport,
};
pub use catalog::Catalog;
pub use chartable::{character_table, character_table_seeded, CharacterTable, Irrep};
pub use diagram::{is_ample, Diagram};
pub use error::{Error, Result};
pub use fusion::{
    dimension_profile, search_generation_groups, search_generation_groups_seeded,
    tensor_multiplicity, FusionTensor,
};
pub use num_complex::Complex64;
pub use labels::{EuclideanLabel, ImmirziParam, LorentzianLabel, SpinLabel};
pub use mckay::{cartan_null_check, classify_affine_ade, mckay_graph, to_dot, AdeType, McKayGraph};
pub use time_functor::{
    colax_check, find_injective_homs, ft_euclidean, ft_euclidean_sum, ft_lorentzian,
    product_module_check, ColaxReport, HomSearch, ProductModuleEntry, ProductModuleReport,
};
pub use group::{build_group, build_group_with, conjugacy_classes, product_group};
pub use group::{ConjClass, FiniteGroup, Realization};
pub use quaternion::Quaternion;
pub use spec::{binary_catalog, full_catalog, so3_catalog, GroupSpec, MAX_ORDER};
