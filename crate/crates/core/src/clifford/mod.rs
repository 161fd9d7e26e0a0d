//! The discrete Clifford groups `Q(𝐭)` over Γ = 𝔽₂.

pub mod automorphism;
pub mod element;
pub mod graded;
pub mod signature;
pub mod structure;

pub use automorphism::{
    alpha_is_inner, alpha_map, automorphism_group_order, bn_generators,
    hyperoctahedral_automorphism, hyperoctahedral_map, inner_map, is_automorphism, ElementMap,
};
pub use element::{
    conjugate, gamma_cocycle, inversion_count, subset_label, t_measure, vee_inverse, vee_mul,
    vee_order, VeeElement,
};
pub use graded::{
    as_graded_group, even_embedding, even_part, even_part_generators, iterated_graded_product,
    product_index,
};
pub use signature::{Signature, ENUMERATION_CAP, MAX_N};
pub use structure::{
    center, commutator_check, commutator_subgroup, conjugacy_classes, elements,
    inner_automorphism_count, Center, CenterIso, COMMUTATOR_CAP,
};
