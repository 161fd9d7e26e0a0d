//! Group algebra `𝕂[G]` over `𝕂 = ℚ`, its `Z_*` and super decompositions,
//! Clifford-basis arithmetic, graded tensor products and harmonic analysis
//! on `𝕂[Q(𝐭)]`.

pub mod clifford;
pub mod group_algebra;
pub mod harmonic;
pub mod linalg;

pub use clifford::{
    anchor, clifford_mul, clifford_structure_constants, graded_tensor, graded_tensor_constants,
    minus_ideal_structure_constants, plus_ideal_structure_constants, CliffordElement, CliffordSignature,
    StructureConstant, StructureTable, TABLE_CAP,
};
pub use group_algebra::{super_decompose, super_degree, GroupAlgebraElement, ZProjectors, ZQuotient};
pub use harmonic::{
    central_function_basis, character, character_table, clifford_center, e_minus, e_plus, group_algebra_center,
    idempotent_constant, CentralFunction, CHARACTER_CAP,
};
pub use linalg::{rank, Rational};
