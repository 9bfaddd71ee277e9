//! Subgroup operators: closures and series, the normal-subgroup lattice,
//! Sylow theory and p-group invariants.

mod closure;
mod lattice;
mod pgroup;
mod recognise;
mod sylow;

pub use closure::{
    center, centralizer, commutator_subgroup, derived_series, derived_subgroup, is_nilpotent,
    is_soluble, lower_central_series, normal_closure, normalizer,
};
pub use lattice::{all_normal_subgroups, all_normal_subgroups_capped, conjugacy_class_reps, NormalLattice};
pub use pgroup::{
    elementary_abelian_of_max_order, frattini_p, is_elementary_abelian, is_thompson_factorizable,
    omega_center, p_group_prime, thompson, thompson_of_group,
};
pub use recognise::{is_alt4, is_quaternion8, is_sl2};
pub use sylow::{core_p, core_p_prime, fitting, p_separability, sylow, PSeries};
