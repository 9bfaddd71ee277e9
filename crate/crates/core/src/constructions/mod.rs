//! Example groups and graphs: the semidirect-product families, the
//! diagonal example, and arc-transitive graph fixtures.

mod families;
mod field;
mod graph;

pub use families::{
    abelian_shape, custom, diagonal_counterexample, extraspecial_group, family_c3,
    family_extraspecial, family_inversion, family_vector, semidirect, AbelianBlocks,
    DiagonalCounterexample, Extraspecial, Family, GroupRecipe, MAX_C3_DEGREE, MAX_EXTRASPECIAL, MAX_REGULAR,
};
pub use field::Gf;
pub use graph::{
    cayley_f16_quintic, complete, complete_bipartite, coset_graph, fixture_by_name, fixtures,
    heawood, petersen, tutte_coxeter, Fixture, Graph,
};
