//! Every example under `examples/` runs to completion.

#[allow(dead_code)]
mod coset_graph {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/coset_graph.rs"));
}

#[test]
fn coset_graph_runs() {
    coset_graph::run_example().expect("coset_graph example runs");
}

#[allow(dead_code)]
mod diagonal_counterexample {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/diagonal_counterexample.rs"));
}

#[test]
fn diagonal_counterexample_runs() {
    diagonal_counterexample::run_example().expect("diagonal_counterexample example runs");
}

#[allow(dead_code)]
mod group_files {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/group_files.rs"));
}

#[test]
fn group_files_runs() {
    group_files::run_example().expect("group_files example runs");
}

#[allow(dead_code)]
mod local_anatomy {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/local_anatomy.rs"));
}

#[test]
fn local_anatomy_runs() {
    local_anatomy::run_example().expect("local_anatomy example runs");
}

#[allow(dead_code)]
mod normal_subgroups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/normal_subgroups.rs"));
}

#[test]
fn normal_subgroups_runs() {
    normal_subgroups::run_example().expect("normal_subgroups example runs");
}

#[allow(dead_code)]
mod p_group_invariants {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/p_group_invariants.rs"));
}

#[test]
fn p_group_invariants_runs() {
    p_group_invariants::run_example().expect("p_group_invariants example runs");
}

#[allow(dead_code)]
mod permutation_groups {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/permutation_groups.rs"));
}

#[test]
fn permutation_groups_runs() {
    permutation_groups::run_example().expect("permutation_groups example runs");
}

#[allow(dead_code)]
mod semidirect_families {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/semidirect_families.rs"));
}

#[test]
fn semidirect_families_runs() {
    semidirect_families::run_example().expect("semidirect_families example runs");
}

#[allow(dead_code)]
mod semiprimitivity {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/semiprimitivity.rs"));
}

#[test]
fn semiprimitivity_runs() {
    semiprimitivity::run_example().expect("semiprimitivity example runs");
}

#[allow(dead_code)]
mod stabiliser_bound {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/stabiliser_bound.rs"));
}

#[test]
fn stabiliser_bound_runs() {
    stabiliser_bound::run_example().expect("stabiliser_bound example runs");
}

#[allow(dead_code)]
mod verification_suite {
    include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/verification_suite.rs"));
}

#[test]
fn verification_suite_runs() {
    verification_suite::run_example().expect("verification_suite example runs");
}
