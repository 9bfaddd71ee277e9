//! Local structure of arc-transitive graphs whose local action is
//! semiprimitive with a regular normal nilpotent subgroup.

mod anatomy;
mod pair;
mod verify;

pub use anatomy::{anatomy, AnatomyOutcome, AnatomyReport, Reduction, VSplit};
pub use pair::{
    check_arc_transitive, kernels, local_action, local_hypothesis, local_hypothesis_at, ArcPair,
    Kernels, LocalHypothesis,
};
pub use verify::{
    verify_corollary, verify_section3, verify_theorem1, verify_theorem2, COROLLARY, SECTION3,
    THEOREM1, THEOREM2,
};
