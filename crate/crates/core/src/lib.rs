//! Finite permutation groups, semiprimitivity, and the local structure of
//! arc-transitive graphs.

pub mod action;
pub mod arith;
pub mod caps;
pub mod cli;
pub mod constructions;
mod chain;
pub mod error;
pub mod group;
pub mod hom;
pub mod io;
pub mod local;
pub mod oracle;
pub mod perm;
pub mod report;
pub mod semiprim;
pub mod structure;
pub mod suite;

pub use action::{coset_action, induced_action, quotient, CosetAction, InducedAction};
pub use error::{Error, Result};
pub use group::{group_from_generators, PermGroup};
pub use hom::Homomorphism;
pub use perm::{Permutation, Point};
