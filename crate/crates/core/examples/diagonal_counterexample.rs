// A semiprimitive group of degree 3600 with three regular normal subgroups.
//
// `cargo run --release --example diagonal_counterexample`

use semiprim::constructions::diagonal_counterexample;
use semiprim::error::Result;
use semiprim::semiprim::{classify, ActionLattice};

pub fn run_example() -> Result<()> {
    let d = diagonal_counterexample()?;
    let g = d.group();
    println!("degree {}, order {}", g.degree(), g.order());
    // Normal subgroups are found in the 15-point model and carried across.
    let lattice = ActionLattice::via(d.hom())?;
    let verdict = classify(&lattice);
    println!("{} normal subgroups, semiprimitive: {}", lattice.members.len(), verdict.semiprimitive);
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        let t = d.product_of_factors(i, j)?;
        let regular = lattice.regular().any(|r| r.same_group(&t));
        println!("T{}T{} has order {} and is a regular normal subgroup: {regular}", i + 1, j + 1, t.order());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
