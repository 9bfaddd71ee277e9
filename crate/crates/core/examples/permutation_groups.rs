// Order, membership, orbits and stabilisers from the stabiliser chain.
//
// `cargo run --example permutation_groups`

use semiprim::error::Result;
use semiprim::group::PermGroup;
use semiprim::perm::Permutation;

pub fn run_example() -> Result<()> {
    // Composition is left to right: `a * b` applies `a` first.
    let a = Permutation::from_cycles(6, &[&[0, 1, 2, 3, 4, 5]])?;
    let b = Permutation::from_cycles(6, &[&[0, 1]])?;
    let s6 = PermGroup::new(6, vec![a.clone(), b.clone()])?;
    println!("|S6| = {}", s6.order());

    let c = Permutation::from_cycles(6, &[&[0, 2, 4], &[1, 3, 5]])?;
    println!("(0 2 4)(1 3 5) in S6: {}", s6.contains(&c));
    let g = PermGroup::new(6, vec![c.clone(), Permutation::from_cycles(6, &[&[0, 1], &[2, 3]])?])?;
    println!("orbits of <(0 2 4)(1 3 5), (0 1)(2 3)>: {:?}", g.orbits());

    let stab = s6.point_stabilizer(0)?;
    println!("|S6_0| = {}, orbit of 0 has length {}", stab.order(), s6.orbit(0).len());

    let r = s6.rank(&c).expect("member");
    println!("rank of (0 2 4)(1 3 5) = {r}, unrank gives it back: {}", s6.unrank(r) == Some(c));
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
