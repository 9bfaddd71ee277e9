// The Petersen graph as a coset graph of `S5` on the cosets of the
// stabiliser of `{0, 1}`.
//
// `cargo run --example coset_graph`

use semiprim::constructions::coset_graph;
use semiprim::error::Result;
use semiprim::local::check_arc_transitive;
use semiprim::perm::Permutation;
use semiprim::suite::named_group;

pub fn run_example() -> Result<()> {
    let s5 = named_group("S5").expect("named group");
    let h = s5.setwise_stabilizer(&[0, 1])?;
    let a = Permutation::from_cycles(5, &[&[0, 2], &[1, 3]])?;
    let (graph, image) = coset_graph(&s5, &h, &a)?;
    println!(
        "{} vertices, valency {:?}, girth {:?}, group of order {}",
        graph.order(),
        graph.valency(),
        graph.girth(),
        image.order()
    );
    let pair = check_arc_transitive(&graph, &image)?;
    println!("arc-transitive with {} arcs", pair.arcs);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
