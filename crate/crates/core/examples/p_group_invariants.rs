// Frattini, `ΩZ` and Thompson subgroups of small 2-groups, and the
// naive subgroup enumeration they are checked against.
//
// `cargo run --example p_group_invariants`

use semiprim::error::Result;
use semiprim::oracle::SubgroupOracle;
use semiprim::structure::{elementary_abelian_of_max_order, frattini_p, omega_center, thompson};
use semiprim::suite::named_group;

pub fn run_example() -> Result<()> {
    for name in ["Q8", "D4"] {
        let g = named_group(name).expect("named group");
        let maximal = elementary_abelian_of_max_order(&g)?;
        println!(
            "{name}: |Φ| = {}, |ΩZ| = {}, |J| = {}, {} elementary abelian subgroups of order {}",
            frattini_p(&g)?.order(),
            omega_center(&g)?.order(),
            thompson(&g)?.order(),
            maximal.len(),
            maximal[0].order()
        );
        let oracle = SubgroupOracle::new(&g, 200)?;
        let all = oracle.all();
        println!(
            "  by enumeration: {} subgroups, |Φ| = {}, |J| = {}",
            oracle.subgroups.len(),
            oracle.order(&oracle.frattini(&all)),
            oracle.order(&oracle.thompson(&all, 2))
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
