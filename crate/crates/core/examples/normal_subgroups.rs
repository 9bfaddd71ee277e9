// The normal-subgroup lattice, Sylow subgroups, `O_p` and the Fitting subgroup.
//
// `cargo run --example normal_subgroups`

use semiprim::error::Result;
use semiprim::group::PermGroup;
use semiprim::perm::Permutation;
use semiprim::structure::{all_normal_subgroups, core_p, core_p_prime, fitting, p_separability, sylow};

pub fn run_example() -> Result<()> {
    let s4 = PermGroup::new(
        4,
        vec![
            Permutation::from_cycles(4, &[&[0, 1]])?,
            Permutation::from_cycles(4, &[&[0, 1, 2, 3]])?,
        ],
    )?;
    let lattice = all_normal_subgroups(&s4)?;
    let orders: Vec<u128> = lattice.iter().map(PermGroup::order).collect();
    println!("normal subgroups of S4 have orders {orders:?}");
    for p in [2, 3] {
        println!(
            "p = {p}: |Sylow| = {}, |O_p| = {}, |O_p'| = {}",
            sylow(&s4, p)?.order(),
            core_p(&s4, p)?.order(),
            core_p_prime(&s4, p)?.order()
        );
    }
    println!("|F(S4)| = {}", fitting(&s4)?.order());
    let series = p_separability(&s4, 2)?;
    println!("2-series of S4 reaches the group: {}", series.separable);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
