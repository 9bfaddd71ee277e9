// The four semidirect-product families `K ⋊ H` acting on `K`.
//
// `cargo run --example semidirect_families`

use semiprim::constructions::{abelian_shape, family_c3, family_extraspecial, family_inversion, family_vector};
use semiprim::error::Result;

pub fn run_example() -> Result<()> {
    let recipes = vec![
        family_inversion(5, &abelian_shape(5, "c25xc5")?)?,
        family_vector(2, 1, 3, 1)?,
        family_vector(3, 1, 1, 2)?,
        family_extraspecial(3, 1)?,
        family_c3(&[2, 5])?,
    ];
    for r in &recipes {
        println!(
            "{:<28} degree {:>5}  |G| = {:>6}  |K| = {:>5}  |H| = {:>4}",
            r.label,
            r.group().degree(),
            r.group().order(),
            r.spec.regular.order(),
            r.spec.complement.order()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
