// Semiprimitivity by definition and by the semidirect-product criterion.
//
// `cargo run --example semiprimitivity`

use semiprim::constructions::{custom, family_vector, AbelianBlocks};
use semiprim::error::Result;
use semiprim::semiprim::{is_semiprimitive_criterion, is_semiprimitive_definition};
use semiprim::suite::named_group;

pub fn run_example() -> Result<()> {
    let positive = family_vector(2, 1, 2, 2)?;
    let c4 = AbelianBlocks::new(&[4])?;
    let negative = custom("C4:C2 inversion", &c4.group, vec![vec![c4.element(&[3])]])?;
    for r in [&positive, &negative] {
        let def = is_semiprimitive_definition(r.group())?;
        let crit = is_semiprimitive_criterion(&r.spec)?;
        println!(
            "{}: definition {}, faithful on quotients {}, K = [K, N] {}",
            r.label, def.semiprimitive, crit.faithful_on_quotients, crit.commutator_form
        );
    }
    let d4 = named_group("D4").expect("named group");
    let v = is_semiprimitive_definition(&d4)?;
    if let Some(w) = v.witness {
        println!("D4 on 4 points: witness of order {} with orbits {:?}", w.order(), w.orbits());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
