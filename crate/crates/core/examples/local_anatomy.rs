// The subgroups attached to an edge of the Heawood graph and the checks
// built on them.
//
// `cargo run --example local_anatomy`

use semiprim::constructions::heawood;
use semiprim::error::Result;
use semiprim::local::{anatomy, verify_corollary, verify_section3, verify_theorem2, ArcPair};

pub fn run_example() -> Result<()> {
    let pair = ArcPair::from_fixture(&heawood())?;
    let (x, y) = pair.default_edge();
    let out = anatomy(&pair, x, y)?;
    let a = out.report().expect("heawood has an anatomy");
    println!("edge ({x}, {y}), p = {}", a.p);
    println!(
        "|G_x| = {}, |G_x^[1]| = {}, |G_xy^[1]| = {}",
        a.kernels.stabilizer_x.order(),
        a.kernels.kernel_x.order(),
        a.kernels.kernel_xy.order()
    );
    println!(
        "|Q_x| = {}, |L_x| = {}, |Z_x| = {}, r = {}",
        a.q_x.order(),
        a.l_x.order(),
        a.z_x.order(),
        a.split.r()
    );
    for v in [
        verify_section3(&pair, x, y)?,
        verify_theorem2(&pair, x, y)?,
        verify_corollary(&pair, x, y)?,
    ] {
        println!("{:<36} {:?} ({} items)", v.check, v.status, v.items.len());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
