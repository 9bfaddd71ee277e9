// The stabiliser bound on a valency-5 Cayley graph, and its skip on
// cubic graphs.
//
// `cargo run --example stabiliser_bound`

use semiprim::constructions::fixture_by_name;
use semiprim::error::Result;
use semiprim::local::{verify_theorem1, ArcPair};

pub fn run_example() -> Result<()> {
    for name in ["f16", "heawood"] {
        let f = fixture_by_name(name).expect("shipped fixture");
        let v = verify_theorem1(&ArcPair::from_fixture(&f)?)?;
        println!("{:<20} {:?} {}", f.name, v.status, serde_json::to_string(&v.data)?);
        if let Some(r) = &v.reason {
            println!("  {r}");
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
