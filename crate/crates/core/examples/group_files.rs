// Reading and writing groups and graphs in the shipped file formats.
//
// `cargo run --example group_files`

use semiprim::constructions::{petersen, Graph};
use semiprim::error::Result;
use semiprim::io::{read_group, write_group};

pub fn run_example() -> Result<()> {
    let f = petersen();
    let text = write_group(&f.group);
    println!("{text}");
    let back = read_group(&text)?;
    println!("read back a group of order {}", back.order());
    let edges = f.graph.to_edge_list();
    let g = Graph::parse(&edges)?;
    println!("edge list has {} vertices and {} edges", g.order(), g.edges().len());
    println!("bad input: {}", read_group(r#"{"degree": 3, "generators": [[0, 0, 1]]}"#).unwrap_err());
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
