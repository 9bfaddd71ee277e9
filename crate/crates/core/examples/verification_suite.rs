// Running part of the verification suite and reading its report.
//
// `cargo run --release --example verification_suite`

use semiprim::error::Result;
use semiprim::suite::{verify_all, Selection};

pub fn run_example() -> Result<()> {
    let selection = Selection {
        filter: vec!["structure".into(), "local-hypothesis".into()],
        max_order: Some(1000),
    };
    let report = verify_all(&selection, 2)?;
    for e in &report.entries {
        println!("{:<8?} {:<40} {}", e.verdict.status, e.check_id, e.target);
    }
    let s = &report.summary;
    println!("{} pass, {} fail, {} skip, {} vacuous", s.pass, s.fail, s.skip, s.vacuous);
    Ok(())
}

#[allow(dead_code)]
fn main() -> Result<()> {
    run_example()
}
