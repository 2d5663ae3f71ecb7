//! Run property suites over the seeded instance pool.

use tanglekit::lab::{catalog, run_suite};
use tanglekit::Result;

pub fn run() -> Result<()> {
    // A handful of suites with a small budget; `tanglekit verify-suite all`
    // runs the whole catalog.
    for id in ["up-down", "hyperplanes-maximal-small", "breadth-critical-step", "truncation"] {
        let s = catalog().iter().find(|s| s.id == id).expect("in catalog");
        println!("{}: {}", s.id, s.statement);
        let r = run_suite(id, &(s.selector)(), Some(20))?;
        println!("  {}", r.summary());
    }
    println!("{} suites in the catalog", catalog().len());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
