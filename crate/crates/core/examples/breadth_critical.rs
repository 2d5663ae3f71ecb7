//! Breadth-criticality: whether any proper minor keeps a generated tangle
//! of the same breadth, one removal deep and recursively.

use tanglekit::reduction::{is_breadth_critical_one_step, is_breadth_critical_recursive, RecursiveCriticality};
use tanglekit::tangle::enumerate_tangles;
use tanglekit::{corpus, Matroid, Result};

pub fn run() -> Result<()> {
    let u37 = corpus::u37();
    let coloop = Matroid::direct_sum(&[corpus::u37(), Matroid::uniform_labeled(1, vec!["z".into()])?])?;

    for (name, m) in [("U3,7", &u37), ("U3,7 + coloop", &coloop)] {
        let t = &enumerate_tangles(m, 4)?[0];
        let one = is_breadth_critical_one_step(t)?;
        println!("{name}: breadth {}, critical after one removal: {}", one.breadth, one.critical);
        match is_breadth_critical_recursive(t, 10_000)? {
            RecursiveCriticality::Critical { minors_checked } => {
                println!("  critical; {minors_checked} minors checked")
            }
            RecursiveCriticality::NotCritical { delete, contract, breadth } => {
                println!("  M \\ {delete:?} / {contract:?} keeps breadth {breadth}")
            }
            RecursiveCriticality::Incomplete { minors_checked } => {
                println!("  budget ran out after {minors_checked} minors")
            }
        }
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
