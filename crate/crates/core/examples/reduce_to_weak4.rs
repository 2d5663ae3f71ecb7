//! Reduce a matroid with an order-4 tangle to a weakly 4-connected minor
//! without losing breadth, and write the trace as JSON.

use tanglekit::corpus;
use tanglekit::reduction::reduce_to_weakly_4_connected;
use tanglekit::tangle::{breadth, enumerate_tangles};
use tanglekit::Result;

pub fn run() -> Result<()> {
    // A plane with a long line and a parallel element: not even 3-connected.
    let base = corpus::uniform_with_fat_line(4);
    let e1 = base.mask_of(&["e1"])?;
    let m = base.principal_extension(base.closure(e1), "q")?;
    println!("{} elements, 3-connected: {}", m.len(), m.is_three_connected()?);

    for t in enumerate_tangles(&m, 4)? {
        let tr = reduce_to_weakly_4_connected(&t)?;
        println!("breadth {} -> {}", tr.initial_breadth, breadth(&tr.final_tangle)?.value);
        for s in &tr.steps {
            println!("  {:>4}  {:<16} breadth {}", s.removal.to_string(), s.rule.to_string(), s.breadth);
        }
        let n = &tr.final_matroid;
        println!("minor: {} elements, weakly 4-connected: {}", n.len(), n.is_weakly_four_connected()?);
        println!("generated directly by the original tangle: {}", tr.generated_directly_by(&t)?);
        println!("{}", serde_json::to_string(&tr.to_json()).expect("json"));
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
