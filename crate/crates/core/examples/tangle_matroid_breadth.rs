//! The tangle matroid of a tangle, its breadth with a witness, and the
//! cover size of the maximal small sets.

use tanglekit::corpus;
use tanglekit::tangle::{breadth, cover_size, enumerate_tangles, tangle_matroid};
use tanglekit::Result;

pub fn run() -> Result<()> {
    // A rank-3 plane with three extra points on one line.
    let m = corpus::uniform_with_fat_line(3);
    for t in enumerate_tangles(&m, 4)? {
        let tm = tangle_matroid(&t)?;
        let p = tm.matroid();
        println!("tangle matroid: rank {}, {} hyperplanes", p.full_rank(), p.hyperplanes()?.len());
        if let Some(problem) = tm.check()? {
            println!("  check failed: {problem}");
        }
        println!("  same matroid as M: {}", p.same_as(&m)?);

        let b = breadth(&t)?;
        println!("  breadth {} witnessed by {:?}", b.value, m.labels_of(b.witness));

        let c = cover_size(&t)?;
        println!("  {} maximal small sets cover E", c.value);
    }

    // Uniform matroids have uniform tangle matroids: breadth is |E|.
    let u = corpus::u37();
    let t = &enumerate_tangles(&u, 4)?[0];
    println!("U3,7: breadth {}", breadth(t)?.value);
    Ok(())
}

fn main() -> Result<()> {
    run()
}
