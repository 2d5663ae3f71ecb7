//! Truncating a tangle to a lower order truncates its tangle matroid.

use tanglekit::tangle::{enumerate_tangles, tangle_matroid, truncate_tangle};
use tanglekit::{Matroid, Result};

pub fn run() -> Result<()> {
    let m = Matroid::uniform(4, 10)?;
    let t = &enumerate_tangles(&m, 5)?[0];
    let p = tangle_matroid(t)?;
    for to in 2..5 {
        let tt = truncate_tangle(t, to)?;
        let q = tangle_matroid(&tt)?;
        let expected = p.matroid().truncation(to - 1)?;
        println!(
            "order 5 -> {to}: {} maximal small sets, tangle matroid rank {}, equals truncation: {}",
            tt.maximal_small().len(),
            q.matroid().full_rank(),
            q.matroid().same_as(&expected)?
        );
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
