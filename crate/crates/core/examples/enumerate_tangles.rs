//! Enumerate tangles, inspect small and weak sets, and check a hand-written
//! family against the axioms.

use tanglekit::tangle::{enumerate_tangles, search_tangles, verify_tangle, SearchOptions};
use tanglekit::{corpus, Matroid, Result};

pub fn run() -> Result<()> {
    let u37 = corpus::u37();
    let ts = enumerate_tangles(&u37, 4)?;
    println!("U3,7 order 4: {} tangle(s)", ts.len());
    let t = &ts[0];
    // In U3,7 the small sets are exactly the sets of at most two elements.
    let pair = u37.mask_of(&["e1", "e2"])?;
    let triple = u37.mask_of(&["e1", "e2", "e3"])?;
    println!("  {{e1,e2}} small: {}, {{e1,e2,e3}} weak: {}", t.is_small(pair), t.is_weak(triple));
    println!("  {} maximal small sets, {} small sets", t.maximal_small().len(), t.small_sets()?.len());

    let k4 = corpus::k4();
    for k in 2..=4 {
        println!("M(K4) order {k}: {} tangle(s)", enumerate_tangles(&k4, k)?.len());
    }

    // Two copies of U3,7 glued by a direct sum: each side hosts its own tangle.
    let twice = Matroid::direct_sum(&[corpus::u37(), corpus::u37()])?;
    let ts = enumerate_tangles(&twice, 4)?;
    println!("U3,7 + U3,7 order 4: {} tangles", ts.len());

    // Seeded search: only tangles in which the first copy is small.
    let first = twice.mask_of(&twice.labels()[..7])?;
    let opts = SearchOptions { seeds: vec![first], stop_after: None, node_budget: 1_000_000 };
    let found = search_tangles(&twice, 4, &opts)?;
    println!("  with the first copy small: {}", found.len());

    // The lines of the Fano plane are the small sets of no tangle of order 4:
    // three of them already cover the ground set.
    let fano = corpus::fano();
    let lines: Vec<_> = fano.flats()?.into_iter().filter(|&f| fano.r(f) == 2).collect();
    match verify_tangle(&fano, 4, &lines)? {
        None => println!("F7 lines: a tangle"),
        Some(v) => println!("F7 lines: fail {} with {} witness sets", v.axiom, v.witness.len()),
    }
    Ok(())
}

fn main() -> Result<()> {
    run()
}
