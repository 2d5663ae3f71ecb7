//! k-connected sets, the tangles they define, and carrying a 4-connected set
//! through the reduction to a weakly 4-connected minor.

use tanglekit::reduction::reduce_to_weakly_4_connected;
use tanglekit::tangle::{breadth, tangle_from_k_connected_set, tangle_matroid};
use tanglekit::{corpus, Result, SubsetMask};

pub fn run() -> Result<()> {
    let m = corpus::uniform_with_fat_line(4);
    let z = m.mask_of(&["e1", "e3", "e4", "e5", "e6", "e7", "p1"])?;
    println!("Z 4-connected: {}", m.is_k_connected_set(z, 4)?);
    if let Some(a) = m.k_connected_violation(m.ground(), 4)? {
        println!("E is not: λ{:?} = {}", m.labels_of(a), m.lam(a));
    }

    let t = tangle_from_k_connected_set(&m, z, 4)?;
    let p = tangle_matroid(&t)?;
    // The tangle matroid restricted to Z is uniform of rank 3.
    let uniform = z.submasks().all(|s| p.matroid().r(s) == s.len().min(3));
    println!("M_T|Z uniform: {uniform}, breadth {}", breadth(&t)?.value);

    let tr = reduce_to_weakly_4_connected(&t)?;
    let n = &tr.final_matroid;
    let u = breadth(&tr.final_tangle)?.witness;
    let part = SubsetMask::from_indices(u.iter().take(z.len()));
    println!(
        "minor on {} elements keeps a {}-element 4-connected set {:?}: {}",
        n.len(),
        z.len(),
        n.labels_of(part),
        n.is_k_connected_set(part, 4)?
    );
    Ok(())
}

fn main() -> Result<()> {
    run()
}
