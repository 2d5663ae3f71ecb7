//! λ, closures, guts and coguts, and the connectivity predicates on a few
//! small matroids.

use tanglekit::{corpus, Matroid, Result, SubsetMask};

fn show(m: &Matroid, a: SubsetMask) -> String {
    format!("{{{}}}", m.labels_of(a).join(","))
}

pub fn run() -> Result<()> {
    let k4 = corpus::k4();
    let fano = corpus::fano();
    let w4 = corpus::wheel4();

    // A triangle of K4 is exactly 3-separating, and closed on both sides.
    let tri = k4.mask_of(&["c", "d", "e"])?;
    let p = k4.boundary_profile(tri)?;
    println!("K4: λ{} = {}", show(&k4, tri), k4.lambda(tri)?);
    println!("  guts {} coguts {} interior {}", show(&k4, p.guts), show(&k4, p.coguts), show(&k4, p.interior));
    println!("  fully closed: {}, solid: {}, titanic: {}", k4.is_fully_closed(tri), k4.is_solid(tri)?, k4.is_titanic(tri)?);

    for (name, m) in [("K4", &k4), ("F7", &fano), ("W4", &w4)] {
        let r = m.connectivity_report(None)?;
        println!(
            "{name}: connected {}, 3-connected {}, weakly 4-connected {}, round {}",
            r.connected,
            r.three_connected,
            r.weakly_four_connected,
            m.is_round()?
        );
    }

    // svec [0, 1, 4]: no 1-separations, no 2-separations, and every
    // 3-separation has a side of at most four elements.
    let u = Matroid::uniform(3, 9)?;
    let fat = corpus::uniform_with_fat_line(3);
    for (name, m) in [("U3,9", &u), ("fat line", &fat)] {
        match m.svec_violation(&[0, 1, 4])? {
            None => println!("{name}: weakly 4-connected"),
            Some(a) => println!("{name}: violated by {} with λ = {}", show(m, a), m.lam(a)),
        }
    }

    // Deleting and contracting move λ by at most one.
    let e = w4.ground();
    let x = 0;
    let d = w4.delete(SubsetMask::singleton(x))?;
    let kept: Vec<usize> = e.without(x).iter().collect();
    let a = SubsetMask::from_indices([0, 1]);
    println!(
        "W4 \\{}: λ{} = {}, was {}",
        w4.label(x),
        show(&d, a),
        d.lam(a),
        w4.lam(a.expand(&kept))
    );
    Ok(())
}

fn main() -> Result<()> {
    run()
}
