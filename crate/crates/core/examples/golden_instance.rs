//! The 14-element breadth-critical matroid: a weakly 4-connected matroid
//! with no triangles, one 4-tangle of breadth 12, and no single removal that
//! keeps a tangle of that breadth.

use std::time::Instant;

use tanglekit::corpus;
use tanglekit::reduction::{is_breadth_critical_one_step, RemovalOutcome};
use tanglekit::tangle::{breadth, enumerate_tangles};
use tanglekit::Result;

pub fn run() -> Result<()> {
    let start = Instant::now();
    let m = corpus::breadth_critical_matroid(6)?;
    println!("{} elements, rank {}", m.len(), m.full_rank());

    let triangles = m
        .ground()
        .submasks()
        .filter(|&c| c.len() == 3 && m.r(c) == 2)
        .count();
    println!("triangles: {triangles}");
    println!("weakly 4-connected: {}", m.is_weakly_four_connected()?);

    let ts = enumerate_tangles(&m, 4)?;
    println!("order-4 tangles: {}", ts.len());
    let t = &ts[0];
    println!("breadth: {}", breadth(t)?.value);

    let abcd = m.mask_of(&["a", "b", "c", "d"])?;
    println!("λ{{a,b,c,d}} = {}, small: {}", m.lam(abcd), t.is_small(abcd));

    let report = is_breadth_critical_one_step(t)?;
    println!("critical: {}", report.critical);
    for (r, outcome) in &report.table {
        let text = match outcome {
            RemovalOutcome::NoGeneratedTangle => "no tangle".to_string(),
            RemovalOutcome::Ambiguous(n) => format!("{n} candidate tangles"),
            RemovalOutcome::Breadth(b) => format!("breadth {b}"),
        };
        println!("  {r:>4}  {text}");
    }

    // The automorphism swapping a with d and b with c.
    let perm: Vec<usize> = (0..m.len())
        .map(|i| match m.label(i) {
            "a" => m.index_of("d"),
            "d" => m.index_of("a"),
            "b" => m.index_of("c"),
            "c" => m.index_of("b"),
            _ => Some(i),
        })
        .collect::<Option<_>>()
        .expect("labels exist");
    println!("a<->d, b<->c is an automorphism: {}", m.is_automorphism(&perm)?);
    println!("{:.2?}", start.elapsed());
    Ok(())
}

fn main() -> Result<()> {
    run()
}
