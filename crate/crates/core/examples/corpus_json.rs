//! Matroids and tangles as JSON: construction expressions round-trip, and
//! the shipped corpus files rebuild the named examples.

use tanglekit::corpus;
use tanglekit::tangle::{enumerate_tangles, TangleDocument};
use tanglekit::{MatroidExpr, Result};

pub fn run() -> Result<()> {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/corpus/v1");
    for e in corpus::entries() {
        let path = format!("{dir}/{}.json", e.name);
        let text = std::fs::read_to_string(&path).map_err(|err| tanglekit::Error::Io(format!("{path}: {err}")))?;
        let expr = MatroidExpr::from_json(&text)?;
        println!("{:<14} {} elements, matches constructor: {}", e.name, expr.build()?.len(), expr == e.expr);
    }

    let m = corpus::k4();
    let t = &enumerate_tangles(&m, 3)?[0];
    let doc = serde_json::to_string(&TangleDocument::new(t)).expect("json");
    println!("{doc}");
    let back: TangleDocument = serde_json::from_str(&doc).map_err(|e| tanglekit::Error::Parse(e.to_string()))?;
    println!("reloaded tangle equal: {}", back.load()? == *t);
    Ok(())
}

fn main() -> Result<()> {
    run()
}
