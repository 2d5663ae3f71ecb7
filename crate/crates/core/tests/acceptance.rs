//! Acceptance criteria 1-8. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any fails.

mod common;

use std::time::{Duration, Instant};

use tanglekit::corpus;
use tanglekit::lab::{run_suite, suite, Pool, Selector};
use tanglekit::reduction::{is_breadth_critical_one_step, RemovalOutcome};
use tanglekit::tangle::{breadth, enumerate_tangles, tangle_matroid};
use tanglekit::{Matroid, SubsetMask};

/// Wall-clock limits for criteria 1, 2 and 3.
const GOLDEN_LIMIT: Duration = Duration::from_secs(60);
const CRITICAL_LIMIT: Duration = Duration::from_secs(600);
const UNIFORM_LIMIT: Duration = Duration::from_secs(5);

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let detail = f()?;
    let took = start.elapsed();
    ensure(took < limit, || format!("took {took:.2?}, limit {limit:?}"))?;
    Ok(format!("{detail} in {took:.2?}"))
}

fn e<T: std::fmt::Display>(x: T) -> String {
    x.to_string()
}

/// Raw λ-table check of weak 4-connectivity: no λ ≤ 1 separation with both
/// sides nonempty (resp. ≥ 2), and λ = 2 only with a side of ≤ 4 elements.
fn weak4_raw(m: &Matroid) -> bool {
    let n = m.len();
    m.ground().submasks().all(|a| {
        let (s, t) = (a.len(), n - a.len());
        match m.lam(a) {
            0 => s == 0 || t == 0,
            1 => s < 2 || t < 2,
            2 => s.min(t) <= 4,
            _ => true,
        }
    })
}

fn criterion_1() -> Outcome {
    timed(GOLDEN_LIMIT, || {
        let m = corpus::breadth_critical_matroid(6).map_err(e)?;
        ensure(m.len() == 14, || format!("{} elements", m.len()))?;
        let triangles = m
            .ground()
            .submasks()
            .filter(|&c| c.len() == 3 && m.r(c) == 2 && c.iter().all(|x| m.r(c.without(x)) == 2))
            .count();
        ensure(triangles == 0, || format!("{triangles} triangles"))?;
        let w4 = m.is_weakly_four_connected().map_err(e)?;
        ensure(w4 && weak4_raw(&m), || format!("weakly 4-connected: engine {w4}, raw {}", weak4_raw(&m)))?;
        let ts = enumerate_tangles(&m, 4).map_err(e)?;
        ensure(ts.len() == 1, || format!("{} order-4 tangles", ts.len()))?;
        let b = breadth(&ts[0]).map_err(e)?.value;
        ensure(b == 12, || format!("breadth {b}"))?;
        Ok("14 elements, no triangles, weakly 4-connected, 1 tangle, breadth 12".into())
    })
}

fn criterion_2() -> Outcome {
    timed(CRITICAL_LIMIT, || {
        let m = corpus::breadth_critical_matroid(6).map_err(e)?;
        let t = &enumerate_tangles(&m, 4).map_err(e)?[0];
        let r = is_breadth_critical_one_step(t).map_err(e)?;
        ensure(r.table.len() == 28, || format!("{} removals", r.table.len()))?;
        for (removal, out) in &r.table {
            if let RemovalOutcome::Breadth(b) = out {
                ensure(*b <= 11, || format!("{removal} keeps breadth {b}"))?;
            }
        }
        ensure(r.critical, || "not reported critical".into())?;
        Ok("28 removals, none keeps breadth 12".into())
    })
}

fn criterion_3() -> Outcome {
    timed(UNIFORM_LIMIT, || {
        let u = corpus::u37();
        let ts = enumerate_tangles(&u, 4).map_err(e)?;
        ensure(ts.len() == 1, || format!("U3,7: {} tangles", ts.len()))?;
        let p = tangle_matroid(&ts[0]).map_err(e)?;
        let same = p.matroid().rank_table().map_err(e)? == u.rank_table().map_err(e)?;
        ensure(same, || "U3,7: tangle matroid differs".into())?;
        let b = breadth(&ts[0]).map_err(e)?.value;
        ensure(b == 7, || format!("U3,7: breadth {b}"))?;
        let k4 = corpus::k4();
        let ts = enumerate_tangles(&k4, 3).map_err(e)?;
        ensure(ts.len() == 1, || format!("M(K4): {} tangles", ts.len()))?;
        let b = breadth(&ts[0]).map_err(e)?.value;
        ensure(b == 6, || format!("M(K4): breadth {b}"))?;
        Ok("U3,7 and M(K4): one tangle each, breadth = |E|".into())
    })
}

fn suites(ids: &[&str]) -> Outcome {
    let mut checks = 0;
    let mut instances = 0;
    for id in ids {
        let s = suite(id).ok_or_else(|| format!("no suite {id}"))?;
        let r = run_suite(id, &(s.selector)(), None).map_err(e)?;
        ensure(r.passed(), || match r.failures.first() {
            Some(f) => format!("{id}: {} failures, first {} {}", r.failures.len(), f.instance, f.witness),
            None => format!("{id}: incomplete"),
        })?;
        ensure(r.checks > 0, || format!("{id}: nothing checked"))?;
        checks += r.checks;
        instances += r.instances;
    }
    Ok(format!("{} suites, {instances} instance runs, {checks} checks, 0 failures", ids.len()))
}

fn criterion_4() -> Outcome {
    suites(&["breadth-critical-step"])
}

fn criterion_5() -> Outcome {
    suites(&["reduce-end-to-end"])
}

fn criterion_6() -> Outcome {
    suites(&[
        "hyperplanes-maximal-small",
        "three-hyperplane-cover",
        "weak-rank",
        "quotient",
        "flats-fully-closed",
        "round",
        "three-connected",
        "freer",
        "breadth-down",
        "static-ranks",
        "loops-away",
        "loops-all",
        "series-parallel",
        "interior-free",
        "witness-lines",
        "keep-three-connected",
        "guts-away",
        "one-tangle",
        "plane-identity",
        "breadth-root",
        "truncation",
    ])
}

fn criterion_7() -> Outcome {
    suites(&["connected-set-pipeline"])
}

fn criterion_8() -> Outcome {
    let pool = Pool::new(&Selector::up_to(8)).map_err(e)?;
    let mut compared = 0;
    for inst in &pool.instances {
        let m = &inst.matroid;
        for k in 2..=5 {
            let mut raw: Vec<String> = common::raw_tangles(m, k)
                .iter()
                .map(|s| serde_json::to_string(&common::as_labels(m, &common::maximal(s))).unwrap())
                .collect();
            let mut ours: Vec<String> = enumerate_tangles(m, k)
                .map_err(e)?
                .iter()
                .map(|t| {
                    let masks: Vec<u64> = t.maximal_small().iter().map(|&a: &SubsetMask| a.bits()).collect();
                    serde_json::to_string(&common::as_labels(m, &masks)).unwrap()
                })
                .collect();
            raw.sort();
            ours.sort();
            ensure(raw == ours, || format!("{} order {k}: {} raw vs {} enumerated", inst.name, raw.len(), ours.len()))?;
            compared += 1;
        }
    }
    let sel = suites(&["selection"])?;
    Ok(format!("{compared} (instance, order) pairs identical to raw orientation; selection: {sel}"))
}

fn main() {
    type Criterion = (&'static str, fn() -> Outcome);
    let criteria: [Criterion; 8] = [
        ("golden instance", criterion_1),
        ("golden criticality", criterion_2),
        ("uniform and K4 tangles", criterion_3),
        ("breadth-critical step", criterion_4),
        ("reduction end to end", criterion_5),
        ("structural suites", criterion_6),
        ("connected-set pipeline", criterion_7),
        ("oracle cross-checks", criterion_8),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(d) => println!("criterion {} PASS  {name}: {d}", i + 1),
            Err(d) => {
                failed += 1;
                println!("criterion {} FAIL  {name}: {d}", i + 1)
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}
