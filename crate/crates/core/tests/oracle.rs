//! Tangle enumeration against a raw orientation search, and the
//! flat-context family against generation in the minor.

mod common;

use tanglekit::lab::{Pool, Selector};
use tanglekit::tangle::enumerate_tangles;
use tanglekit::{corpus, Matroid};

fn compare(name: &str, m: &Matroid) {
    for k in 2..=5 {
        let raw: Vec<String> = common::raw_tangles(m, k)
            .iter()
            .map(|small| serde_json::to_string(&common::as_labels(m, &common::maximal(small))).unwrap())
            .collect();
        let mut ours: Vec<String> = enumerate_tangles(m, k)
            .unwrap()
            .iter()
            .map(|t| {
                let masks: Vec<u64> = t.maximal_small().iter().map(|a| a.bits()).collect();
                serde_json::to_string(&common::as_labels(m, &masks)).unwrap()
            })
            .collect();
        let mut raw = raw;
        raw.sort();
        ours.sort();
        assert_eq!(raw, ours, "{name} order {k}");
    }
}

#[test]
fn named_matroids_match_raw_orientations() {
    for (name, m) in [
        ("u37", corpus::u37()),
        ("k4", corpus::k4()),
        ("fano", corpus::fano()),
        ("wheel4", corpus::wheel4()),
        ("u37+coloop", Matroid::direct_sum(&[corpus::u37(), Matroid::uniform(1, 1).unwrap()]).unwrap()),
    ] {
        compare(name, &m);
    }
}

#[test]
fn pool_up_to_eight_matches_raw_orientations() {
    let pool = Pool::new(&Selector::up_to(8)).unwrap();
    assert!(pool.instances.len() >= 20);
    for inst in &pool.instances {
        compare(&inst.name, &inst.matroid);
    }
}
