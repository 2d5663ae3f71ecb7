//! Shipped corpus files and the recorded facts of each entry.

use tanglekit::corpus;
use tanglekit::reduction::{generated_tangle, Generated, Removal};
use tanglekit::tangle::{breadth, enumerate_tangles};
use tanglekit::{MatroidExpr, SubsetMask};

#[test]
fn corpus_files_match_constructors() {
    for e in corpus::entries() {
        let path = format!("{}/corpus/v1/{}.json", env!("CARGO_MANIFEST_DIR"), e.name);
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(MatroidExpr::from_json(&text).unwrap(), e.expr, "{path}");
    }
    for (file, name) in [("u37.json", "u37"), ("critical_s6.json", "critical_s6")] {
        let path = format!("{}/examples/{file}", env!("CARGO_MANIFEST_DIR"));
        let text = std::fs::read_to_string(&path).unwrap();
        assert_eq!(MatroidExpr::from_json(&text).unwrap(), corpus::entry(name).unwrap().expr);
    }
}

#[test]
fn recorded_facts_hold() {
    for e in corpus::entries() {
        let m = e.build().unwrap();
        if m.len() > tanglekit::limits::scan_cap() {
            continue;
        }
        let f = &e.facts;
        if let Some(w) = f.weakly_four_connected {
            assert_eq!(m.is_weakly_four_connected().unwrap(), w, "{}", e.name);
        }
        if let Some(c) = f.connected {
            assert_eq!(m.is_connected().unwrap(), c, "{}", e.name);
        }
        if let Some(k) = f.order {
            let ts = enumerate_tangles(&m, k).unwrap();
            if let Some(n) = f.tangle_count {
                assert_eq!(ts.len(), n, "{}", e.name);
            }
            if let Some(b) = f.breadth {
                assert_eq!(breadth(&ts[0]).unwrap().value, b, "{}", e.name);
            }
        }
    }
}

#[test]
fn k4_has_one_order_three_tangle_of_breadth_six() {
    let ts = enumerate_tangles(&corpus::k4(), 3).unwrap();
    assert_eq!(ts.len(), 1);
    assert_eq!(breadth(&ts[0]).unwrap().value, 6);
}

#[test]
fn golden_weak_three_separating_sets() {
    let m = corpus::breadth_critical_matroid(6).unwrap();
    let t = &enumerate_tangles(&m, 4).unwrap()[0];
    // Maximal weak sets with λ ≤ 2, recomputed from λ and weakness alone.
    let weak: Vec<SubsetMask> = m
        .ground()
        .submasks()
        .filter(|&a| m.lam(a) <= 2 && t.is_weak(a))
        .collect();
    let maximal: Vec<SubsetMask> = weak
        .iter()
        .copied()
        .filter(|&a| !weak.iter().any(|&b| b != a && a.is_subset_of(b)))
        .collect();
    let big: Vec<Vec<String>> = maximal.iter().filter(|a| a.len() > 2).map(|&a| m.labels_of(a)).collect();
    assert_eq!(big, vec![vec!["a", "b", "c", "d"]]);
    assert!(maximal.iter().all(|a| a.len() == 2 || a.len() == 4));
}

#[test]
fn golden_automorphisms() {
    let m = corpus::breadth_critical_matroid(6).unwrap();
    let idx = |l: &str| m.index_of(l).unwrap();
    let swap = |pairs: &[(&str, &str)]| -> Vec<usize> {
        (0..m.len())
            .map(|i| {
                let l = m.label(i);
                pairs
                    .iter()
                    .find_map(|&(x, y)| if l == x { Some(idx(y)) } else if l == y { Some(idx(x)) } else { None })
                    .unwrap_or(i)
            })
            .collect()
    };
    assert!(m.is_automorphism(&swap(&[("a", "d"), ("b", "c")])).unwrap());
    assert!(m.is_automorphism(&swap(&[("c", "d"), ("a", "b")])).unwrap());
    assert!(!m.is_automorphism(&swap(&[("a", "e1")])).unwrap());
}

#[test]
fn golden_deletion_loses_breadth() {
    let m = corpus::breadth_critical_matroid(6).unwrap();
    let t = &enumerate_tangles(&m, 4).unwrap()[0];
    match generated_tangle(t, &Removal::delete("a")).unwrap() {
        Generated::Unique(ta) => assert!(breadth(&ta).unwrap().value < 12),
        other => panic!("{other:?}"),
    }
}
