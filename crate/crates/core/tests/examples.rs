//! Every example runs to completion.

#[allow(dead_code)]
#[path = "../examples/connectivity_calculus.rs"]
mod connectivity_calculus;

#[test]
fn connectivity_calculus_runs() {
    connectivity_calculus::run().expect("connectivity_calculus");
}

#[allow(dead_code)]
#[path = "../examples/enumerate_tangles.rs"]
mod enumerate_tangles;

#[test]
fn enumerate_tangles_runs() {
    enumerate_tangles::run().expect("enumerate_tangles");
}

#[allow(dead_code)]
#[path = "../examples/tangle_matroid_breadth.rs"]
mod tangle_matroid_breadth;

#[test]
fn tangle_matroid_breadth_runs() {
    tangle_matroid_breadth::run().expect("tangle_matroid_breadth");
}

#[allow(dead_code)]
#[path = "../examples/golden_instance.rs"]
mod golden_instance;

#[test]
fn golden_instance_runs() {
    golden_instance::run().expect("golden_instance");
}

#[allow(dead_code)]
#[path = "../examples/reduce_to_weak4.rs"]
mod reduce_to_weak4;

#[test]
fn reduce_to_weak4_runs() {
    reduce_to_weak4::run().expect("reduce_to_weak4");
}

#[allow(dead_code)]
#[path = "../examples/breadth_critical.rs"]
mod breadth_critical;

#[test]
fn breadth_critical_runs() {
    breadth_critical::run().expect("breadth_critical");
}

#[allow(dead_code)]
#[path = "../examples/k_connected_sets.rs"]
mod k_connected_sets;

#[test]
fn k_connected_sets_runs() {
    k_connected_sets::run().expect("k_connected_sets");
}

#[allow(dead_code)]
#[path = "../examples/truncation.rs"]
mod truncation;

#[test]
fn truncation_runs() {
    truncation::run().expect("truncation");
}

#[allow(dead_code)]
#[path = "../examples/property_suites.rs"]
mod property_suites;

#[test]
fn property_suites_runs() {
    property_suites::run().expect("property_suites");
}

#[allow(dead_code)]
#[path = "../examples/corpus_json.rs"]
mod corpus_json;

#[test]
fn corpus_json_runs() {
    corpus_json::run().expect("corpus_json");
}
