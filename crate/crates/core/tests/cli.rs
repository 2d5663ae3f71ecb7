//! The command-line verbs end to end, through `dispatch`.

use tanglekit::cli::dispatch;
use tanglekit::tangle::{verify_tangle, TangleJson};
use tanglekit::MatroidExpr;

fn run(args: &[&str]) -> (i32, String) {
    dispatch(std::iter::once("tanglekit").chain(args.iter().copied()))
}

fn example(name: &str) -> String {
    format!("{}/examples/{name}", env!("CARGO_MANIFEST_DIR"))
}

#[test]
fn tangles_of_u37() {
    let (code, out) = run(&["tangles", "--order", "4", &example("u37.json")]);
    assert_eq!(code, 0);
    assert!(out.starts_with("1 tangle found\n"), "{out}");
    assert!(out.contains("breadth 7"), "{out}");
}

#[test]
fn reduce_golden_instance() {
    let (code, out) = run(&["reduce", "--order", "4", &example("critical_s6.json")]);
    assert_eq!(code, 0);
    assert_eq!(out, "already weakly 4-connected; breadth 12\n");
}

#[test]
fn check_flags() {
    let s6 = example("critical_s6.json");
    assert_eq!(run(&["check", "--weak4", &s6]), (0, "true\n".to_string()));
    assert_eq!(run(&["check", "--solid", "a,b,c,d", &s6]).0, 0);
    assert_eq!(run(&["check", "--titanic", "a,b,c,d", &s6]).0, 0);
    assert_eq!(run(&["check", "--fully-closed", "a,b,c,d", &s6]).0, 0);
    assert_eq!(run(&["check", "--round", &example("u37.json")]).0, 0);
    let (code, out) = run(&["check", "--svec", "0,1,3", &s6]);
    assert_eq!(code, 1);
    assert!(out.starts_with("false\nviolating side"), "{out}");
    assert_eq!(run(&["check", "--weak4", "--round", &s6]).0, 2);
    assert_eq!(run(&["check", "--titanic", "a,zz", &s6]).0, 2);
}

#[test]
fn json_output_round_trips() {
    let (code, out) = run(&["--json", "tangles", "--order", "4", &example("critical_s6.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let m = MatroidExpr::from_json(&v["matroid"].to_string()).unwrap().build().unwrap();
    assert_eq!(v["count"], 1);
    let t: TangleJson = serde_json::from_value(v["tangles"][0]["tangle"].clone()).unwrap();
    let family: Vec<_> = t.maximal_small.iter().map(|s| m.mask_of(s).unwrap()).collect();
    assert!(verify_tangle(&m, t.order, &family).unwrap().is_none());

    let (code, out) = run(&["--json", "truncate", "--order", "4", "--to", "3", &example("u37.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let doc: tanglekit::tangle::TangleDocument = serde_json::from_value(v["tangles"][0].clone()).unwrap();
    assert_eq!(doc.load().unwrap().order(), 3);

    let (code, out) = run(&["--json", "tangle-matroid", "--order", "4", &example("u37.json")]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let p = MatroidExpr::from_json(&v["tangle_matroids"][0]["tangle_matroid"].to_string()).unwrap();
    assert!(p.build().unwrap().same_as(&tanglekit::corpus::u37()).unwrap());
}

#[test]
fn kconn_breadth_and_generation() {
    let s6 = example("critical_s6.json");
    let (code, out) = run(&["breadth", "--order", "4", "--witness", &s6]);
    assert_eq!(code, 0);
    assert!(out.contains("breadth 12, witness {"), "{out}");
    assert_eq!(run(&["kconn", "--set", "e1,e2,e3,e4", "--order", "4", &s6]).0, 0);
    assert_eq!(run(&["gen-example", "k4"]).0, 0);
    let (code, out) = run(&["gen-example", "random:8,3,7"]);
    assert_eq!(code, 0);
    assert_eq!(MatroidExpr::from_json(&out).unwrap().build().unwrap().len(), 8);
    assert_eq!(run(&["gen-example", "critical:x"]).0, 2);
}

#[test]
fn verify_suite_exit_codes() {
    assert_eq!(run(&["verify-suite", "up-down", "--budget", "1000"]).0, 0);
    // A budget that cuts the pool short leaves the report incomplete.
    assert_eq!(run(&["verify-suite", "up-down", "--budget", "3"]).0, 1);
    let (code, out) = run(&["--json", "verify-suite", "lambda-symmetry", "--seed", "9"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["suite"], "lambda-symmetry");
}
