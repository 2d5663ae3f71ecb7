//! Every property suite over its default pool.

use tanglekit::lab::{catalog, run_all};

/// A statement that fails on the pool as written; see `solid-lines-sided`
/// for the form that holds.
const KNOWN_FALSE: &[&str] = &["solid-lines"];

#[test]
fn all_suites() {
    let reports = run_all(None).unwrap();
    assert_eq!(reports.len(), catalog().len());
    for r in &reports {
        println!("{}", r.summary());
        assert!(!r.incomplete, "{}", r.suite);
        assert!(r.instances > 0, "{}", r.suite);
        if KNOWN_FALSE.contains(&r.suite.as_str()) {
            assert!(!r.failures.is_empty(), "{} found no counterexample", r.suite);
            assert!(r.failures.iter().all(|f| f.instance.starts_with("long-line-dual")), "{}", r.suite);
        } else {
            assert!(r.failures.is_empty(), "{}: {:?}", r.suite, r.failures.first().map(|f| &f.witness));
            assert!(r.checks > 0, "{} checked nothing", r.suite);
        }
    }
}
