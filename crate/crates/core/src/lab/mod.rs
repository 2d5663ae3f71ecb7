//! Executable property suites: each suite states one structural fact about
//! matroids, tangles or tangle matroids, checks its hypotheses on every
//! instance of a seeded pool, and checks the conclusion where they hold.

mod breadth_suites;
mod matroid_suites;
mod minor_suites;
mod order_four_suites;
mod pool;
mod tangle_suites;

pub use pool::{Instance, Pool, Selector, DEFAULT_SEED, MAX_ORDER, MIN_ORDER};

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mask::SubsetMask;
use crate::matroid::{Matroid, MatroidExpr};

/// Counts for one instance.
#[derive(Debug, Default)]
pub struct Tally {
    checks: u64,
    skipped: u64,
    failures: Vec<String>,
}

impl Tally {
    /// Record one checked conclusion.
    pub fn check(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok {
            self.failures.push(witness());
        }
    }

    /// Record a case whose hypotheses do not hold.
    pub fn skip(&mut self) {
        self.skipped += 1;
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub instance: String,
    /// Hex digest of labels and rank table.
    pub fingerprint: String,
    /// Rebuilds the instance.
    pub matroid: MatroidExpr,
    pub witness: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub statement: String,
    pub instances: usize,
    pub checks: u64,
    /// Cases (tangles, sets, elements) whose hypotheses failed.
    pub skipped: u64,
    pub failures: Vec<Failure>,
    pub wall_time_ms: f64,
    /// The budget ran out before every selected instance was checked.
    pub incomplete: bool,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && !self.incomplete
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("serializable")
    }

    /// One line: id, verdict, counts.
    pub fn summary(&self) -> String {
        format!(
            "{:<28} {} instances={} checks={} skipped={} failures={}{} ({:.0} ms)",
            self.suite,
            match (self.failures.is_empty(), self.incomplete) {
                (false, _) => "FAIL",
                (true, true) => "part",
                (true, false) => "ok  ",
            },
            self.instances,
            self.checks,
            self.skipped,
            self.failures.len(),
            if self.incomplete { " incomplete" } else { "" },
            self.wall_time_ms
        )
    }
}

pub struct Suite {
    pub id: &'static str,
    pub statement: &'static str,
    /// Instances the suite runs on by default.
    pub selector: fn() -> Selector,
    check: fn(&Instance, &mut Tally) -> Result<()>,
}

impl std::fmt::Debug for Suite {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Suite").field("id", &self.id).finish()
    }
}

macro_rules! suite {
    ($id:literal, $stmt:literal, $sel:expr, $f:path) => {
        Suite {
            id: $id,
            statement: $stmt,
            selector: $sel,
            check: $f,
        }
    };
}

fn small() -> Selector {
    Selector::default()
}

fn up_to_10() -> Selector {
    Selector::up_to(10)
}

fn large() -> Selector {
    Selector::large()
}

/// Every suite, in catalog order.
pub fn catalog() -> &'static [Suite] {
    use breadth_suites as b;
    use matroid_suites as m;
    use minor_suites as mi;
    use order_four_suites as o;
    use tangle_suites as t;
    static CATALOG: &[Suite] = &[
        suite!("lambda-symmetry", "λ(A) = λ(E-A) = λ*(A)", small, m::lambda_symmetry),
        suite!("lambda-submodular", "λ(A)+λ(B) ≥ λ(A∩B)+λ(A∪B) and ≥ λ(A-B)+λ(B-A)", small, m::lambda_submodular),
        suite!("coclosure-complement", "for a partition (A, {x}, B): x ∈ cl*(A) iff x ∉ cl(B)", small, m::coclosure_complement),
        suite!("fully-closed-minor", "a fully closed A stays fully closed after removing an element of A", small, m::fully_closed_minor),
        suite!("up-down", "λ(A+x) - λ(A) is -1, 0, +1 as x lies in both, one, none of cl(A), cl*(A)", up_to_10, m::up_down),
        suite!("contract-lambda", "λ_{M/x}(A) = λ(A) - [x ∈ cl(A)] for a non-loop x ∉ A", small, m::contract_lambda),
        suite!("interior-pairs", "a nonempty interior has at least two elements", small, m::interior_pairs),
        suite!("guts-coguts", "3-connected M, F fully closed 3-separating, |F| ≥ 3: guts and coguts disjoint, both singletons if both nonempty, one of the four interior shapes", small, m::guts_coguts),
        suite!("titanic-cover", "titanic iff no three parts of lower λ cover the set; titanic sets are solid", up_to_10, m::titanic_cover),
        suite!("backend-agreement", "rank-table, graphic and linear backends agree on rank, closure and λ", small, m::backend_agreement),
        suite!("enumeration-valid", "enumerated tangles satisfy the axioms and are distinct", small, t::enumeration_valid),
        suite!("hyperplanes-maximal-small", "M_T has rank k-1 and its hyperplanes are the maximal small sets", small, t::hyperplanes_maximal_small),
        suite!("three-hyperplane-cover", "a matroid other than U11 is a tangle matroid iff no three hyperplanes cover it", small, t::three_hyperplane_cover),
        suite!("weak-rank", "weak iff r_T < k-1; proper flats of M_T are small with r_T = λ; bases are strong (k-1)-sets", small, t::weak_rank),
        suite!("connected-unique-tangle", "a k-connected M with |E| > 3(k-2) has one k-tangle, the sets of size ≤ k-2, with M_T uniform", small, t::connected_unique_tangle),
        suite!("uniform-set-connected", "a set Z of size ≥ k-1 with M_T|Z uniform of rank k-1 is k-connected", small, t::uniform_set_connected),
        suite!("connected-set-tangle", "a k-connected set Z with |Z| ≥ 3k-5 gives a tangle T_Z with M_{T_Z}|Z uniform; a witness of breadth ≥ 3k-5 generates T", small, t::connected_set_tangle),
        suite!("quotient", "cl_M(X) ⊆ cl_T(X) and r_M(A)-r_M(B) ≥ r_T(A)-r_T(B) for B ⊆ A", small, t::quotient),
        suite!("flats-fully-closed", "every flat of M_T is fully closed in M", small, t::flats_fully_closed),
        suite!("round", "M_T is round", small, t::round),
        suite!("three-connected", "order ≥ 3 in a 3-connected M gives a 3-connected M_T", small, t::three_connected),
        suite!("solid-lines", "order ≥ 4, M 3-connected: a solid rank-2 flat meets another solid flat of M_T in at most one element, spanned on both sides", small, t::solid_lines),
        suite!("solid-lines-sided", "order ≥ 4, M 3-connected: a solid rank-2 flat meets another solid flat of M_T in at most one element, spanned on both sides or cospanned on both sides", small, t::solid_lines_sided),
        suite!("induce-up", "a tangle of a single-element minor induces a tangle of M", small, mi::induce_up),
        suite!("induce-down", "a generated tangle induces the original", small, mi::induce_down),
        suite!("transitive", "generation along two removals equals direct generation", small, mi::transitive),
        suite!("add-weak", "generation by restricted small sets equals generation by all weak separating sets of the minor", small, mi::add_weak),
        suite!("ambiguous", "after removing a, at most one side of a separation is weak; if neither is, both have λ_M = k-1 and a is spanned by both", small, mi::ambiguous),
        suite!("canonical-side", "over a solid flat context, unoriented separations have exactly one side meeting F and G in low connectivity, and it is small in every inducing tangle", small, mi::canonical_side),
        suite!("selection", "the determined family orients each separation once, is closed under separating subsets, contains singletons, and equals any generated tangle", small, mi::selection),
        suite!("titanic-generates", "over a titanic flat context the tangle generates a tangle after the removal", small, mi::titanic_generates),
        suite!("freer", "over a titanic context, M_T\\a has the same rank as M_{T_a} and every independent set of M_{T_a}", small, mi::freer),
        suite!("breadth-down", "over a titanic context, breadth(T_a) ≤ breadth(T)", small, mi::breadth_down),
        suite!("static-ranks", "over a titanic context, sets containing F-a or inside E-F have equal rank in M_T\\a and M_{T_a}", small, mi::static_ranks),
        suite!("loops-away", "deleting a loop of M_T generates a tangle of equal breadth", small, b::loops_away),
        suite!("loops-all", "M_T minus its loops is connected, and deleting all of them generates a tangle of equal breadth", small, b::loops_all),
        suite!("series-parallel", "order ≥ 3, M connected, F small 2-separating, a ∈ F with M\\a connected: generated T_a with M_{T_a} = M_T\\a, equal breadth", small, b::series_parallel),
        suite!("titanic-three-separating", "3-connected M: an exactly 3-separating set is titanic iff it has ≥ 4 elements", small, b::titanic_three_separating),
        suite!("interior-free", "order ≥ 4, M 3-connected, F maximal small 3-separating with |F| ≥ 3: interior elements are freely placed on F in M_T", small, b::interior_free),
        suite!("witness-lines", "order ≥ 4, M 3-connected: a breadth witness meets a rank-2 flat of M_T in ≤ 2 elements, and can swap in freely placed elements", small, b::witness_lines),
        suite!("keep-interior", "deleting an element of a large maximal small 3-separating set that keeps 3-connectivity, λ, and a nonempty interior preserves breadth", small, b::keep_interior),
        suite!("keep-three-connected", "deleting a guts element of a fully closed exactly 3-separating set of ≥ 4 elements keeps 3-connectivity", small, b::keep_three_connected),
        suite!("guts-away", "order ≥ 4, M 3-connected, F maximal small 3-separating, |F| ≥ 5, |guts| ≥ 3: guts deletions generate T_x with M_{T_x} = M_T\\x, one of equal breadth", small, b::guts_away),
        suite!("interior-element", "3-connected M, F fully closed exactly 3-separating with r, r* > 2 and |F| ≥ 5: some removal stays 3-connected with |inter(F-a)| ≥ 2", small, b::interior_element),
        suite!("breadth-critical-step", "order ≥ 4: M is weakly 4-connected or some single removal generates a tangle of equal breadth", small, b::breadth_critical_step),
        suite!("reduce-end-to-end", "reduction ends weakly 4-connected with constant breadth and a final tangle generated directly", small, b::reduce_end_to_end),
        suite!("connected-set-pipeline", "an n-element 4-connected set with n ≥ 7 survives reduction as an n-element 4-connected set of a weakly 4-connected minor", small, b::connected_set_pipeline),
        suite!("one-tangle", "weakly 4-connected with ≥ 13 elements: exactly one 4-tangle, the sets with λ ≤ 2 and ≤ 4 elements", large, o::one_tangle),
        suite!("plane-identity", "a simple rank-3 matroid not covered by three lines has one 4-tangle, whose tangle matroid is itself", small, o::plane_identity),
        suite!("line-bound", "≥ 13 elements: P is the tangle matroid of a weakly 4-connected matroid's 4-tangle iff simple, rank 3, lines ≤ 4", large, o::line_bound),
        suite!("breadth-root", "weakly 4-connected with ≥ 13 elements: breadth² ≥ |E|", large, o::breadth_root),
        suite!("truncation", "the tangle matroid of a truncated tangle is the truncated tangle matroid", small, o::truncation),
    ];
    CATALOG
}

pub fn suite(id: &str) -> Option<&'static Suite> {
    catalog().iter().find(|s| s.id == id)
}

/// Run `id` on a fresh pool built from `selector`. `budget` caps the number of
/// instances; an exhausted budget marks the report incomplete.
pub fn run_suite(id: &str, selector: &Selector, budget: Option<usize>) -> Result<SuiteReport> {
    let s = suite(id).ok_or_else(|| Error::domain(format!("unknown suite {id:?}")))?;
    let pool = Pool::new(selector)?;
    Ok(run_suite_on(s, &pool, budget))
}

/// Run a suite over an existing pool, sharing its cached tangles.
pub fn run_suite_on(s: &Suite, pool: &Pool, budget: Option<usize>) -> SuiteReport {
    let start = Instant::now();
    let limit = budget.unwrap_or(usize::MAX).min(pool.instances.len());
    let chosen = &pool.instances[..limit];
    let tallies = crate::par::map(chosen, |inst| {
        let mut t = Tally::default();
        match (s.check)(inst, &mut t) {
            Ok(()) => {}
            Err(Error::Resource { .. }) => t.skip(),
            Err(e) => t.failures.push(format!("error: {e}")),
        }
        t
    });
    let mut report = SuiteReport {
        suite: s.id.to_string(),
        statement: s.statement.to_string(),
        instances: chosen.len(),
        checks: 0,
        skipped: 0,
        failures: Vec::new(),
        wall_time_ms: 0.0,
        incomplete: limit < pool.instances.len(),
    };
    for (inst, t) in chosen.iter().zip(tallies) {
        report.checks += t.checks;
        report.skipped += t.skipped;
        for w in t.failures {
            report.failures.push(Failure {
                instance: inst.name.clone(),
                fingerprint: format!("{:016x}", inst.matroid.fingerprint().unwrap_or(0)),
                matroid: inst.matroid.expr().clone(),
                witness: w,
            });
        }
    }
    report.wall_time_ms = start.elapsed().as_secs_f64() * 1e3;
    report
}

/// Run every suite on its default selector, sharing pools between suites
/// with the same selector.
pub fn run_all(budget: Option<usize>) -> Result<Vec<SuiteReport>> {
    let mut pools: Vec<Pool> = Vec::new();
    let mut out = Vec::new();
    for s in catalog() {
        let sel = (s.selector)();
        let i = match pools.iter().position(|p| p.selector == sel) {
            Some(i) => i,
            None => {
                pools.push(Pool::new(&sel)?);
                pools.len() - 1
            }
        };
        out.push(run_suite_on(s, &pools[i], budget));
    }
    Ok(out)
}

// ----- shared helpers for suites -----

/// Pairs of subsets: all of them up to ten elements, otherwise a seeded
/// sample.
pub(crate) fn set_pairs(m: &Matroid) -> Box<dyn Iterator<Item = (SubsetMask, SubsetMask)>> {
    let n = m.len();
    if n <= 10 {
        let total = 1u64 << n;
        Box::new((0..total).flat_map(move |a| (0..total).map(move |b| (SubsetMask(a), SubsetMask(b)))))
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(m.fingerprint().unwrap_or(0));
        let full = SubsetMask::full(n).0;
        Box::new((0..200_000).map(move |_| {
            (SubsetMask(rng.gen::<u64>() & full), SubsetMask(rng.gen::<u64>() & full))
        }))
    }
}

pub(crate) fn all_sets(m: &Matroid) -> impl Iterator<Item = SubsetMask> {
    (0..1u64 << m.len()).map(SubsetMask)
}

pub(crate) fn show(m: &Matroid, a: SubsetMask) -> String {
    format!("{{{}}}", m.labels_of(a).join(","))
}

/// Closure in a matroid given by its rank table.
pub(crate) fn table_closure(ranks: &[u8], n: usize, x: SubsetMask) -> SubsetMask {
    let r = ranks[x.index()];
    (0..n)
        .filter(|&i| ranks[x.with(i).index()] == r)
        .fold(x, |c, i| c.with(i))
}

/// `λ(A) ≥ min(|A∩Z|, |Z-A|, k-1)` for every `A`, computed from the λ table.
pub(crate) fn connected_set(lam: &[u8], n: usize, z: SubsetMask, k: usize) -> bool {
    (0..1u64 << n).all(|a| {
        let a = SubsetMask(a);
        let bound = (a & z).len().min((z - a).len()).min(k - 1);
        lam[a.index()] as usize >= bound
    })
}

/// `M` is k-connected in Tutte's sense.
pub(crate) fn k_connected(m: &Matroid, k: usize) -> Result<bool> {
    Ok(connected_set(&m.lambda_table()?, m.len(), m.ground(), k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_ids_are_unique() {
        let mut ids: Vec<&str> = catalog().iter().map(|s| s.id).collect();
        ids.sort_unstable();
        let before = ids.len();
        ids.dedup();
        assert_eq!(before, ids.len());
    }

    #[test]
    fn unknown_suite_and_budget() {
        assert!(matches!(
            run_suite("no-such-suite", &Selector::default(), None),
            Err(Error::Domain(_))
        ));
        let r = run_suite("lambda-symmetry", &Selector::default(), Some(2)).unwrap();
        assert_eq!(r.instances, 2);
        assert!(r.incomplete);
        assert!(!r.passed());
        assert!(r.failures.is_empty());
    }
}
